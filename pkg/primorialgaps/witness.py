"""
Explicit witnesses following the constructive proofs: the gap 2 around
p_k#, the gap 2k, the gap 2*p_{k-1}, and the propagation of a restricted
covering from p_k# to p_{k+1}#.
"""
from .covering import CoprimePair, Covering, ResidueClass, Window
from .errors import ConstructionFailed, NotRestricted
from .ntcore import CongruenceSystem, crt_solve, primes_upto_index, primorial
from sympy import nextprime


def construct_two(k: int) -> CoprimePair:
    """
    The consecutive coprimes p_k# - 1 and p_k# + 1

    :param k: Primorial index, at least 1
    """
    value = primorial(k).value
    pair = CoprimePair(value - 1, value + 1, value)
    if not pair.verify():
        raise ConstructionFailed(f'p_{k}# +- 1 did not verify')
    return pair



def construct_even_2k(k: int) -> Covering:
    """
    Restricted covering of <1>_{2k-1} by p_1, ..., p_k, certifying 2k in D(k).

    1 mod 2 takes every odd position. The even positions 2, 4, ... are then
    taken one prime at a time, always leaving exactly one open position 2y
    behind. The next prime closes either that hole or the next even position,
    whichever keeps it clear of 0 and 2k; the hole is preferred.

    :param k: Primorial index, at least 1
    :raises ConstructionFailed: If the result does not verify
    """
    if k < 1:
        raise ValueError(f'k must be at least 1, got {k}')
    primes = primes_upto_index(k)
    boundary = 2 * k
    classes = [ResidueClass(1, 2)]
    hole = 2
    for x in range(1, k):
        p = primes.p(x + 1)
        next_position = 2 * x + 2
        hole_residue = hole % p
        if x == k - 1 or hole_residue != boundary % p:
            residue = hole_residue
            hole = next_position
        else:
            residue = next_position % p
        if residue == 0 or residue == boundary % p:
            raise ConstructionFailed(f'No admissible residue mod {p} for k={k}')
        classes.append(ResidueClass(residue, p))

    cov = Covering(tuple(classes), Window(1, 2 * k - 1))
    if not cov.verify_restricted():
        raise ConstructionFailed(f'{cov!r} is not a restricted covering')
    return cov



def construct_double_prev_prime(k: int) -> CoprimePair:
    """
    Consecutive coprimes to p_k# at distance 2*p_{k-1}, found around the
    solution a of a = 0 (mod p_{k-2}#), a = 1 (mod p_{k-1}), a = -1 (mod p_k)

    :param k: Primorial index, at least 2
    """
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    modulus = primorial(k).value
    if k == 2:
        pair = CoprimePair(1, 5, modulus)
    else:
        primes = primes_upto_index(k)
        previous = primes.p(k - 1)
        system = CongruenceSystem.of(
            (0, primorial(k - 2).value),
            (1, previous),
            (-1, primes.p(k)),
        )
        a, _ = crt_solve(system)
        x = a - previous
        shift = (x - 1) // modulus * modulus
        pair = CoprimePair(x - shift, a + previous - shift, modulus)
    if not pair.verify():
        raise ConstructionFailed(f'Pair ({pair.x}, {pair.y}) for k={k} did not verify')
    return pair



def lift_to_next_prime(cov: Covering) -> Covering:
    """
    Append the next prime to a restricted covering of <1>_n. The new class is
    the smallest nonzero residue that avoids position n + 1.

    Works for both the full form (over p_1..p_k) and the odd-prime form
    (over p_2..p_k).

    :param cov: Restricted covering of <1>_n
    :raises NotRestricted: If cov is not a restricted covering of <1>_n
    """
    if cov.window.start != 1 or not cov.verify_restricted():
        raise NotRestricted(f'{cov!r} is not a restricted covering of <1>_n')
    largest = max(cov.moduli, default=2)
    p = int(nextprime(largest))
    boundary = (cov.window.length + 1) % p
    residue = next(a for a in range(1, p) if a != boundary)
    lifted = Covering(cov.classes + (ResidueClass(residue, p),), cov.window)
    if not lifted.verify_restricted():
        raise ConstructionFailed(f'{lifted!r} lost the restriction')
    return lifted
