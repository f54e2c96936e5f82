"""
Arithmetic substrate: primes, primorials and the Chinese remainder theorem.
Every function here is pure and works on arbitrary-precision integers.
"""
from .errors import NonCoprimeModuli
from dataclasses import dataclass
from itertools import combinations
from math import gcd, prod
from sympy import isprime, mod_inverse, primorial as sympy_primorial, sieve
import threading

# sympy's sieve is shared and grows in place
_SIEVE_LOCK = threading.Lock()


@dataclass(frozen=True)
class PrimeSet:
    """
    Ordered set of distinct primes. `start_index` is the 1-based index of the
    first element, so that `p(i)` returns p_i.
    """
    primes: tuple[int, ...]
    start_index: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'primes', tuple(int(p) for p in self.primes))
        for left, right in zip(self.primes, self.primes[1:]):
            if left >= right:
                raise ValueError(f'Primes must be strictly increasing: {left}, {right}')
        for p in self.primes:
            if not isprime(p):
                raise ValueError(f'Not a prime: {p}')
        if self.start_index == 1 and self.primes and self.primes[0] != 2:
            raise ValueError('A prime set starting at index 1 must start with 2')



    def __len__(self) -> int:
        return len(self.primes)



    def __iter__(self):
        return iter(self.primes)



    def __getitem__(self, item):
        return self.primes[item]



    def p(self, i: int) -> int:
        """
        Prime with index i (p_1 = 2)

        :param i: 1-based prime index
        """
        offset = i - self.start_index
        if offset < 0 or offset >= len(self.primes):
            raise IndexError(f'p_{i} is not part of this prime set')
        return self.primes[offset]



    @property
    def product(self) -> int:
        """
        Product of all primes in this set
        """
        return prod(self.primes)



    @property
    def last_index(self) -> int:
        """
        Index of the largest prime
        """
        return self.start_index + len(self.primes) - 1



    def odd(self) -> 'PrimeSet':
        """
        The odd primes of this set
        """
        if self.primes and self.primes[0] == 2:
            return PrimeSet(self.primes[1:], self.start_index + 1)
        return self



@dataclass(frozen=True)
class Primorial:
    k: int
    value: int



@dataclass(frozen=True)
class CongruenceSystem:
    """
    Simultaneous congruences x = r_i (mod m_i), stored as (r_i, m_i) pairs
    with 0 <= r_i < m_i
    """
    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple((int(r), int(m)) for r, m in self.entries))
        for residue, modulus in self.entries:
            if modulus < 1:
                raise ValueError(f'Modulus must be positive: {modulus}')
            if not 0 <= residue < modulus:
                raise ValueError(f'Residue {residue} out of range for modulus {modulus}')



    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> 'CongruenceSystem':
        """
        Build a system from (residue, modulus) pairs, reducing every residue

        :param pairs: Unreduced (residue, modulus) pairs
        """
        return cls(tuple((residue % modulus, modulus) for residue, modulus in pairs))



    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(modulus for _, modulus in self.entries)



    def is_pairwise_coprime(self) -> bool:
        """
        Check gcd = 1 on every pair of moduli
        """
        return all(gcd(a, b) == 1 for a, b in combinations(self.moduli, 2))



def primes_upto_index(k: int) -> PrimeSet:
    """
    First k primes p_1 < ... < p_k

    :param k: Number of primes, at least 1
    :return: Prime set starting at p_1 = 2
    """
    if k < 1:
        raise ValueError(f'k must be at least 1, got {k}')
    with _SIEVE_LOCK:
        sieve.extend_to_no(k)
        primes = tuple(int(p) for p in sieve[1:k + 1])
    return PrimeSet(primes)



def primorial(k: int) -> Primorial:
    """
    k-th primorial p_k# = p_1 * ... * p_k

    :param k: Number of factors, at least 1
    """
    if k < 1:
        raise ValueError(f'k must be at least 1, got {k}')
    return Primorial(k, int(sympy_primorial(k, nth=True)))



def crt_solve(system: CongruenceSystem) -> tuple[int, int]:
    """
    Solve a system of congruences with pairwise coprime moduli by combining
    the congruences one by one through modular inverses.

    :param system: Congruences to solve
    :return: (r, M) with 0 <= r < M = product of moduli
    :raises NonCoprimeModuli: If two moduli share a factor
    """
    for (_, a), (_, b) in combinations(system.entries, 2):
        if gcd(a, b) != 1:
            raise NonCoprimeModuli(f'Moduli {a} and {b} share the factor {gcd(a, b)}')

    residue, modulus = 0, 1
    for r, m in system.entries:
        if m == 1:
            continue
        inverse = mod_inverse(modulus, m)
        residue = residue + (r - residue) * int(inverse) * modulus
        modulus *= m
        residue %= modulus
    return residue, modulus
