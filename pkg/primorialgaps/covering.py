"""
Coverings of sequences of consecutive integers by residue classes modulo
distinct primes, restricted coverings, and the structural transformations
between them and pairs of consecutive coprimes.
"""
from .errors import (
    ConstructionFailed, DuplicateModulus, EvenLength, EvenModulusPresent,
    InvalidPair, NoEvenClass, NotACovering, NotRestricted
)
from .ntcore import CongruenceSystem, PrimeSet, crt_solve
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Optional, Sequence
from sympy import isprime


@dataclass(frozen=True, order=True)
class ResidueClass:
    """
    Residue class a (mod p) for a prime p
    """
    a: int
    p: int

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f'Modulus is not a prime: {self.p}')
        if not 0 <= self.a < self.p:
            raise ValueError(f'Residue {self.a} out of range for modulus {self.p}')



    def contains(self, n: int) -> bool:
        """
        Check if n belongs to this class
        """
        return n % self.p == self.a



    def __repr__(self):
        return f'{self.a} mod {self.p}'



@dataclass(frozen=True)
class Window:
    """
    The sequence <start>_length of consecutive integers start, ..., start+length-1
    """
    start: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f'Window length must not be negative: {self.length}')



    def positions(self) -> range:
        return range(self.start, self.start + self.length)



    @property
    def before(self) -> int:
        """
        Position right before the window
        """
        return self.start - 1



    @property
    def after(self) -> int:
        """
        Position right after the window
        """
        return self.start + self.length



    def __repr__(self):
        return f'<{self.start}>_{self.length}'



@dataclass(frozen=True)
class Covering:
    """
    Residue classes over pairwise distinct primes together with the window
    they are meant to cover. Classes are kept sorted by modulus.
    """
    classes: tuple[ResidueClass, ...]
    window: Window

    def __post_init__(self):
        classes = tuple(sorted(self.classes, key=lambda c: c.p))
        _check_distinct(classes)
        object.__setattr__(self, 'classes', classes)



    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(c.p for c in self.classes)



    @property
    def modulus(self) -> int:
        """
        Product of all moduli
        """
        return prod(self.moduli)



    def residue_of(self, p: int) -> Optional[int]:
        """
        Residue assigned to prime p, None if p is not used
        """
        for c in self.classes:
            if c.p == p:
                return c.a
        return None



    def verify_restricted(self) -> bool:
        return is_restricted(self.classes, self.window)



    def __repr__(self):
        classes = ', '.join(repr(c) for c in self.classes)
        return f'Covering <{{{classes}}} on {self.window!r}>'



@dataclass(frozen=True)
class CoprimePair:
    """
    Consecutive coprimes x < y to `modulus`
    """
    x: int
    y: int
    modulus: int

    @property
    def gap(self) -> int:
        return self.y - self.x



    def verify(self) -> bool:
        """
        Check x < y, both coprime to the modulus, and every integer strictly
        between them sharing a factor with it
        """
        if self.x >= self.y:
            return False
        if gcd(self.x, self.modulus) != 1 or gcd(self.y, self.modulus) != 1:
            return False
        return all(gcd(z, self.modulus) > 1 for z in range(self.x + 1, self.y))



def _check_distinct(classes: Iterable[ResidueClass]):
    seen = set()
    for c in classes:
        if c.p in seen:
            raise DuplicateModulus(f'Modulus {c.p} used more than once')
        seen.add(c.p)



def _hits(classes: Sequence[ResidueClass], n: int) -> bool:
    return any(n % c.p == c.a for c in classes)



def covers(classes: Sequence[ResidueClass], window: Window) -> bool:
    """
    Check if every position of the window belongs to one of the classes

    :param classes: Residue classes with pairwise distinct moduli
    :param window: Window to cover
    :raises DuplicateModulus: If two classes share a prime
    """
    _check_distinct(classes)
    return all(_hits(classes, n) for n in window.positions())



def is_restricted(classes: Sequence[ResidueClass], window: Window) -> bool:
    """
    Check if the classes cover the window but neither of the two positions
    right outside of it

    :param classes: Residue classes with pairwise distinct moduli
    :param window: Window to cover
    :raises DuplicateModulus: If two classes share a prime
    """
    if not covers(classes, window):
        return False
    return not _hits(classes, window.before) and not _hits(classes, window.after)



def _require_covering(cov: Covering):
    if not covers(cov.classes, cov.window):
        raise NotACovering(f'{cov!r} does not cover its window')



def relocate(cov: Covering, new_start: int) -> Covering:
    """
    Move a covering to the window <new_start>_m by shifting every residue

    :param cov: Covering to move
    :param new_start: First position of the new window
    :raises NotACovering: If cov does not cover its window
    """
    _require_covering(cov)
    shift = new_start - cov.window.start
    classes = tuple(ResidueClass((c.a + shift) % c.p, c.p) for c in cov.classes)
    return Covering(classes, Window(new_start, cov.window.length))



def zero_align(cov: Covering) -> int:
    """
    Find b such that the all-zero classes over the same primes cover <b>_m

    :param cov: Covering over distinct primes
    :return: b reduced modulo the product of the moduli
    :raises NotACovering: If cov does not cover its window
    """
    _require_covering(cov)
    system = CongruenceSystem.of(*((cov.window.start - c.a, c.p) for c in cov.classes))
    b, _ = crt_solve(system)
    return b



def normalize_nonzero(cov: Covering) -> Covering:
    """
    Slide the window left while the position before it is covered, then move
    it to <1>_m. No residue of the result is zero.

    :param cov: Covering to normalize
    :raises NotACovering: If cov does not cover its window
    """
    _require_covering(cov)
    start = cov.window.start
    while _hits(cov.classes, start - 1):
        start -= 1
    slid = Covering(cov.classes, Window(start, cov.window.length))
    return relocate(slid, 1)



def double_lift(cov: Covering) -> Covering:
    """
    Add the prime 2: a covering of <a>_m by odd primes becomes a covering of
    <b>_{2m+1} with the classes 0 mod 2 and 2*a_i mod p_i.

    :param cov: Covering using odd primes only
    :raises EvenModulusPresent: If 2 is one of the moduli
    :raises NotACovering: If cov does not cover its window
    """
    if 2 in cov.moduli:
        raise EvenModulusPresent('double_lift expects odd moduli only')
    _require_covering(cov)
    a = cov.window.start
    system = CongruenceSystem.of((0, 2), *((2 * a - 1, c.p) for c in cov.classes))
    b, _ = crt_solve(system)
    classes = (ResidueClass(0, 2),) + tuple(ResidueClass(2 * c.a % c.p, c.p) for c in cov.classes)
    lifted = Covering(classes, Window(b, 2 * cov.window.length + 1))
    if not covers(lifted.classes, lifted.window):
        raise ConstructionFailed(f'Lifted covering {lifted!r} does not cover its window')
    return lifted



def halve_project(cov: Covering) -> Covering:
    """
    Remove the prime 2: a covering of <b>_{2m+1} containing a class mod 2
    becomes a covering of a length m window by the odd primes alone.

    :param cov: Covering with exactly one class mod 2 and an odd window length
    :raises NoEvenClass: If no class has modulus 2
    :raises EvenLength: If the window length is even
    :raises NotACovering: If cov does not cover its window
    """
    even = cov.residue_of(2)
    if even is None:
        raise NoEvenClass('halve_project expects a class mod 2')
    if cov.window.length % 2 == 0:
        raise EvenLength(f'Window length {cov.window.length} is even')
    _require_covering(cov)

    half = cov.window.length // 2
    b = cov.window.start
    # positions of the other parity are left to the odd primes
    first_free = b + 1 if b % 2 == even else b
    odd_classes = tuple(c for c in cov.classes if c.p != 2)
    system = CongruenceSystem.of(*((first_free * (c.p + 1) // 2, c.p) for c in odd_classes))
    a, _ = crt_solve(system)
    classes = tuple(ResidueClass(c.a * (c.p + 1) // 2 % c.p, c.p) for c in odd_classes)
    projected = Covering(classes, Window(a, half))
    if not covers(projected.classes, projected.window):
        raise ConstructionFailed(f'Projected covering {projected!r} does not cover its window')
    return projected



def to_full_form(cov: Covering) -> Covering:
    """
    Turn a restricted covering of <1>_L by odd primes into the restricted
    covering of <1>_{2L+1} that also uses the prime 2

    :param cov: Odd-prime restricted covering of <1>_L
    :raises NotRestricted: If cov is not a restricted covering of <1>_L
    """
    if cov.window.start != 1 or not cov.verify_restricted():
        raise NotRestricted(f'{cov!r} is not a restricted covering of <1>_L')
    full = relocate(double_lift(cov), 1)
    if not full.verify_restricted():
        raise ConstructionFailed(f'{full!r} lost the restriction')
    return full



def covering_to_coprime_pair(cov: Covering, primes: PrimeSet) -> CoprimePair:
    """
    Derive the consecutive coprimes x < y around a restricted covering of
    <1>_L. Odd-prime coverings are lifted to full form first.

    :param cov: Restricted covering of <1>_L over primes (or over its odd part)
    :param primes: p_1, ..., p_k
    :return: Pair with the least positive x and y = x + L + 1
    :raises NotRestricted: If cov is not a restricted covering of <1>_L
    """
    if 2 not in cov.moduli and cov.moduli == primes.odd().primes:
        cov = to_full_form(cov)
    if cov.moduli != primes.primes:
        raise NotRestricted(f'Moduli {cov.moduli} do not match p_1..p_{len(primes)}')
    if cov.window.start != 1 or not cov.verify_restricted():
        raise NotRestricted(f'{cov!r} is not a restricted covering of <1>_L')

    x, modulus = crt_solve(CongruenceSystem.of(*((-c.a, c.p) for c in cov.classes)))
    if x == 0:
        x = modulus
    pair = CoprimePair(x, x + cov.window.length + 1, modulus)
    if not pair.verify():
        raise ConstructionFailed(f'Derived pair ({pair.x}, {pair.y}) is not consecutive coprime')
    return pair



def coprime_pair_to_covering(pair: CoprimePair, primes: PrimeSet) -> Covering:
    """
    Restricted covering of <1>_{y-x-1} given by a_i = -x (mod p_i)

    :param pair: Consecutive coprimes to the product of primes
    :param primes: Primes of the modulus
    :raises InvalidPair: If the pair is not consecutive coprime to the product
    """
    if pair.modulus != primes.product:
        raise InvalidPair(f'Pair modulus {pair.modulus} is not the product of {primes.primes}')
    if not pair.verify():
        raise InvalidPair(f'({pair.x}, {pair.y}) are not consecutive coprimes to {pair.modulus}')
    classes = tuple(ResidueClass(-pair.x % p, p) for p in primes)
    cov = Covering(classes, Window(1, pair.gap - 1))
    if not cov.verify_restricted():
        raise ConstructionFailed(f'{cov!r} is not restricted')
    return cov
