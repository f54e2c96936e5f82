import sys
sys.path.append('./')

from primorialgaps.covering import (
    CoprimePair, Covering, ResidueClass, Window, covers, is_restricted, relocate, zero_align,
    normalize_nonzero, double_lift, halve_project, to_full_form, covering_to_coprime_pair,
    coprime_pair_to_covering
)
from primorialgaps.errors import (
    DuplicateModulus, EvenLength, EvenModulusPresent, InvalidPair, NoEvenClass, NotACovering,
    NotRestricted
)
from primorialgaps.ntcore import primes_upto_index
from math import gcd, prod
import pytest
import random


def classes(*pairs: tuple[int, int]) -> tuple[ResidueClass, ...]:
    return tuple(ResidueClass(a, p) for a, p in pairs)


def random_covering(rng: random.Random, pool: tuple[int, ...]) -> Covering:
    """
    Random classes over a subset of pool, with the longest window they cover
    from a random start
    """
    primes = sorted(rng.sample(pool, rng.randint(1, len(pool))))
    chosen = tuple(ResidueClass(rng.randrange(p), p) for p in primes)
    start = rng.randrange(-prod(primes), prod(primes))
    length = 0
    while any(c.contains(start + length) for c in chosen):
        length += 1
    return Covering(chosen, Window(start, length))


@pytest.fixture()
def covering_1_7() -> Covering:
    return Covering(classes((1, 2), (2, 3), (4, 5)), Window(1, 5))


class TestModel:
    def test_residue_class_bounds(self):
        with pytest.raises(ValueError):
            ResidueClass(3, 3)
        with pytest.raises(ValueError):
            ResidueClass(1, 4)
        assert ResidueClass(2, 5).contains(12)


    def test_window(self):
        window = Window(3, 4)
        assert list(window.positions()) == [3, 4, 5, 6]
        assert window.before == 2
        assert window.after == 7
        assert list(Window(1, 0).positions()) == []
        with pytest.raises(ValueError):
            Window(1, -1)


    def test_duplicate_moduli(self):
        with pytest.raises(DuplicateModulus):
            Covering(classes((1, 3), (2, 3)), Window(1, 2))
        with pytest.raises(DuplicateModulus):
            covers(classes((1, 3), (2, 3)), Window(1, 2))


    def test_classes_sorted_by_modulus(self):
        cov = Covering(classes((4, 5), (1, 2)), Window(1, 1))
        assert cov.moduli == (2, 5)
        assert cov.modulus == 10
        assert cov.residue_of(5) == 4
        assert cov.residue_of(3) is None


    def test_coprime_pair(self):
        assert CoprimePair(1, 7, 30).verify()
        assert CoprimePair(1, 11, 210).verify()
        assert CoprimePair(29, 31, 30).verify()
        assert not CoprimePair(1, 5, 30).verify()
        assert not CoprimePair(7, 13, 30).verify()
        assert not CoprimePair(7, 7, 30).verify()
        assert CoprimePair(1, 7, 30).gap == 6



class TestPredicates:
    def test_covers(self):
        assert covers(classes((1, 2)), Window(1, 1))
        assert not covers(classes((1, 2)), Window(1, 2))
        assert covers(classes((1, 2), (2, 3), (4, 5)), Window(1, 5))
        assert covers((), Window(5, 0))


    def test_is_restricted(self, covering_1_7: Covering):
        assert is_restricted(covering_1_7.classes, covering_1_7.window)
        assert is_restricted(classes((0, 2)), Window(2, 1))
        assert not is_restricted(classes((1, 2), (2, 3), (4, 7)), Window(1, 3))
        assert not is_restricted(classes((1, 2)), Window(1, 2))



class TestTransformations:
    def test_relocate(self):
        assert relocate(Covering(classes((0, 2)), Window(2, 1)), 1) == Covering(classes((1, 2)), Window(1, 1))
        cov = Covering(classes((1, 2), (2, 3)), Window(1, 3))
        assert relocate(cov, 1) == cov
        moved = relocate(cov, 7)
        assert moved == Covering(classes((1, 2), (2, 3)), Window(7, 3))
        assert covers(moved.classes, moved.window)


    def test_relocate_requires_covering(self):
        with pytest.raises(NotACovering):
            relocate(Covering(classes((1, 2)), Window(1, 2)), 5)


    def test_zero_align(self, covering_1_7: Covering):
        assert zero_align(Covering(classes((1, 2), (2, 3)), Window(1, 3))) == 2
        assert zero_align(Covering(classes((0, 2)), Window(2, 1))) == 0
        b = zero_align(covering_1_7)
        assert b % 2 == 0 and b % 3 == 2 and b % 5 == 2
        assert covers(classes((0, 2), (0, 3), (0, 5)), Window(b, 5))


    def test_normalize_nonzero(self):
        assert normalize_nonzero(Covering(classes((0, 2)), Window(2, 1))) == Covering(classes((1, 2)), Window(1, 1))
        cov = Covering(classes((1, 2)), Window(1, 1))
        assert normalize_nonzero(cov) == cov

        normalized = normalize_nonzero(Covering(classes((0, 2), (0, 3)), Window(2, 3)))
        assert normalized.window == Window(1, 3)
        assert all(c.a != 0 for c in normalized.classes)
        assert covers(normalized.classes, normalized.window)


    def test_normalize_slides_left(self):
        normalized = normalize_nonzero(Covering(classes((0, 2), (0, 3)), Window(3, 2)))
        assert normalized == Covering(classes((1, 2), (2, 3)), Window(1, 2))


    def test_double_lift(self):
        assert double_lift(Covering(classes((2, 3)), Window(2, 1))) == Covering(classes((0, 2), (1, 3)), Window(0, 3))
        empty = double_lift(Covering((), Window(7, 0)))
        assert empty.classes == classes((0, 2))
        assert empty.window.length == 1 and empty.window.start % 2 == 0

        lifted = double_lift(Covering(classes((1, 3), (2, 5)), Window(1, 2)))
        assert lifted.window.length == 5
        assert covers(lifted.classes, lifted.window)


    def test_double_lift_errors(self):
        with pytest.raises(EvenModulusPresent):
            double_lift(Covering(classes((1, 2)), Window(1, 1)))
        with pytest.raises(NotACovering):
            double_lift(Covering(classes((1, 3)), Window(1, 2)))


    def test_halve_project(self):
        assert halve_project(Covering(classes((0, 2), (1, 3)), Window(0, 3))) == Covering(classes((2, 3)), Window(2, 1))
        assert halve_project(Covering(classes((0, 2)), Window(0, 1))) == Covering((), Window(0, 0))


    def test_halve_project_errors(self):
        with pytest.raises(NoEvenClass):
            halve_project(Covering(classes((1, 3)), Window(1, 1)))
        with pytest.raises(EvenLength):
            halve_project(Covering(classes((0, 2), (1, 3)), Window(0, 2)))
        with pytest.raises(NotACovering):
            halve_project(Covering(classes((0, 2)), Window(0, 3)))


    def test_lift_then_project_random(self):
        rng = random.Random(314159)
        odd = (3, 5, 7, 11)
        for _ in range(150):
            primes = sorted(rng.sample(odd, rng.randint(1, 4)))
            chosen = tuple(ResidueClass(rng.randrange(p), p) for p in primes)
            start = rng.randrange(prod(primes))
            length = 0
            while any((start + length) % c.p == c.a for c in chosen):
                length += 1
            cov = Covering(chosen, Window(start, length))
            lifted = double_lift(cov)
            assert lifted.window.length == 2 * length + 1
            assert covers(lifted.classes, lifted.window)
            assert halve_project(lifted) == cov


    def test_relocate_round_trip_random(self):
        rng = random.Random(271828)
        odd = (3, 5, 7, 11, 13)
        for _ in range(150):
            cov = random_covering(rng, (2,) + odd)
            target = rng.randint(-500, 500)
            moved = relocate(cov, target)
            assert moved.window == Window(target, cov.window.length)
            assert covers(moved.classes, moved.window)
            assert relocate(moved, cov.window.start) == cov


    def test_normalize_nonzero_random(self):
        rng = random.Random(141421)
        for _ in range(150):
            cov = random_covering(rng, (2, 3, 5, 7, 11))
            normalized = normalize_nonzero(cov)
            assert normalized.window == Window(1, cov.window.length)
            assert normalized.moduli == cov.moduli
            assert covers(normalized.classes, normalized.window)
            assert all(c.a != 0 for c in normalized.classes)
            assert not any(c.contains(0) for c in normalized.classes)



class TestCoprimePairs:
    def test_pair_from_full_form(self, covering_1_7: Covering):
        assert covering_to_coprime_pair(covering_1_7, primes_upto_index(3)) == CoprimePair(1, 7, 30)
        assert covering_to_coprime_pair(Covering(classes((1, 2)), Window(1, 1)), primes_upto_index(1)) == CoprimePair(1, 3, 2)


    def test_pair_from_odd_form(self, covering_1_7: Covering):
        odd = Covering(classes((1, 3), (2, 5)), Window(1, 2))
        assert to_full_form(odd) == covering_1_7
        assert covering_to_coprime_pair(odd, primes_upto_index(3)) == CoprimePair(1, 7, 30)


    def test_empty_odd_form(self):
        full = to_full_form(Covering((), Window(1, 0)))
        assert full == Covering(classes((1, 2)), Window(1, 1))
        assert covering_to_coprime_pair(Covering((), Window(1, 0)), primes_upto_index(1)).gap == 2


    def test_pair_errors(self):
        not_restricted = Covering(classes((1, 2), (2, 3), (0, 5)), Window(1, 3))
        with pytest.raises(NotRestricted):
            covering_to_coprime_pair(not_restricted, primes_upto_index(3))
        with pytest.raises(NotRestricted):
            covering_to_coprime_pair(Covering(classes((1, 2), (2, 3)), Window(1, 3)), primes_upto_index(3))
        with pytest.raises(NotRestricted):
            to_full_form(Covering(classes((1, 3)), Window(1, 2)))


    def test_covering_from_pair(self, covering_1_7: Covering):
        assert coprime_pair_to_covering(CoprimePair(1, 7, 30), primes_upto_index(3)) == covering_1_7
        assert coprime_pair_to_covering(CoprimePair(1, 3, 2), primes_upto_index(1)) == Covering(classes((1, 2)), Window(1, 1))
        cov = coprime_pair_to_covering(CoprimePair(29, 31, 30), primes_upto_index(3))
        assert cov.window == Window(1, 1)
        assert cov.verify_restricted()


    def test_covering_from_invalid_pair(self):
        with pytest.raises(InvalidPair):
            coprime_pair_to_covering(CoprimePair(1, 5, 30), primes_upto_index(3))
        with pytest.raises(InvalidPair):
            coprime_pair_to_covering(CoprimePair(1, 7, 30), primes_upto_index(4))


    def test_every_pair_of_a_period(self):
        for k in range(1, 5):
            primes = primes_upto_index(k)
            modulus = primes.product
            coprimes = [n for n in range(1, modulus + 2) if gcd(n, modulus) == 1]
            for x, y in zip(coprimes, coprimes[1:]):
                cov = coprime_pair_to_covering(CoprimePair(x, y, modulus), primes)
                assert cov.window == Window(1, y - x - 1)
                assert covering_to_coprime_pair(cov, primes) == CoprimePair(x, y, modulus)
