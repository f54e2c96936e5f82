import sys
sys.path.append('./')

from primorialgaps.errors import NonCoprimeModuli
from primorialgaps.ntcore import CongruenceSystem, PrimeSet, crt_solve, primes_upto_index, primorial
import pytest
import random


class TestPrimes:
    def test_first_primes(self):
        assert primes_upto_index(1).primes == (2,)
        assert primes_upto_index(6).primes == (2, 3, 5, 7, 11, 13)


    def test_one_based_indexing(self):
        primes = primes_upto_index(44)
        assert primes.p(1) == 2
        assert primes.p(6) == 13
        assert primes.p(44) == 193
        assert primes.last_index == 44
        with pytest.raises(IndexError):
            primes.p(45)


    def test_odd_part_keeps_indices(self):
        odd = primes_upto_index(4).odd()
        assert odd.primes == (3, 5, 7)
        assert odd.start_index == 2
        assert odd.p(2) == 3
        assert odd.product == 105


    def test_invalid_sets(self):
        with pytest.raises(ValueError):
            PrimeSet((3, 5))
        with pytest.raises(ValueError):
            PrimeSet((2, 4))
        with pytest.raises(ValueError):
            PrimeSet((2, 5, 3))
        assert PrimeSet((3, 5), start_index=2).primes == (3, 5)


    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            primes_upto_index(0)
        with pytest.raises(ValueError):
            primorial(0)



class TestPrimorial:
    def test_values(self):
        assert primorial(1).value == 2
        assert primorial(4).value == 210
        assert primorial(5).value == 2310
        assert primorial(9).value == 223092870


    def test_matches_prime_product(self):
        for k in range(1, 20):
            assert primorial(k).value == primes_upto_index(k).product
            assert primorial(k).value % 2 == 0



class TestCrt:
    def test_known_values(self):
        assert crt_solve(CongruenceSystem.of((0, 2), (1, 3))) == (4, 6)
        assert crt_solve(CongruenceSystem.of((0, 2), (1, 3), (4, 5))) == (4, 30)
        assert crt_solve(CongruenceSystem.of((2, 3), (3, 5), (2, 7))) == (23, 105)


    def test_empty_system(self):
        assert crt_solve(CongruenceSystem()) == (0, 1)
        assert crt_solve(CongruenceSystem.of((5, 1), (2, 3))) == (2, 3)


    def test_residues_are_reduced(self):
        system = CongruenceSystem.of((-1, 5), (7, 3))
        assert system.entries == ((4, 5), (1, 3))
        with pytest.raises(ValueError):
            CongruenceSystem(((5, 5),))


    def test_non_coprime_moduli(self):
        system = CongruenceSystem.of((1, 4), (3, 6))
        assert not system.is_pairwise_coprime()
        with pytest.raises(NonCoprimeModuli):
            crt_solve(system)


    def test_random_systems(self):
        rng = random.Random(20240501)
        pool = primes_upto_index(25).primes
        for _ in range(200):
            moduli = rng.sample(pool, rng.randint(1, 8))
            pairs = [(rng.randrange(-1000, 1000), m) for m in moduli]
            system = CongruenceSystem.of(*pairs)
            assert system.is_pairwise_coprime()
            r, modulus = crt_solve(system)
            assert 0 <= r < modulus
            for residue, m in pairs:
                assert (r - residue) % m == 0


    def test_composite_coprime_moduli(self):
        r, modulus = crt_solve(CongruenceSystem.of((0, 6), (1, 5), (-1, 7)))
        assert modulus == 210
        assert r == 6


    def test_primorial_sized_moduli(self):
        primes = primes_upto_index(44).primes
        r, modulus = crt_solve(CongruenceSystem.of(*((-1, p) for p in primes)))
        assert modulus == primorial(44).value
        assert r == modulus - 1



class TestPackage:
    def test_import(self):
        import primorialgaps
        for name in primorialgaps.__all__:
            assert hasattr(primorialgaps, name), name
        assert primorialgaps.constants.MAX_K == primorialgaps.MAX_K
