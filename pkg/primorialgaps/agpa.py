"""
Adapted Greedy Permutation Algorithm: complete backtracking search for
residue classes modulo odd primes covering the positions 1..L, with every
prime barred from a set of forbidden residues.

Free positions are an integer bitmap (bit n is position n). A frequency
table counts, for every remaining prime and residue, how many free positions
the residue would take. At each level the residue taking the most positions
is tried first; afterwards it is discarded on that level and the next best
one is tried. A level is abandoned once the remaining primes together cannot
take as many positions as are still free.
"""
from .__logger import GapLogger, resolve_logger
from .covering import Covering, ResidueClass, Window
from .errors import ConstructionFailed, OddGap, SearchTimeout
from .ntcore import primes_upto_index
from .utils import mathutil
from dataclasses import dataclass
from typing import Optional
import time

# Count given to forbidden and discarded residues; stays negative under decrements
EXCLUDED = -(1 << 62)
# Nodes between two deadline checks
DEADLINE_STRIDE = 1024


@dataclass(frozen=True)
class SearchProblem:
    """
    Cover positions 1..length with one residue class per prime, residue of
    primes[i] avoiding forbidden[i]
    """
    length: int
    primes: tuple[int, ...]
    forbidden: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f'Length must not be negative: {self.length}')
        if len(self.forbidden) != len(self.primes):
            raise ValueError('One forbidden set per prime is required')
        if len(set(self.primes)) != len(self.primes):
            raise ValueError('Primes must be distinct')
        for p, excluded in zip(self.primes, self.forbidden):
            if p % 2 == 0:
                raise ValueError(f'Only odd primes are searched, got {p}')
            if any(not 0 <= r < p for r in excluded):
                raise ValueError(f'Forbidden residues out of range for {p}: {sorted(excluded)}')



    @classmethod
    def for_length(cls, length: int, primes: tuple[int, ...]) -> 'SearchProblem':
        """
        Plain covering of <1>_length by nonzero residues
        """
        return cls(length, tuple(primes), tuple(frozenset({0}) for _ in primes))



    @classmethod
    def for_gap(cls, m: int, primes: tuple[int, ...]) -> 'SearchProblem':
        """
        Restricted covering of <1>_{m/2-1}: positions 0 and m/2 stay free
        """
        half = m // 2
        return cls(half - 1, tuple(primes), tuple(frozenset({0, half % p}) for p in primes))



    def admissible(self, index: int) -> list[int]:
        """
        Residues allowed for primes[index], ascending
        """
        p = self.primes[index]
        return [r for r in range(p) if r not in self.forbidden[index]]



class FrequencyTable:
    def __init__(self, counts: list[list[int]], remaining: tuple[int, ...]) -> None:
        """
        Free-position counts per prime slot and residue.

        :param counts: counts[slot][residue], excluded residues hold a large negative value
        :param remaining: Slots whose prime has no class yet
        """
        self._counts = counts
        self._remaining = remaining



    @classmethod
    def fill(cls, problem: SearchProblem) -> 'FrequencyTable':
        """
        Table for an empty array: every position 1..L is free
        """
        counts = []
        for p, excluded in zip(problem.primes, problem.forbidden):
            row = [0] * p
            for position in range(1, problem.length + 1):
                row[position % p] += 1
            for r in excluded:
                row[r] = EXCLUDED
            counts.append(row)
        return cls(counts, tuple(range(len(problem.primes))))



    @property
    def remaining(self) -> tuple[int, ...]:
        return self._remaining



    def count(self, slot: int, residue: int) -> int:
        return self._counts[slot][residue]



    def copy(self) -> 'FrequencyTable':
        counts = list(self._counts)
        for slot in self._remaining:
            counts[slot] = counts[slot][:]
        return FrequencyTable(counts, self._remaining)



    def assign(self, slot: int, positions: list[int], residues: list[tuple[int, ...]]):
        """
        Give slot its class and remove the positions it takes from every
        other remaining slot

        :param slot: Slot receiving a class
        :param positions: Positions newly taken by that class
        :param residues: residues[n][s] is n mod primes[s]
        """
        self._remaining = tuple(s for s in self._remaining if s != slot)
        counts = self._counts
        for position in positions:
            row = residues[position]
            for s in self._remaining:
                counts[s][row[s]] -= 1



    def discard(self, slot: int, residue: int):
        """
        Never select residue for slot again on this level or below
        """
        self._counts[slot][residue] = EXCLUDED



    def best(self) -> tuple[int, int, int, int]:
        """
        Most-covering residue and the coverage bound.

        Ties go to the smaller residue, then to the smaller prime.

        :return: (n_possible, count, slot, residue); slot is -1 if nothing is left
        """
        n_possible = 0
        best_count, best_slot, best_residue = 0, -1, -1
        for slot in self._remaining:
            row = self._counts[slot]
            top = max(row)
            if top <= 0:
                continue
            n_possible += top
            if top < best_count:
                continue
            residue = row.index(top)
            if top > best_count or residue < best_residue:
                best_count, best_slot, best_residue = top, slot, residue
        return n_possible, best_count, best_slot, best_residue



class AdaptedGreedySearch:
    def __init__(self,
                 problem: SearchProblem,
                 deadline: Optional[float] = None,
                 logger: Optional[GapLogger] = None) -> None:
        """
        One exhaustive search over a problem

        :param problem: Problem to solve
        :param deadline: `time.time()` value after which the search aborts
        :param logger: Optional logger
        """
        self.__problem = problem
        self.__deadline = deadline
        self.__logger = resolve_logger(logger)
        self.__length = problem.length
        self.__masks = [
            [mathutil.residue_mask(problem.length, r, p) for r in range(p)]
            for p in problem.primes
        ]
        self.__residues = [
            tuple(n % p for p in problem.primes) for n in range(problem.length + 1)
        ]
        self._nodes = 0



    @property
    def problem(self) -> SearchProblem:
        return self.__problem



    @property
    def nodes(self) -> int:
        """
        Number of selections made so far
        """
        return self._nodes



    def run(self) -> Optional[list[ResidueClass]]:
        """
        Search the whole space

        :return: Selected classes covering 1..L, None if there are none
        :raises SearchTimeout: If the deadline passes
        """
        if self.__deadline is not None and time.time() > self.__deadline:
            raise SearchTimeout(f'Search for L={self.__length} started after its deadline')
        start = time.perf_counter()
        table = FrequencyTable.fill(self.__problem)
        free = mathutil.interval_mask(self.__length)
        found = self.__descend(free, self.__length, table, ())
        elapsed = time.perf_counter() - start
        self.__logger.debug(f'[AGPA][SEARCH] L={self.__length} primes={len(self.__problem.primes)} '
                            f'nodes={self._nodes} found={found is not None} in {elapsed:.3f} seconds')
        if found is None:
            return None
        primes = self.__problem.primes
        return [ResidueClass(residue, primes[slot]) for slot, residue in found]



    def __descend(self, free: int, n_empty: int, table: FrequencyTable,
                  chosen: tuple[tuple[int, int], ...]) -> Optional[tuple[tuple[int, int], ...]]:
        if n_empty == 0:
            return chosen
        while True:
            n_possible, count, slot, residue = table.best()
            if slot < 0 or n_possible < n_empty:
                return None
            self.__tick()
            taken = free & self.__masks[slot][residue]
            child = table.copy()
            child.assign(slot, list(mathutil.iter_bits(taken)), self.__residues)
            found = self.__descend(free ^ taken, n_empty - count, child,
                                   chosen + ((slot, residue),))
            if found is not None:
                return found
            table.discard(slot, residue)



    def __tick(self):
        self._nodes += 1
        if self.__deadline is not None and self._nodes % DEADLINE_STRIDE == 0:
            if time.time() > self.__deadline:
                raise SearchTimeout(f'Search for L={self.__length} passed its deadline '
                                    f'after {self._nodes} nodes')



def search(problem: SearchProblem,
           deadline: Optional[float] = None,
           logger: Optional[GapLogger] = None) -> Optional[list[ResidueClass]]:
    """
    Find residue classes covering 1..L which avoid the forbidden residues.

    Only the classes the search selected are returned; primes that were not
    needed are left out (for L = 0 the list is empty).

    :param problem: Problem to solve
    :param deadline: Optional `time.time()` deadline
    :param logger: Optional logger
    :return: Classes, or None once the whole space is exhausted
    :raises SearchTimeout: If the deadline passes
    """
    return AdaptedGreedySearch(problem, deadline, logger).run()



def complete_assignment(problem: SearchProblem, classes: list[ResidueClass]) -> tuple[ResidueClass, ...]:
    """
    Give every prime the search left out its smallest admissible residue
    """
    chosen = {c.p: c for c in classes}
    completed = []
    for index, p in enumerate(problem.primes):
        if p in chosen:
            completed.append(chosen[p])
        else:
            completed.append(ResidueClass(problem.admissible(index)[0], p))
    return tuple(completed)



def odd_primes(k: int) -> tuple[int, ...]:
    """
    p_2, ..., p_k
    """
    return primes_upto_index(k).odd().primes



def gap_membership(m: int, k: int,
                   deadline: Optional[float] = None,
                   logger: Optional[GapLogger] = None) -> Optional[Covering]:
    """
    Decide whether m is a difference of consecutive coprimes to p_k#.

    :param m: Even difference, at least 2
    :param k: Primorial index, at least 2
    :param deadline: Optional `time.time()` deadline
    :param logger: Optional logger
    :return: Restricted covering of <1>_{m/2-1} by p_2..p_k, None if m is not in D(k)
    :raises OddGap: If m is odd
    """
    if m % 2:
        raise OddGap(f'Odd difference {m} never occurs')
    if m < 2:
        raise ValueError(f'm must be at least 2, got {m}')
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    problem = SearchProblem.for_gap(m, odd_primes(k))
    classes = search(problem, deadline, logger)
    if classes is None:
        return None
    cov = Covering(complete_assignment(problem, classes), Window(1, problem.length))
    if not cov.verify_restricted():
        raise ConstructionFailed(f'Search result {cov!r} for m={m}, k={k} is not restricted')
    return cov



def max_cover_length(k: int, start_length: int = 0,
                     deadline: Optional[float] = None,
                     logger: Optional[GapLogger] = None) -> int:
    """
    Longest L such that p_2..p_k cover <1>_L with nonzero residues, so that
    h(k) = 2 * (L + 1). Coverable lengths are closed downwards, so lengths
    are probed upwards until the first failure.

    :param k: Primorial index, at least 2
    :param start_length: A length known to be coverable, usually h(k-1)/2 - 1
    :param deadline: Optional `time.time()` deadline
    :param logger: Optional logger
    """
    if k < 2:
        raise ValueError(f'k must be at least 2, got {k}')
    logger = resolve_logger(logger)
    primes = odd_primes(k)
    length = max(start_length, 0)
    while search(SearchProblem.for_length(length + 1, primes), deadline, logger) is not None:
        length += 1
    logger.debug(f'[AGPA][MAXLEN] k={k} L_max={length}')
    return length
