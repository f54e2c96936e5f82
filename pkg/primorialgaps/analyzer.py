"""
Per-k analysis of D(k): Jacobsthal value, N_min, the missing differences and
the conjectures about them.
"""
from .__interface import WorkerPoolInterface
from .__logger import GapLogger, resolve_logger
from .agpa import gap_membership, max_cover_length
from .covering import Covering, Window
from .errors import ConstructionFailed, GapInReportSequence
from .ntcore import primes_upto_index
from .witness import lift_to_next_prime
from dataclasses import dataclass, field
from typing import Optional, Sequence
import time


@dataclass(frozen=True)
class DifferenceReport:
    """
    One row of results: k, p_k, h(k-1), N_min(k), missing differences, h(k)
    """
    k: int
    p_k: int
    h_prev: Optional[int]
    n_min: int
    missing: tuple[int, ...]
    h: int
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'missing', tuple(sorted(self.missing)))
        if self.n_min > self.h:
            raise ValueError(f'N_min {self.n_min} exceeds h {self.h} for k={self.k}')
        if self.n_min < 2 * self.k:
            raise ValueError(f'N_min {self.n_min} is below 2k = {2 * self.k}')
        for m in self.missing:
            if m <= self.n_min:
                raise ValueError(f'Missing difference {m} is not above N_min {self.n_min}')
            if m >= self.h:
                raise ValueError(f'Missing difference {m} is not below h {self.h}')



    def contains(self, m: int) -> bool:
        """
        Check if m is a difference of consecutive coprimes to p_k#
        """
        return m % 2 == 0 and 2 <= m <= self.h and m not in self.missing



    def to_dict(self) -> dict:
        return {
            'k': self.k,
            'p_k': self.p_k,
            'h_prev': self.h_prev,
            'n_min': self.n_min,
            'missing': list(self.missing),
            'h': self.h,
            'elapsed': self.elapsed,
        }



    @classmethod
    def from_dict(cls, data: dict) -> 'DifferenceReport':
        return cls(
            k=int(data['k']),
            p_k=int(data['p_k']),
            h_prev=None if data.get('h_prev') is None else int(data['h_prev']),
            n_min=int(data['n_min']),
            missing=tuple(int(m) for m in data.get('missing', ())),
            h=int(data['h']),
            elapsed=float(data.get('elapsed', 0.0)),
        )



@dataclass(frozen=True)
class ConjectureFlags:
    k: int
    conjecture_holds: bool
    de_polignac_holds: bool
    corollary_holds: bool
    equivalence_holds: bool



class WitnessCache:
    def __init__(self) -> None:
        """
        Verified odd-prime restricted coverings of one level k, keyed by the
        difference m they certify. Empty until the first level is stored.
        """
        self._k = 0
        self._h = None
        self._witnesses: dict[int, Covering] = {}



    @property
    def k(self) -> int:
        """
        Level the witnesses are valid for, 0 when empty
        """
        return self._k



    @property
    def h(self) -> Optional[int]:
        """
        Jacobsthal value of the stored level
        """
        return self._h



    @property
    def witnesses(self) -> dict[int, Covering]:
        return dict(self._witnesses)



    def get(self, m: int) -> Optional[Covering]:
        return self._witnesses.get(m)



    def advance(self, k: int, h: int, witnesses: dict[int, Covering]):
        """
        Replace the stored level

        :param k: New level
        :param h: h(k)
        :param witnesses: Coverings certifying each present difference
        :raises ConstructionFailed: If a covering is not restricted
        """
        for m, cov in witnesses.items():
            if cov.window != Window(1, m // 2 - 1) or not cov.verify_restricted():
                raise ConstructionFailed(f'Witness {cov!r} does not certify m={m} at k={k}')
        self._k = k
        self._h = h
        self._witnesses = dict(witnesses)



    def clear(self):
        self._k = 0
        self._h = None
        self._witnesses = {}



def _membership_task(task: tuple[int, int, Optional[float]]) -> Optional[Covering]:
    m, k, deadline = task
    return gap_membership(m, k, deadline)



def jacobsthal(k: int, deadline: Optional[float] = None, logger: Optional[GapLogger] = None) -> int:
    """
    h(k) computed from scratch
    """
    if k == 1:
        return 2
    return 2 * (max_cover_length(k, 0, deadline, logger) + 1)



def analyze(k: int,
            cache: WitnessCache,
            pool: Optional[WorkerPoolInterface] = None,
            deadline: Optional[float] = None,
            logger: Optional[GapLogger] = None) -> DifferenceReport:
    """
    Compute the row for k and move the cache to level k.

    Witnesses cached at level k-1 are lifted to k; every other even m up to
    h(k) is searched. Absence at k-1 says nothing about k, so it always
    triggers a fresh search.

    :param k: Primorial index, at least 1
    :param cache: Witnesses of level k-1, or an empty cache
    :param pool: Optional worker pool for the fresh searches
    :param deadline: Optional `time.time()` deadline
    :param logger: Optional logger
    """
    if k < 1:
        raise ValueError(f'k must be at least 1, got {k}')
    logger = resolve_logger(logger)
    start = time.perf_counter()

    if k == 1:
        # D(1) consists of the single element 2
        cache.advance(1, 2, {2: Covering((), Window(1, 0))})
        return DifferenceReport(1, 2, None, 2, (), 2, time.perf_counter() - start)

    chained = cache.k == k - 1
    h_prev = cache.h if chained else jacobsthal(k - 1, deadline, logger)
    l_max = max_cover_length(k, h_prev // 2 - 1, deadline, logger)
    h = 2 * (l_max + 1)

    witnesses: dict[int, Covering] = {}
    fresh = []
    for m in range(2, h + 1, 2):
        cached = cache.get(m) if chained else None
        if cached is not None:
            witnesses[m] = lift_to_next_prime(cached)
        else:
            fresh.append(m)
    logger.debug(f'[ANALYZE][ROW] k={k} lifted={len(witnesses)} fresh={fresh}')

    tasks = [(m, k, deadline) for m in fresh]
    if pool is not None:
        results = pool.map(_membership_task, tasks)
    else:
        results = [_membership_task(task) for task in tasks]
    for m, cov in zip(fresh, results):
        if cov is not None:
            witnesses[m] = cov

    if h not in witnesses:
        raise ConstructionFailed(f'No witness for h({k}) = {h}')
    n_min = 2
    while n_min + 2 in witnesses:
        n_min += 2
    missing = tuple(m for m in range(2, h, 2) if m not in witnesses)
    cache.advance(k, h, witnesses)

    report = DifferenceReport(k, primes_upto_index(k).p(k), h_prev, n_min, missing, h,
                              time.perf_counter() - start)
    logger.info(f'[ANALYZE][ROW] k={k} h_prev={h_prev} n_min={n_min} missing={list(missing)} '
                f'h={h} in {report.elapsed:.3f} seconds')
    return report



def check_conjectures(reports: Sequence[DifferenceReport]) -> list[ConjectureFlags]:
    """
    Audit consecutive rows k = 1, 2, ... against

    - the conjecture h(k-1) <= N_min(k),
    - de Polignac's presumption 2 * p_{k-1} <= N_min(k),
    - the proven bound 2k <= N_min(k),
    - the equivalence of the conjecture with: every even m < h(k-1) missing
      at k-1 is present at k.

    :param reports: Rows for k = 1, 2, ... without gaps
    :return: Flags for every k > 1
    :raises GapInReportSequence: If the rows are not consecutive from 1
    """
    for index, report in enumerate(reports):
        if report.k != index + 1:
            raise GapInReportSequence(f'Expected row k={index + 1}, found k={report.k}')

    flags = []
    for previous, current in zip(reports, reports[1:]):
        conjecture = previous.h <= current.n_min
        propagation = all(current.contains(m) for m in previous.missing)
        flags.append(ConjectureFlags(
            k=current.k,
            conjecture_holds=conjecture,
            de_polignac_holds=2 * previous.p_k <= current.n_min,
            corollary_holds=2 * current.k <= current.n_min,
            equivalence_holds=conjecture == propagation,
        ))
    return flags
