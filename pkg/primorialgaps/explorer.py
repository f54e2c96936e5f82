from .__logger import GapLogger
from .__interface import WorkerPoolInterface
from .analyzer import ConjectureFlags, DifferenceReport, WitnessCache, analyze, check_conjectures
from .agpa import gap_membership
from .constants import DEFAULT_THREADS, GAP_CAP, MAX_K, ORACLE_CAP_K, SEGMENT_SIZE
from .covering import CoprimePair, Covering, coprime_pair_to_covering, covering_to_coprime_pair
from .errors import SearchTimeout
from .ntcore import primes_upto_index
from .oracle import GapSpectrum, brute_force_spectrum
from .utils import dictutils
from .witness import construct_two
from dataclasses import dataclass
from typing import Optional, Union
import logging
import time


@dataclass(frozen=True)
class TableRun:
    """
    Rows computed by `Explorer.table`. `completed` is False when the time
    budget ran out; the rows are then the finished prefix.
    """
    reports: tuple[DifferenceReport, ...]
    completed: bool



@dataclass(frozen=True)
class MembershipResult:
    k: int
    m: int
    present: bool
    covering: Optional[Covering] = None
    pair: Optional[CoprimePair] = None
    note: str = ''



@dataclass(frozen=True)
class Comparison:
    spectrum: GapSpectrum
    report: DifferenceReport
    mismatches: tuple[int, ...]

    @property
    def match(self) -> bool:
        return not self.mismatches



class Explorer:
    def __init__(self,
                 enable_logging: bool = False,
                 debug: bool = False,
                 threads: int = DEFAULT_THREADS,
                 time_budget: Union[None, float] = None,
                 **kwargs) -> None:
        '''
        Create an explorer from which the differences of coprimes to primorials
        can be analyzed. Rows are computed in k-order and share one witness cache.

        :param enable_logging: Enable logging, configuration can be set by passing in a config dictionary
        :param debug: Set debug to true
        :param threads: Worker processes for membership searches
        :param time_budget: Seconds a `table` run may take, None for no limit
        :param config: Config dictionary which will take priority. See sample config.

        ```python
        default_config = {
            'logging': {
                'format': '%(asctime)s [%(levelname)s] - %(message)s.',
                'file': 'primorialgaps.log',
                'level': logging.INFO if not debug else logging.DEBUG
            },
            'limits': {
                'max_k': 64,
                'oracle_cap': 9,
                'segment_size': 4194304,
                'gap_cap': 65536
            }
        }
        ```
        '''
        custom_config = kwargs.get('config', {})
        self.logger = None
        self.__intialize_logger(enable_logging, debug, custom_config)

        self.__max_k = int(dictutils.get(custom_config, 'limits', 'max_k', default=MAX_K))
        self.__oracle_cap = int(dictutils.get(custom_config, 'limits', 'oracle_cap', default=ORACLE_CAP_K))
        self.__segment_size = int(dictutils.get(custom_config, 'limits', 'segment_size', default=SEGMENT_SIZE))
        self.__gap_cap = int(dictutils.get(custom_config, 'limits', 'gap_cap', default=GAP_CAP))
        self.__time_budget = time_budget
        self.__pool = WorkerPoolInterface(threads, self.logger)

        self._cache = WitnessCache()
        self._reports: list[DifferenceReport] = []
        self._witnesses: dict[tuple[int, int], Covering] = {}



    @property
    def pool(self):
        """
        Worker pool interface
        """
        return self.__pool



    @property
    def max_k(self) -> int:
        """
        Largest k this explorer accepts
        """
        return self.__max_k



    @property
    def oracle_cap(self) -> int:
        """
        Largest k the oracle may sieve
        """
        return self.__oracle_cap



    @property
    def reports(self) -> list[DifferenceReport]:
        """
        Rows computed so far, k = 1, 2, ...
        """
        return list(self._reports)



    def __intialize_logger(self, enabled: bool, debug: bool, config: dict):
        """
        Initialize logger. `debug` variable will take priority
        """
        default_format = '%(asctime)s [%(levelname)s] - %(message)s.'
        default_file = 'primorialgaps.log'
        format = dictutils.get(config, 'logging', 'format', default=default_format)
        file = dictutils.get(config, 'logging', 'file', default=default_file)
        if not debug:
            level = dictutils.get(config, 'logging', 'level', default=logging.INFO)
        else:
            level = logging.DEBUG

        self.logger = GapLogger(__name__, enabled=enabled or debug)
        if self.logger.enabled:
            logging_format = logging.Formatter(format)
            main_handler = logging.FileHandler(file, delay=True)
            main_handler.setFormatter(logging_format)
            self.logger.addHandler(main_handler)
        self.logger.setLevel(level)
        self.logger.info('Logger initialized.')



    def _validate_k(self, k: int):
        """
        Check if k is within 1..max_k

        :raises ValueError: If k is out of range
        """
        if not 1 <= k <= self.__max_k:
            raise ValueError(f'k must be between 1 and {self.__max_k}, got {k}')



    def __deadline(self) -> Optional[float]:
        if self.__time_budget is None:
            return None
        return time.time() + self.__time_budget



    def __extend(self, k: int, deadline: Optional[float]):
        """
        Compute rows up to k, continuing the cached chain
        """
        while len(self._reports) < k:
            next_k = len(self._reports) + 1
            report = analyze(next_k, self._cache, self.__pool, deadline, self.logger)
            self._reports.append(report)
            for m, cov in self._cache.witnesses.items():
                self._witnesses[(next_k, m)] = cov



    def analyze(self, k: int) -> DifferenceReport:
        """
        Row for k. Missing rows below k are computed first.

        :param k: Primorial index
        :raises SearchTimeout: If the time budget runs out
        """
        self._validate_k(k)
        self.__extend(k, self.__deadline())
        return self._reports[k - 1]



    def table(self, kmax: int) -> TableRun:
        """
        Rows k = 1..kmax. When the time budget runs out the row in progress
        is dropped and the finished prefix is returned.

        :param kmax: Last row
        """
        self._validate_k(kmax)
        try:
            self.__extend(kmax, self.__deadline())
        except SearchTimeout as e:
            self.logger.warning(f'[ANALYZE][BUDGET] {e}')
            return TableRun(tuple(self._reports), False)
        return TableRun(tuple(self._reports[:kmax]), True)



    def conjectures(self, kmax: int) -> list[ConjectureFlags]:
        """
        Conjecture audit over the rows 1..kmax
        """
        return check_conjectures(self.table(kmax).reports)



    def membership(self, k: int, m: int) -> MembershipResult:
        """
        Decide if m is a difference of consecutive coprimes to p_k#, with a
        full-form witness covering and the coprime pair it gives

        :param k: Primorial index
        :param m: Candidate difference
        """
        self._validate_k(k)
        if m < 1:
            raise ValueError(f'm must be positive, got {m}')
        primes = primes_upto_index(k)
        if m % 2:
            return MembershipResult(k, m, False, note='odd differences never occur')
        if m == 2:
            pair = construct_two(k)
            return MembershipResult(k, m, True, coprime_pair_to_covering(pair, primes), pair)
        if k == 1:
            return MembershipResult(k, m, False, note='D(1) consists of the single element 2')

        cov = gap_membership(m, k, self.__deadline(), self.logger)
        if cov is None:
            return MembershipResult(k, m, False)
        pair = covering_to_coprime_pair(cov, primes)
        return MembershipResult(k, m, True, coprime_pair_to_covering(pair, primes), pair)



    def oracle(self, k: int, periods: int = 1) -> GapSpectrum:
        """
        Brute-force spectrum of k

        :raises PeriodTooLarge: If k is above the oracle cap
        """
        self._validate_k(k)
        return brute_force_spectrum(k, self.__oracle_cap, self.__segment_size,
                                    self.__gap_cap, periods, self.logger)



    def compare(self, k: int) -> Comparison:
        """
        Compare the oracle with the search on every even number up to h(k)
        """
        spectrum = self.oracle(k)
        report = self.analyze(k)
        upto = max(report.h, spectrum.n_max)
        mismatches = tuple(m for m in range(2, upto + 1, 2)
                           if report.contains(m) != (m in spectrum.gaps))
        if mismatches:
            self.logger.error(f'[ORACLE][COMPARE] k={k} differs at {list(mismatches)}')
        return Comparison(spectrum, report, mismatches)



    def witnesses(self) -> dict[tuple[int, int], Covering]:
        """
        Every witness computed so far, keyed by (k, m), in odd-prime form
        """
        return dict(self._witnesses)



    def cleanup(self):
        """
        Perform cleanup for graceful exit
        """
        self.logger.info('Performing cleanup routines.')
        self.__pool.cleanup()
        self.logger.info('Cleanup finished.')
