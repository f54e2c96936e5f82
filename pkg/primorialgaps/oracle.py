"""
Brute-force gap spectrum of the coprimes to p_k#, obtained by sieving one
full period with numpy. Used as ground truth for the search engine.
"""
from .__logger import GapLogger, resolve_logger
from .constants import GAP_CAP, ORACLE_CAP_K, SEGMENT_SIZE
from .errors import PeriodTooLarge
from .ntcore import primes_upto_index, primorial
from dataclasses import dataclass
from typing import Optional
import numpy as np


@dataclass(frozen=True)
class GapSpectrum:
    """
    Set of differences between consecutive coprimes to p_k#
    """
    k: int
    gaps: frozenset[int]
    n_min: int
    n_max: int

    @classmethod
    def from_gaps(cls, k: int, gaps) -> 'GapSpectrum':
        """
        Build a spectrum, deriving N_min and N_max from the gap set

        :param k: Primorial index
        :param gaps: Occurring differences
        """
        gaps = frozenset(int(g) for g in gaps)
        n_min = 0
        while n_min + 2 in gaps:
            n_min += 2
        return cls(k, gaps, n_min, max(gaps))



    @property
    def missing(self) -> list[int]:
        """
        Even numbers below N_max which are not differences
        """
        return [m for m in range(2, self.n_max, 2) if m not in self.gaps]



    def presence(self, upto: int) -> list[bool]:
        """
        Presence of every even number 2, 4, ..., upto
        """
        return [m in self.gaps for m in range(2, upto + 1, 2)]



    def __repr__(self):
        return f'GapSpectrum <k={self.k}, n_min={self.n_min}, n_max={self.n_max}, missing={self.missing}>'



@dataclass(frozen=True)
class SegmentScan:
    """
    What one sieved segment hands over to its neighbours: its first and last
    coprime, and the differences strictly inside it
    """
    first: Optional[int]
    last: Optional[int]
    gaps: frozenset[int]



def scan_segment(low: int, high: int, primes: tuple[int, ...]) -> SegmentScan:
    """
    Sieve [low, high) against the given primes

    :param low: First position
    :param high: Position after the last one
    :param primes: Primes to strike out
    """
    marked = np.zeros(high - low, dtype=bool)
    for p in primes:
        marked[(-low) % p::p] = True
    coprimes = np.flatnonzero(~marked)
    if coprimes.size == 0:
        return SegmentScan(None, None, frozenset())
    gaps = np.unique(np.diff(coprimes))
    return SegmentScan(int(coprimes[0]) + low, int(coprimes[-1]) + low,
                       frozenset(int(g) for g in gaps))



def brute_force_spectrum(k: int,
                         cap_k: int = ORACLE_CAP_K,
                         segment_size: int = SEGMENT_SIZE,
                         gap_cap: int = GAP_CAP,
                         periods: int = 1,
                         logger: Optional[GapLogger] = None) -> GapSpectrum:
    """
    Sieve [1, periods * p_k# + 1] and collect every difference between
    consecutive coprimes to p_k#. One period is enough, the sequence of
    coprimes repeats with period p_k#.

    :param k: Primorial index, at least 1
    :param cap_k: Largest k whose period may be sieved
    :param segment_size: Positions per segment
    :param gap_cap: Upper bound on the differences recorded
    :param periods: Number of periods to scan
    :param logger: Optional logger
    :raises PeriodTooLarge: If k exceeds cap_k
    """
    if k < 1:
        raise ValueError(f'k must be at least 1, got {k}')
    if k > cap_k:
        raise PeriodTooLarge(f'Period p_{k}# is above the oracle cap k <= {cap_k}')
    logger = resolve_logger(logger)
    primes = primes_upto_index(k).primes
    end = periods * primorial(k).value + 2
    presence = np.zeros(gap_cap // 2 + 1, dtype=bool)

    previous_last = None
    segments = 0
    for low in range(1, end, segment_size):
        high = min(low + segment_size, end)
        scan = scan_segment(low, high, primes)
        segments += 1
        if scan.first is None:
            continue
        gaps = set(scan.gaps)
        # hand-off: the difference across the segment border
        if previous_last is not None:
            gaps.add(scan.first - previous_last)
        previous_last = scan.last
        for gap in gaps:
            if gap > gap_cap:
                raise PeriodTooLarge(f'Difference {gap} exceeds the gap cap {gap_cap}')
            presence[gap // 2] = True

    gaps = {2 * int(i) for i in np.flatnonzero(presence)}
    logger.debug(f'[ORACLE][SEGMENT] k={k} segments={segments}')
    spectrum = GapSpectrum.from_gaps(k, gaps)
    logger.info(f'[ORACLE][SPECTRUM] {spectrum!r}')
    return spectrum
