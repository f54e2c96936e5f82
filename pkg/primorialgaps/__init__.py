from .explorer import Explorer
from .analyzer import DifferenceReport, analyze, check_conjectures, jacobsthal
from .agpa import gap_membership, max_cover_length, search
from .covering import covering_to_coprime_pair, coprime_pair_to_covering, is_restricted
from .oracle import brute_force_spectrum
from .constants import (
    MAX_K, ORACLE_CAP_K, TABLE, CSV, JSON,
    ODD_PRIME, FULL
)

__all__ = [
    'Explorer',
    'DifferenceReport',
    'analyze',
    'check_conjectures',
    'jacobsthal',
    'gap_membership',
    'max_cover_length',
    'search',
    'is_restricted',
    'covering_to_coprime_pair',
    'coprime_pair_to_covering',
    'brute_force_spectrum',
    'constants'
]
