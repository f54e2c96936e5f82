"""
CONSTANT Utilities
"""

# Limit Related Constants
MAX_K = 64
ORACLE_CAP_K = 9
SEGMENT_SIZE = 2 ** 22
GAP_CAP = 2 ** 16
DEFAULT_THREADS = 1

# Output Format Related Constants
TABLE = 'table'
CSV = 'csv'
JSON = 'json'
FORMATS = (TABLE, CSV, JSON)

# Witness Related Constants
ODD_PRIME = 'odd-prime'
FULL = 'full'
WITNESS_FILE_VERSION = 1

# Exit Code Related Constants
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# Environment Related Constants
ENV_MAX_K = 'PRIMORIALGAPS_MAX_K'
ENV_ORACLE_CAP = 'PRIMORIALGAPS_ORACLE_CAP'
ENV_THREADS = 'PRIMORIALGAPS_THREADS'
ENV_TIME_BUDGET = 'PRIMORIALGAPS_TIME_BUDGET'
