"""
Single place for constants that are used across the package.
"""

from typing import Final, Tuple

SCHEMA_VERSION: Final[str] = "1"
LOGLEVEL_ENV: Final[str] = "GFC_LOGLEVEL"

# --------------------------- relativity modes --------------------------- #
ABSOLUTE: Final[str] = "absolute"
RELATIVE_GL: Final[str] = "relative-gl"
RELATIVE_SO: Final[str] = "relative-so"
RELATIVE_O: Final[str] = "relative-o"
MODES: Final[Tuple[str, ...]] = (ABSOLUTE, RELATIVE_GL, RELATIVE_SO, RELATIVE_O)

REAL: Final[str] = "real"
COMPLEX: Final[str] = "complex"

# --------------------------- feasibility bounds -------------------------- #
# CE cochains are enumerated as subsets of the basis (2**dim of them).
MAX_CE_DIM: Final[int] = 12
# dimension of the tensor space handed to the brute-force invariant solve
MAX_INVARIANT_TENSOR_DIM: Final[int] = 4096
# full enumeration of conjugacy classes
MAX_GROUP_ORDER: Final[int] = 256
# generator count of a truncated Weil algebra
MAX_WEIL_GENERATORS: Final[int] = 40
# symmetric degree for the dense coadjoint solve
MAX_SYM_DEGREE: Final[int] = 8
# permutations are summed over in full; r + s above this is refused
MAX_FORM_ORDER: Final[int] = 5
# cochains of a single degree in a CE or weight-zero complex
MAX_COCHAINS: Final[int] = 20000

# --------------------------- runtime defaults --------------------------- #
DEFAULT_MAX_DEGREE: Final[int] = 6
DEFAULT_JOBS: Final[int] = 1
