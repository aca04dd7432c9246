"""Application constants and configuration values."""

from typing import Tuple

# Server identity
SERVER_NAME: str = "Sheaf Cohomology Toolkit"
SERVER_VERSION: str = "0.1.0"

# Fields
DEFAULT_FIELD: str = "rat"
RANDOM_PRESHEAF_PRIME: int = 1009

# Degrees
DEFAULT_MAX_DEGREE: int = 3
HOMOTOPY_MAX_DEGREE: int = 4  # corpus sweeps check degrees 0..3
EULER_EXTRA_DEGREES: int = 3

# Corpus bounds
CORPUS_MAX_VERTICES: int = 4
CORPUS_EXHAUSTIVE_VERTICES: int = 4
CORPUS_UNIFORM_VERTICES: int = 3
CORPUS_CARDINALITIES: Tuple[int, ...] = (1, 2, 3)
CORPUS_RANDOM_SAMPLES: int = 40
CORPUS_MAX_POSET_SIZE: int = 6
CORPUS_RANDOM_PRESHEAVES: int = 100
DEFAULT_SEED: int = 0
RANDOM_AMBIENT_DIM: int = 4

# Nerve of a cover: subcollections are enumerated exhaustively
INTERSECTION_MAX_MEMBERS: int = 16

# Brute-force oracle: maximum number of unknowns (sum of N_alpha over faces)
ORACLE_CONFIGURATION_BOUND: int = 2000

# Output
JSON_INDENT: int = 2
TABLE_WIDTH: int = 100

# Exit codes
EXIT_CHECK_FAILED: int = 1
EXIT_INPUT_ERROR: int = 2
