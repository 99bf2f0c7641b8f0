"""Constants for the exact Zernike library."""

# Gauss-Legendre node count for 1D radial integrals
DEFAULT_QUADRATURE_ORDER = 64

# Node count per axis for ball and sphere product grids
DEFAULT_GRID_ORDER = 16

# Absolute tolerances for numeric oracles
PAIR_TOLERANCE = 1e-13
TRIPLE_TOLERANCE = 1e-11
CROSS_EVAL_TOLERANCE = 1e-11
SPHERE_TOLERANCE = 1e-10

# Random sample points
DEFAULT_SEED = 20240607
DEFAULT_SAMPLES = 100

# Binary digits for surd -> float conversion in checks
DEFAULT_FLOAT_PRECISION = 113

# Default ranges per table family and suite
DEFAULT_RANGES = {
    "radial2d": {"nmax": 13},
    "h": {"jmax": 14},
    "noll": {"nmax": 10},
    "trig": {"jmax": 4},
    "rjcart": {"jmax": 5},
    "cart2z2d": {"jmax": 8},
    "z2cart2d": {"nmax": 9},
    "g": {"nmax": 8},
    "radial3d": {"nmax": 13},
    "f": {"jmax": 13},
    "fhat": {"nmax": 13},
    "ylmcart": {"lmax": 6},
    "z3dcart": {"nmax": 7},
    "u": {"jmax": 5},
    "yprod": {"lmax": 2},
    "k": {"nmax": 4},
}

# Suite defaults
SUMRULE_JMAX_2D = 20
SUMRULE_JMAX_3D = 13
SUMRULE_NMAX_PRODUCT_2D = 8
SUMRULE_NMAX_PRODUCT_3D = 4
RECURRENCE_JMAX_2D = 20
RECURRENCE_JMAX_3D = 16
ORTHO_NMAX_2D = 16
ORTHO_NMAX_3D = 12
NOLL_ORTHO_NMAX = 5
ROUNDTRIP_JMAX_2D = 10
ROUNDTRIP_JMAX_3D = 5
ROUNDTRIP_NOLL_NMAX_2D = 13
SPHERE_LMAX = 6
SYMMETRY_JMAX = 4
ORACLE_NMAX = 4

# Oracle families whose default range differs from ORACLE_NMAX
ORACLE_NMAX_BY_FAMILY = {"u": 5, "cross2d": 9, "cross3d": 7, "sphere": SPHERE_LMAX}

VERIFY_SUITES = ("ortho", "sumrules", "recurrences", "roundtrip", "oracle", "fixtures", "symmetry")

# Fixture storage
FIXTURE_DIR = "fixtures"
FIXTURE_SUFFIX = ".txt"
FIXTURE_SEPARATOR = " | "

# Environment override for worker count
THREADS_ENV_VAR = "ZERNIKE_THREADS"
DEFAULT_THREADS = 1
DEFAULT_LOG_LEVEL = "WARNING"
