# Numerical tolerances and defaults shared across the package

# algebraic identities (unitarity, symmetry, closed-form normalisation)
ALGEBRA_TOL = 1e-12

# closed form vs matrix-exponential oracle
ORACLE_TOL = 1e-10

# norm deviation accepted before NormalizationError
NORM_TOL = 1e-8

# symplectic eigenvalues >= 1 - PHYSICALITY_TOL are physical
PHYSICALITY_TOL = 1e-9

# separability decisions and P-function classicality
DECISION_TOL = 1e-10

# nonclassicality: min quadrature variance below 1 - NONCLASSICAL_TOL
NONCLASSICAL_TOL = 1e-12

# bs_coefficient switches from the closed-form sum to the ladder recursion above this total
LADDER_THRESHOLD = 12

DEFAULT_FOCK_CUTOFF = 20
DEFAULT_SQUEEZE_CUTOFF = 40

# oracle input states must keep at least 1 - TRACE_GUARD of their weight
TRACE_GUARD = 1e-4

# density matrices may not carry more than 1 + TRACE_TOL of weight
TRACE_TOL = 1e-6

# standard-form root finding
ROOT_XTOL = 1e-12
ROOT_SCAN_POINTS = 400
ROOT_SCAN_DECADES = 8.0

# CLI limits and output
MAX_CLI_PHOTONS = 40
FLOAT_FORMAT = "%.12g"
DEFAULT_MAX_WORKERS = 4
DEFAULT_SWEEP_STEPS = 101
