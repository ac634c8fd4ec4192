"""Constants for blaschke-radius."""

import math

# Polynomial roots
ABERTH_MAX_SWEEPS = 200
NEWTON_POLISH_STEPS = 20
TOL_ROOT = 1e-13
ROOT_CLUSTER_RADIUS = 1e-7

# Hermitian eigenproblems
TOL_EIG = 1e-12
JACOBI_MAX_SWEEPS = 60
HERMITIAN_TOL = 1e-12

# Blaschke products
ZERO_MODULUS_MARGIN = 1e-12
POLE_TOL = 1e-14
REAL_ZERO_TOL = 1e-14

# Numerical range sweep
THETA_SAMPLES = 720
LIMIT_THETA_SAMPLES = 90
ANGULAR_TOL = 1e-12
REFINED_MAXIMA = 3
TIE_TOL = 1e-14
TWO_PI = 2.0 * math.pi

# Difference-quotient ladder for the t -> 0+ limit routes: 1e-2 * 2^-k, k = 0..6
T_LADDER: tuple[float, ...] = tuple(1e-2 * 2.0**-k for k in range(7))
LIMIT_TOL = 1e-4

# Root method
TRIVIAL_ROOT_TOL = 1e-8
UNIMODULAR_TOL = 1e-8
ORACLE_TOL = 1e-6

# Agreement required between the three norm routes
NORM_TOL = 1e-8

# Pick route
TOL_BISECT = 1e-12
PSD_BAND = 1e-11
NODE_SEPARATION = 1e-9

# Foias-Tannenbaum route
FT_SCAN_SAMPLES = 10_000
FT_SCAN_MARGIN = 0.05
FT_DEFECT_TOL = 1e-8

# CLI exit codes
EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_INPUT = 2
EXIT_CROSS_CHECK = 3
EXIT_IO = 4
