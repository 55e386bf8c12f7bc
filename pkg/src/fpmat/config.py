"""Tuning knobs: algorithm crossover thresholds and dispatch defaults.

The values below were tuned once on the development machine; they only
affect which exact algorithm runs, never the result.  Crossovers are
machine dependent and can be re-tuned freely.
"""

# univariate multiplication: naive below, Karatsuba in between, then the
# integer-lifted product (or an in-field NTT when the prime supports one)
MUL_NAIVE_MAX = 24
MUL_KARATSUBA_MAX = 96

# middle product switches to the wrapped (cyclic) transform at this size
MIDDLE_PRODUCT_FFT_MIN = 64

# PM-Basis / PM-IntBasis recursion base case (order at or below runs the
# iterative algorithm)
PMBASIS_BASE_ORDER = 32

# polynomial matrix multiplication dispatch: naive entrywise is preferred
# up to this row/column size, evaluation schemes beyond
PM_MUL_NAIVE_MAX_DIM = 10
# minimum point count for which evaluation/interpolation pays off at all
PM_MUL_EVAL_MIN_POINTS = 8

# determinant method dispatch (defaults mirror observed crossovers)
DET_MINORS_MAX_DIM = 6
DET_EVAL_MAX_DIM = 20
DET_MINORS_HARD_CAP = 8

# Las Vegas retry budget for randomized verification loops
LAS_VEGAS_RETRIES = 3

# brute-force oracle size guard: m*(D+1) above this raises TooLarge
ORACLE_MAX_UNKNOWNS = 512
