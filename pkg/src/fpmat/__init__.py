"""Polynomial matrix algorithms over word-size prime fields.

Submodules:

- modring: prime-field contexts and NTT plans
- upoly:   univariate polynomial arithmetic
- polmat:  polynomial matrices and multiplication variants
- forms:   shifted degrees, pivots, reduced/Popov form checks
- appint:  approximant and interpolant basis algorithms
- fraction: matrix fraction reconstruction
- kernel:  left kernel bases
- solve:   linear system solving over K[x]
- detred:  determinants and basis reduction
- sylres:  bivariate resultants and characteristic polynomials
- oracle:  brute-force reference implementations (tests only)
- cli:     command-line harness
"""

__version__ = "0.1.0"
