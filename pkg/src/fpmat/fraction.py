"""Minimal left matrix-fraction reconstruction.

Given either a truncated power series expansion of a rational matrix H or
its values at distinct points, stack [H; -I] and compute a 0-ordered weak
Popov basis of the order module.  The first n rows then split as [Q R]
with H = Q^-1 R a minimal left description, Q itself in 0-owP form.

The construction is sound only when H is strictly proper with left and
right descriptions of degree at most D (2D conditions are consumed); a
violated precondition surfaces as ReconstructionFailed, detected through
the a-priori degree bound on the first n rows and through the pivot
structure of Q (owP pivots on the diagonal certify nonsingularity without
randomization).
"""

from .appint import pm_intbasis, pmbasis
from .errors import DuplicatePoints, ReconstructionFailed
from .forms import NEG_INF, pivot_profile, rdeg
from .polmat import PolMat, pm_mul


class FractionDesc:
    """Left fraction description H = Q^-1 R with its modulus tag."""

    __slots__ = ("Q", "R", "modulus")

    def __init__(self, Q, R, modulus):
        self.Q = Q
        self.R = R
        self.modulus = modulus

    def __repr__(self):
        kind = self.modulus[0]
        return f"FractionDesc(n={self.Q.m}, deg Q={self.Q.degree}, {kind})"


def _split_basis(P, n, D, modulus):
    degs = rdeg(P, [0] * (2 * n))
    prof = pivot_profile(P, [0] * (2 * n))
    for i in range(n):
        if degs[i] == NEG_INF or degs[i] > D:
            raise ReconstructionFailed(
                f"row {i} has degree {degs[i]}, expected <= {D}"
            )
        if prof[i][1] is None or prof[i][1] >= n:
            raise ReconstructionFailed(
                f"row {i} pivot falls outside the denominator block"
            )
    Q = P.submatrix(range(n), range(n))
    R = P.submatrix(range(n), range(n, 2 * n))
    return FractionDesc(Q, R, modulus)


def fracrec_series(Hbar, D):
    """Reconstruct (Q, R) from H mod x^(2D).

    Hbar must carry at least the first 2D coefficients of a strictly
    proper H admitting degree-D left and right descriptions.
    """
    n = Hbar.m
    order = 2 * D
    F = Hbar.truncate(order).vstack(PolMat.identity(Hbar.ctx, n).scale(-1))
    P = pmbasis(F, order, [0] * (2 * n))
    desc = _split_basis(P, n, D, ("series", order))
    # Q Hbar = R mod x^(2D) holds by membership; re-check cheaply
    diff = pm_mul(desc.Q, Hbar.truncate(order)) - desc.R
    if not diff.truncate(order).is_zero():
        raise ReconstructionFailed("congruence Q H = R mod x^2D failed")
    return desc


def fracrec_points(ctx, Hvals, pts, D=None):
    """Reconstruct (Q, R) from values H(pts[0]), ..., H(pts[2D-1])."""
    p = ctx.p
    pts = [x % p for x in pts]
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("evaluation points must be pairwise distinct")
    if len(Hvals) != len(pts):
        raise ReconstructionFailed("one value matrix per point is required")
    if D is None:
        D = len(pts) // 2
    if len(pts) < 2 * D:
        raise ReconstructionFailed(f"need 2D = {2 * D} points, got {len(pts)}")
    Hvals = Hvals[: 2 * D]
    pts = pts[: 2 * D]
    n = len(Hvals[0])
    E = []
    for H in Hvals:
        Ei = [row[:] for row in H]
        for j in range(n):
            row = [0] * n
            row[j] = p - 1
            Ei.append(row)
        E.append(Ei)
    P = pm_intbasis(E, pts, [0] * (2 * n), ctx)
    desc = _split_basis(P, n, D, ("points", tuple(pts)))
    return desc


def right_fraction_from_left(desc):
    """Transpose helper: a right description of H^T from a left one of H."""
    return FractionDesc(desc.Q.transpose(), desc.R.transpose(), desc.modulus)
