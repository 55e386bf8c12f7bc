"""Determinants of polynomial matrices and row reduction.

Three determinant routes: expansion by minors with memoized column
subsets (small sizes), evaluation/interpolation at a geometric
progression, and the randomized linear-system route where the minimal
denominator is the determinant up to a constant fixed by one dense
evaluation and verified at another (Las Vegas, bounded retries).

reduce_basis computes a reduced form R = U A (U unimodular) by taking a
2d-wide window of A^-1 around degree (m-1)d+1 through high-order lifting
and reconstructing its minimal left fraction; the denominator is the
reduced form.
"""

import random

from . import _dense, config
from .errors import (
    DimensionCap,
    FieldTooSmall,
    NoSuchElement,
    NotSquare,
    SingularMatrix,
    VerificationFailed,
)
from .forms import is_reduced
from .fraction import fracrec_series
from .modring import order_at_least
from .polmat import PolMat, pm_eval
from .solve import dixon_solve, inverse_series_window
from .upoly import (
    GeomGrid,
    Poly,
    _add,
    _eval_horner,
    _interp_geometric_raw,
    _mul,
    _scale,
    _sub,
    _trim,
    interp_general,
)


class DetResult:
    """Determinant plus the method tag and checked evaluation points."""

    __slots__ = ("det", "method", "verification_points")

    def __init__(self, det, method, points):
        self.det = det
        self.method = method
        self.verification_points = points

    def __repr__(self):
        return f"DetResult(deg={self.det.degree}, method={self.method})"


def _require_square(A):
    if A.m != A.n:
        raise NotSquare(f"{A.m}x{A.n} matrix has no determinant")


def det_minors(A, cap=None):
    """Expansion by minors with memoization on column subsets."""
    _require_square(A)
    cap = config.DET_MINORS_HARD_CAP if cap is None else cap
    if A.m > cap:
        raise DimensionCap(f"minors capped at dimension {cap}")
    ctx = A.ctx
    m = A.m
    if m == 0:
        return Poly._raw(ctx, [1])
    memo = {}

    def minor(row, mask):
        if not mask:
            return [1]
        key = mask
        got = memo.get(key)
        if got is not None:
            return got
        cols = [j for j in range(m) if mask & (1 << j)]
        acc = []
        for idx, j in enumerate(cols):
            e = A.rows[row][j]
            if not e:
                continue
            sub = minor(row + 1, mask & ~(1 << j))
            term = _mul(e, sub, ctx)
            if idx % 2:
                term = [(-c) % ctx.p for c in term]
            acc = _add(acc, term, ctx.p)
        memo[key] = acc
        return acc

    full = (1 << m) - 1
    return Poly._raw(ctx, minor(0, full))


def det_eval(A, allow_general=False):
    """Determinant by md+1 dense determinants at a geometric progression."""
    _require_square(A)
    ctx = A.ctx
    p = ctx.p
    m = A.m
    if m == 0:
        return Poly._raw(ctx, [1])
    d = max(A.degree, 0)
    npts = m * d + 1
    try:
        alpha = order_at_least(ctx, npts)
    except NoSuchElement:
        alpha = None
    if alpha is not None:
        grid = GeomGrid(ctx, alpha, npts)
        vals = [_dense.det(pm_eval(A, x), p) for x in grid.points]
        return Poly._raw(ctx, _interp_geometric_raw(vals, alpha, ctx))
    if not allow_general:
        raise FieldTooSmall(f"no element of order {npts} modulo {p}")
    if npts > p:
        raise FieldTooSmall(f"need {npts} distinct points, field has {p}")
    pts = list(range(npts))
    vals = [_dense.det(pm_eval(A, x), p) for x in pts]
    return interp_general(vals, pts, ctx)


def det_linsolve(A, rng=None):
    """Determinant via one random linear solve, scaled and verified."""
    _require_square(A)
    ctx = A.ctx
    p = ctx.p
    m = A.m
    rng = rng if rng is not None else random.Random()
    d = max(A.degree, 0)
    for attempt in range(config.LAS_VEGAS_RETRIES):
        b = PolMat(
            ctx,
            [[_trim([rng.randrange(p) for _ in range(d + 1)])] for _ in range(m)],
            ncols=1,
        )
        try:
            sol = dixon_solve(A, b)
        except SingularMatrix:
            continue
        f = sol.f.coeffs
        beta1 = rng.randrange(1, p)
        beta2 = rng.randrange(1, p)
        fb1 = _eval_horner(f, beta1, p)
        if fb1 == 0:
            continue
        target1 = _dense.det(pm_eval(A, beta1), p)
        c = target1 * pow(fb1, -1, p) % p
        cand = _scale(f, c, p)
        if _eval_horner(cand, beta2, p) == _dense.det(pm_eval(A, beta2), p):
            return Poly._raw(ctx, cand)
    raise VerificationFailed(
        "determinant candidate failed verification; matrix may be singular"
    )


def determinant(A, method=None, rng=None):
    """Dispatching determinant with point verification, as a DetResult."""
    _require_square(A)
    ctx = A.ctx
    if method is None:
        if A.m <= config.DET_MINORS_MAX_DIM:
            method = "minors"
        elif A.m <= config.DET_EVAL_MAX_DIM:
            method = "eval"
        else:
            method = "linsolve"
    if method == "minors":
        det = det_minors(A)
    elif method == "eval":
        det = det_eval(A, allow_general=True)
    elif method == "linsolve":
        det = det_linsolve(A, rng=rng)
    else:
        raise ValueError(f"unknown determinant method {method!r}")
    rng = rng if rng is not None else random.Random()
    pts = [rng.randrange(ctx.p) for _ in range(2)]
    for beta in pts:
        if det.eval(beta) != _dense.det(pm_eval(A, beta), ctx.p):
            raise VerificationFailed(f"determinant mismatch at x = {beta}")
    return DetResult(det, method, pts)


def reduce_basis(A):
    """Reduced form of A (left-unimodularly equivalent), via lifting."""
    _require_square(A)
    ctx = A.ctx
    m = A.m
    d = max(A.degree, 0)
    if d == 0:
        # constant nonsingular matrices are already reduced
        if _dense.det([[e[0] if e else 0 for e in row] for row in A.rows], ctx.p) == 0:
            raise SingularMatrix("constant matrix is singular")
        return A
    start = (m - 1) * d + 1
    window = inverse_series_window(A, start, 2 * d)
    desc = fracrec_series(window, d)
    return desc.Q
