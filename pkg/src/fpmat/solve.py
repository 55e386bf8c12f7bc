"""Linear system solving over K[x] and vector rational reconstruction.

Lifting solvers assume A square with A(0) invertible and return the
canonical pair (u, f): A u = f b exactly, f monic of minimal degree.
Dixon expands A^-1 b step by step with the truncated inverse; the
high-order variant expands by residual splitting and also exposes the
far-out coefficient windows of A^-1 (HighOrderSlices) used by basis
reduction.  The kernel-based solver works for any shape and reports
inconsistency or a whole solution space where appropriate.
"""

from . import _dense
from .errors import (
    InsufficientPrecision,
    SingularAtZero,
    SingularMatrix,
)
from .appint import pmbasis
from .forms import NEG_INF, rdeg
from .kernel import kernel_zls
from .polmat import PolMat, pm_mul, _pm_middle
from .upoly import Poly, _trim


class RatSolution:
    """u and monic f with A u = f b exactly."""

    __slots__ = ("u", "f")

    def __init__(self, u, f):
        self.u = u
        self.f = f

    def __repr__(self):
        return f"RatSolution(deg f={self.f.degree})"


class NoSolution:
    """The system A u = b has no rational solution."""

    def __repr__(self):
        return "NoSolution()"


class SolutionSpace:
    """Right kernel basis of [A | b] parametrizing all solutions."""

    __slots__ = ("K",)

    def __init__(self, K):
        self.K = K

    def __repr__(self):
        return f"SolutionSpace(columns={self.K.n})"


def newton_inv_trunc(A, k):
    """S with A S = I mod x^k, by Newton doubling from A(0)^-1."""
    ctx = A.ctx
    A0 = [[e[0] if e else 0 for e in row] for row in A.rows]
    try:
        X0 = _dense.inverse(A0, ctx.p)
    except SingularMatrix:
        raise SingularAtZero("A(0) is singular")
    X = PolMat.from_const(ctx, X0)
    prec = 1
    two_i = PolMat.identity(ctx, A.m).scale(2)
    while prec < k:
        prec = min(2 * prec, k)
        E = pm_mul(A.truncate(prec), X).truncate(prec)
        X = pm_mul(X, two_i - E).truncate(prec)
    return X


def _check_solution(A, u, f, b):
    lhs = pm_mul(A, u)
    rhs = b.scale_poly(f)
    return lhs == rhs


def _monic_normalize(ctx, ucol, fcoeffs):
    p = ctx.p
    f = _trim(list(fcoeffs))
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    u = PolMat(
        ctx, [[_trim([c * inv % p for c in e]) for e in row] for row in ucol.rows],
        ncols=1,
    )
    return RatSolution(u, Poly._raw(ctx, f))


def vec_ratrec(v, K):
    """Reconstruct (u, f) with f v = u mod x^K, f monic of minimal degree.

    Requires deg f + max deg u < K for the intended solution; violations
    raise InsufficientPrecision after the defining checks fail.
    """
    ctx = v.ctx
    m = v.m
    G = v.transpose().vstack(PolMat.identity(ctx, m).scale(-1))
    P = pmbasis(G, K, [0] * (m + 1))
    # exactly one basis row has small degree when the budget holds; the
    # others carry the x^K congruence itself
    degs = rdeg(P, [0] * (m + 1))
    best = min(range(m + 1), key=lambda i: degs[i])
    row = P.rows[best]
    f = row[0]
    u = PolMat(ctx, [[row[j][:]] for j in range(1, m + 1)], ncols=1)
    if not f:
        raise InsufficientPrecision("no denominator row found")
    maxdu = max((len(e[0]) - 1 for e in u.rows if e[0]), default=-1)
    if len(f) - 1 + max(maxdu, 0) >= K:
        raise InsufficientPrecision(
            f"degree budget {len(f) - 1} + {maxdu} >= K = {K}"
        )
    # defining congruence f v = u mod x^K
    fv = v.scale_poly(f).truncate(K)
    if fv != u.truncate(K):
        raise InsufficientPrecision("congruence f v = u mod x^K failed")
    sol = _monic_normalize(ctx, u, f)
    return sol.u, sol.f


def _series_solve_dixon(A, S, b, N, step):
    """A^-1 b mod x^N by Dixon steps of size step = d + 1."""
    ctx = A.ctx
    cols = []
    r = b
    done = 0
    while done < N:
        rk = r.truncate(step)
        ck = pm_mul(S, rk).truncate(step)
        cols.append(ck)
        prod = pm_mul(A, ck)
        diff = r - prod
        r = diff.slice_coeffs(step, max(diff.degree + 1, step))
        done += step
    out = cols[0]
    for i, ck in enumerate(cols[1:], start=1):
        out = out + ck.shift(i * step)
    return out.truncate(N)


def dixon_solve(A, b):
    """Lifting solver driven by the order-(d+1) truncated inverse."""
    if A.m != A.n:
        raise SingularMatrix("dixon_solve expects a square matrix")
    ctx = A.ctx
    n = A.m
    d = max(A.degree, 0)
    if d == 0:
        S = newton_inv_trunc(A, 1)
        u = pm_mul(S, b)
        return _monic_normalize(ctx, u, [1])
    S = newton_inv_trunc(A, d + 1)
    N = 2 * n * d + max(b.degree - d, 0) + 1
    for attempt in range(2):
        try:
            v = _series_solve_dixon(A, S, b, N, d + 1)
            u, f = vec_ratrec(v, N)
        except InsufficientPrecision:
            N *= 2
            continue
        sol = RatSolution(u, f)
        if _check_solution(A, sol.u, sol.f, b):
            return sol
        N *= 2
    raise SingularMatrix("rational reconstruction failed; A is likely singular")


# ---------------------------------------------------------------------------
# high-order lifting


class HighOrderSlices:
    """Windows of A^-1 around degrees 2^i (d-1), radius d-1.

    slices[i] carries the coefficients of degree (2^i - 1)(d - 1) up to
    (2^i + 1)(d - 1) of A^-1, as a polynomial matrix reindexed from 0.
    """

    __slots__ = ("A", "d", "slices")

    def __init__(self, A, d, slices):
        self.A = A
        self.d = d
        self.slices = slices


def _residue(A, U, h, d):
    """R_h with A (A^-1 mod x^h) = I + x^h R_h, from the d coefficients
    of A^-1 just below x^h (U); the -I surfaces only when h = 0."""
    R = _pm_middle(A, U, d, d)
    if h == 0:
        R = R - PolMat.identity(A.ctx, A.m)
    return R


def _window_double(A, W, c, d, base):
    """Window [c-2d, c+d-1] -> [2c-2d, 2c+d-1] with two residues."""
    U1 = W.truncate(d)  # S[c-2d .. c-d-1]
    U2 = W.slice_coeffs(d, 2 * d)  # S[c-d .. c-1]
    R1 = _residue(A, U1, c - d, d)
    R2 = _residue(A, U2, c, d)
    low = _pm_middle(W, R1, d, 2 * d).scale(-1)  # S[2c-2d .. 2c-1]
    high = _pm_middle(W, R2, 2 * d, d).scale(-1)  # S[2c .. 2c+d-1]
    # the tail identity needs nonnegative offsets; the first d-c positions
    # of the low chunk still sit inside the old window, copy them over
    k0 = max(0, d - c)
    if k0:
        rows = []
        for i in range(W.m):
            row = []
            for j in range(W.n):
                old = W.rows[i][j]
                e = low.rows[i][j]
                head = [old[c + t] if c + t < len(old) else 0 for t in range(k0)]
                row.append(_trim(head + e[k0:]))
            rows.append(row)
        low = PolMat(W.ctx, rows, ncols=W.n)
    return low + high.shift(2 * d), 2 * c


def _window_advance(A, W, c, d, base, j):
    """Window [c-2d, c+d-1] -> [(c+j)-2d, (c+j)+d-1] for 0 <= j <= d."""
    if j == 0:
        return W, c
    U = W.slice_coeffs(2 * d, 3 * d)  # S[c .. c+d-1]
    R = _residue(A, U, c + d, d)
    new = pm_mul(base.truncate(j), R).truncate(j).scale(-1)  # S[c+d .. c+d+j-1]
    shifted = W.slice_coeffs(j, 3 * d)
    return shifted + new.shift(3 * d - j), c + j


def high_order_slices(A, count):
    """The first `count` spec windows of A^-1, by residue doubling.

    The first two windows come straight from a short Newton expansion;
    from center 2(d-1) >= d on, each doubling costs four middle products.
    """
    ctx = A.ctx
    d = max(A.degree, 0)
    if d <= 1:
        # windows collapse to the single coefficient S[0]
        S = newton_inv_trunc(A, 1)
        return HighOrderSlices(A, d, [S for _ in range(count)])
    base = newton_inv_trunc(A, 3 * d - 2)  # S[0 .. 3d-3]
    slices = [base.slice_coeffs(0, 2 * d - 1)]
    if count == 1:
        return HighOrderSlices(A, d, slices)
    c = 2 * (d - 1)
    W = base.truncate(3 * d - 2).shift(2)  # window [c-2d .. c+d-1] = [-2 .. 3d-3]
    slices.append(W.slice_coeffs(d + 1, 3 * d))
    for _ in range(2, count):
        W, c = _window_double(A, W, c, d, base)
        slices.append(W.slice_coeffs(d + 1, 3 * d))
    return HighOrderSlices(A, d, slices)


def inverse_series_window(A, start, length):
    """Coefficients start .. start+length-1 of A^-1 (length <= 2d).

    Walks windows by doubling and short advances so only O(log start)
    polynomial matrix products of degree d are needed.
    """
    ctx = A.ctx
    d = max(A.degree, 0)
    if d == 0:
        S = newton_inv_trunc(A, 1)
        if start == 0 and length >= 1:
            pad = PolMat.zeros(ctx, A.m, A.m)
            return S + pad
        return PolMat.zeros(ctx, A.m, A.m)
    if length > 2 * d:
        raise ValueError("window length is capped at 2d")
    base = newton_inv_trunc(A, 2 * d)
    target = start + d  # window [c-2d, c+d-1] must cover [start, start+len-1]
    if start + length > target + d:
        target = start + length - d
    if target <= 2 * d:
        big = newton_inv_trunc(A, start + length)
        return big.slice_coeffs(start, start + length)
    # plan the walk: double and advance by 0/1, after one initial advance
    ops = []
    t = target
    c0 = d
    while t > 2 * c0:
        ops.append(("adv", t % 2))
        t //= 2
        ops.append(("dbl", 0))
    ops.append(("adv", t - c0))
    ops.reverse()
    # fix op order: initial advance from c0, then the (dbl, adv) pairs
    W = base.shift(d)  # window [c0-2d, c0+d-1] = [-d, 2d-1]
    c = c0
    for kind, j in ops:
        if kind == "dbl":
            W, c = _window_double(A, W, c, d, base)
        else:
            W, c = _window_advance(A, W, c, d, base, j)
    assert c == target, (c, target)
    lo = start - (c - 2 * d)
    return W.slice_coeffs(lo, lo + length)


def _series_solve_split(A, S, c, prec, step):
    """A^-1 c mod x^prec by recursive residual splitting."""
    if prec <= step:
        return pm_mul(S, c.truncate(prec)).truncate(prec)
    h = (prec + 1) // 2
    u1 = _series_solve_split(A, S, c.truncate(h), h, step)
    diff = c.truncate(prec) - pm_mul(A, u1)
    r = diff.slice_coeffs(h, max(diff.degree + 1, h))
    u2 = _series_solve_split(A, S, r, prec - h, step)
    return (u1 + u2.shift(h)).truncate(prec)


def high_order_solve(A, b):
    """Same contract as dixon_solve with the expansion done by splitting."""
    if A.m != A.n:
        raise SingularMatrix("high_order_solve expects a square matrix")
    ctx = A.ctx
    n = A.m
    d = max(A.degree, 0)
    if d == 0:
        S = newton_inv_trunc(A, 1)
        return _monic_normalize(ctx, pm_mul(S, b), [1])
    S = newton_inv_trunc(A, d + 1)
    N = 2 * n * d + max(b.degree - d, 0) + 1
    for attempt in range(2):
        try:
            v = _series_solve_split(A, S, b, N, d + 1)
            u, f = vec_ratrec(v, N)
        except InsufficientPrecision:
            N *= 2
            continue
        sol = RatSolution(u, f)
        if _check_solution(A, sol.u, sol.f, b):
            return sol
        N *= 2
    raise SingularMatrix("rational reconstruction failed; A is likely singular")


# ---------------------------------------------------------------------------
# kernel-based solving


def kernel_solve(A, b):
    """Solve through a right kernel basis of [A | b]; any shape accepted."""
    ctx = A.ctx
    aug = A.hstack(b)
    # shift: column degrees of A (zero columns contribute 0) then deg b
    cdegs = []
    for j in range(A.n):
        dj = max((len(A.rows[i][j]) - 1 for i in range(A.m) if A.rows[i][j]), default=0)
        cdegs.append(dj)
    s = cdegs + [max(b.degree, 0)]
    kb = kernel_zls(aug.transpose(), s)
    K = kb.K.transpose()  # (n+1) x k columns
    k = K.n
    if k == 0:
        return NoSolution()
    last = [K.rows[A.n][j] for j in range(k)]
    if all(not e for e in last):
        return NoSolution()
    if A.m == A.n and k == 1:
        ucol = PolMat(ctx, [[K.rows[i][0][:]] for i in range(A.n)], ncols=1)
        # the kernel column gives A u + f_raw b = 0, so flip the sign
        f = [(-c) % ctx.p for c in K.rows[A.n][0]]
        sol = _monic_normalize(ctx, ucol, f)
        if _check_solution(A, sol.u, sol.f, b):
            return sol
        return SolutionSpace(K)
    return SolutionSpace(K)
