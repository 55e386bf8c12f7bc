"""Left kernel bases of polynomial matrices.

kernel_direct follows the single-order-basis route: one approximant (or
interpolant) basis at order d + delta, keeping the rows of s-degree below
delta.  kernel_zls is the recursive scheme that works at small order
2*sbar+1, certifies exact kernel rows by degree accounting, exits early
when enough rows are found, and otherwise recurses on the shifted
residual; wide inputs (n > m/2) are first narrowed by a column split.
"""

from . import _dense
from .appint import pm_intbasis, pmbasis
from .errors import NoGeometricGrid, NoSuchElement
from .forms import NEG_INF, pivot_profile, rdeg, row_rdeg
from .modring import order_at_least
from .polmat import PolMat, pm_eval, pm_mul
from .upoly import _sub, _trim


class KernelBasis:
    """Rows K with K F = 0 exactly, plus the shift and a form certificate."""

    __slots__ = ("K", "shift", "certificate")

    def __init__(self, K, shift, certificate):
        self.K = K
        self.shift = shift
        self.certificate = certificate

    def __repr__(self):
        return f"KernelBasis({self.K.m}x{self.K.n}, {self.certificate})"


def _sort_by_pivot(M, s):
    if M.m == 0:
        return M
    prof = pivot_profile(M, s)
    order = sorted(range(M.m), key=lambda i: (prof[i][1], i))
    return M.submatrix(order, range(M.n))


def kernel_direct(F, s, flavor="approx"):
    """Kernel basis from one basis computation at large order.

    The degree bound delta applies to the normalized shift (minimum entry
    zero); shifting by a constant changes neither the module nor the
    computed basis, only the degree accounting.
    """
    if any(si < 0 for si in s):
        raise ValueError("kernel_direct expects a nonnegative shift")
    ctx = F.ctx
    m, n = F.m, F.n
    d = max(F.degree, 0)
    s0 = [si - min(s) for si in s] if s else []
    delta = n * d + (max(s0) if s0 else 0) + 1
    order = d + delta
    if flavor == "approx":
        P = pmbasis(F, order, s0)
    elif flavor == "interp":
        try:
            alpha = order_at_least(ctx, order)
        except NoSuchElement:
            raise NoGeometricGrid(
                f"field has no geometric progression of length {order}"
            )
        pts = [1] * order
        for i in range(1, order):
            pts[i] = pts[i - 1] * alpha % ctx.p
        E = [pm_eval(F, a) for a in pts]
        P = pm_intbasis(E, pts, s0, ctx)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    degs = rdeg(P, s0)
    keep = [i for i in range(m) if degs[i] != NEG_INF and degs[i] < delta]
    K = P.submatrix(keep, range(m))
    return KernelBasis(_sort_by_pivot(K, s), list(s), "owp")


def pm_rank(F):
    """Rank over K(x), by evaluation at enough points (deterministic)."""
    ctx = F.ctx
    m, n = F.m, F.n
    if m == 0 or n == 0:
        return 0
    d = max(F.degree, 0)
    r = 0
    limit = min(ctx.p, min(m, n) * d + 1)
    for x0 in range(limit):
        r = max(r, _dense.rank(pm_eval(F, x0), ctx.p))
        if r == min(m, n):
            break
    return r


def _certified_zero_rows(P, F_rowdegs, order):
    """Rows of P whose product with F must vanish by degree accounting."""
    out = []
    for i, row in enumerate(P.rows):
        bound = -1
        for j, e in enumerate(row):
            if e and F_rowdegs[j] >= 0:
                b = len(e) - 1 + F_rowdegs[j]
                if b > bound:
                    bound = b
            elif e and F_rowdegs[j] < 0:
                pass  # zero row of F contributes nothing
        if bound < order:
            out.append(i)
    return out


def kernel_zls(F, s, _depth=0):
    """Recursive kernel basis with early exit (small-order approximants)."""
    ctx = F.ctx
    m, n = F.m, F.n
    if n == 0 or F.is_zero():
        return KernelBasis(PolMat.identity(ctx, m), list(s), "owp")
    if _depth > 64:
        return kernel_direct(F, _normalize_shift(s), "approx")
    if n > m / 2 and n > 1:
        n1 = (n + 1) // 2
        F1 = F.submatrix(range(m), range(n1))
        F2 = F.submatrix(range(m), range(n1, n))
        kb1 = kernel_zls(F1, s, _depth + 1)
        if kb1.K.m == 0:
            return KernelBasis(PolMat(ctx, [], ncols=m), list(s), "owp")
        G = pm_mul(kb1.K, F2)
        s1 = [int(v) if v != NEG_INF else min(s) for v in rdeg(kb1.K, s)]
        kb2 = kernel_zls(G, s1, _depth + 1)
        K = pm_mul(kb2.K, kb1.K)
        return KernelBasis(_sort_by_pivot(K, s), list(s), "owp")
    d = max(F.degree, 0)
    rowdegs = [row_rdeg(row, [0] * n) for row in F.rows]
    rowdegs = [int(v) if v != NEG_INF else -1 for v in rowdegs]
    finite = [v for v in rowdegs if v >= 0]
    sbar = max(1, -(-sum(finite) // max(1, len(finite))) if finite else 1)
    order = 2 * sbar + 1
    P = pmbasis(F, order, list(s))
    zero_rows = _certified_zero_rows(P, rowdegs, order)
    expected = m - pm_rank(F)
    if len(zero_rows) == expected:
        K = P.submatrix(zero_rows, range(m))
        return KernelBasis(_sort_by_pivot(K, s), list(s), "owp")
    rest = [i for i in range(m) if i not in set(zero_rows)]
    Pz = P.submatrix(zero_rows, range(m))
    Pr = P.submatrix(rest, range(m))
    # residual G = (Pr F) / x^order, exact by the order property
    prod = pm_mul(Pr, F)
    G = prod.slice_coeffs(order, max(prod.degree + 1, order))
    s1 = [int(v) if v != NEG_INF else min(s) for v in rdeg(Pr, s)]
    kb2 = kernel_zls(G, s1, _depth + 1)
    K2 = pm_mul(kb2.K, Pr)
    rows = [r[:] for r in Pz.rows] + [r[:] for r in K2.rows]
    K = PolMat(ctx, rows, ncols=m)
    return KernelBasis(_sort_by_pivot(K, s), list(s), "owp")


def _normalize_shift(s):
    lo = min(s) if s else 0
    return [si - lo for si in s] if lo < 0 else list(s)


def kernel_right(F, s):
    """Right kernel basis via the transpose wrapper."""
    kb = kernel_zls(F.transpose(), list(s))
    return KernelBasis(kb.K.transpose(), list(s), kb.certificate)


# ---------------------------------------------------------------------------
# membership by division against a pivot-structured basis


def reduce_row(row, K, s, p):
    """Remainder of a row (list of coefficient lists) modulo the row module
    of K, cancelling s-pivots; empty remainder certifies membership when K
    has pairwise distinct pivot columns."""
    prof = pivot_profile(K, s)
    by_col = {}
    for i, (_, col, pdeg) in enumerate(prof):
        if col is not None and (col not in by_col or pdeg < by_col[col][1]):
            by_col[col] = (i, pdeg)
    row = [e[:] for e in row]
    while True:
        d, col, edeg = _row_pivot_list(row, s)
        if col is None:
            return row
        if col not in by_col:
            return row
        i, pdeg = by_col[col]
        if pdeg > edeg:
            return row
        krow = K.rows[i]
        lead_r = row[col][-1]
        lead_k = krow[col][-1]
        f = lead_r * pow(lead_k, -1, p) % p
        t = edeg - pdeg
        for j in range(len(row)):
            ke = krow[j]
            if ke:
                shifted = [0] * t + [c * f % p for c in ke]
                row[j] = _sub(row[j], shifted, p)


def _row_pivot_list(row, s):
    best = NEG_INF
    for e, sj in zip(row, s):
        if e:
            v = len(e) - 1 + sj
            if v > best:
                best = v
    if best == NEG_INF:
        return NEG_INF, None, None
    for j in range(len(row) - 1, -1, -1):
        e = row[j]
        if e and len(e) - 1 + s[j] == best:
            return best, j, len(e) - 1
    return NEG_INF, None, None


def same_module(K1, K2, s, p):
    """Mutual reduction to zero of two pivot-structured bases."""
    if K1.m != K2.m:
        return False
    for row in K1.rows:
        if any(_trim(e[:]) for e in reduce_row(row, K2, s, p)):
            return False
    for row in K2.rows:
        if any(_trim(e[:]) for e in reduce_row(row, K1, s, p)):
            return False
    return True
