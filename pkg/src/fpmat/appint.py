"""Approximant and interpolant basis algorithms.

The order-1 kernel step works on a constant matrix and returns the shift-
Popov basis; the iterative algorithms update bases through that step in
the polynomial-of-matrices view (a list of constant coefficient matrices),
which keeps every inner operation a plain matrix operation over F_p.  The
divide-and-conquer versions split the order (or the point list), recurse,
and glue with one polynomial matrix product.

Shifts are plain integer lists, one entry per row of the worked matrix.
"""

from . import config
from .errors import DuplicatePoints
from .forms import NEG_INF
from .polmat import PolMat, pm_mul, _pm_middle
from .upoly import _eval_geometric_raw, _eval_horner, _trim


# ---------------------------------------------------------------------------
# order-1 step


def _mbasis1_struct(R, s, p):
    """Constant-kernel structure of the order-1 Popov basis.

    R is a constant m x n matrix and s the current shift.  Returns
    (kernel, pivots): kernel maps row index i to the sparse combination
    [(j, c), ...] such that row i of the basis is e_i - sum c * e_j;
    pivots is the sorted list of rows whose basis row is x * e_i (or
    (x - alpha) * e_i for interpolants).
    """
    m = len(R)
    order = sorted(range(m), key=lambda i: (s[i], i))
    reducers = []  # (pivot_col, reduced_row, expr) with expr over original rows
    kernel = {}
    pivots = []
    for i in order:
        v = R[i][:]
        expr = {}
        for col, w, wexpr in reducers:
            c = v[col]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, w)]
                for j, e in wexpr.items():
                    expr[j] = (expr.get(j, 0) + c * e) % p
        nz = next((c for c, x in enumerate(v) if x), None)
        if nz is None:
            # R[i] = sum expr[j] R[j], so e_i - sum expr[j] e_j kills R mod x
            kernel[i] = [(j, c) for j, c in sorted(expr.items()) if c]
        else:
            # reduced row w = inv * (R[i] - sum expr[j] R[j])
            inv = pow(v[nz], -1, p)
            w = [x * inv % p for x in v]
            wexpr = {j: (-e * inv) % p for j, e in expr.items() if e}
            wexpr[i] = inv
            reducers.append((nz, w, wexpr))
            pivots.append(i)
    pivots.sort()
    return kernel, pivots


def mbasis1(R, s, ctx):
    """s-Popov approximant basis at order 1 for a constant matrix R."""
    p = ctx.p
    kernel, pivots = _mbasis1_struct(R, s, p)
    m = len(R)
    rows = [[[] for _ in range(m)] for _ in range(m)]
    for i in range(m):
        if i in kernel:
            rows[i][i] = [1]
            for j, c in kernel[i]:
                rows[i][j] = [(-c) % p]
        else:
            rows[i][i] = [0, 1]
    return PolMat(ctx, rows)


def _apply_step(kernel, pivots, coeffs, p, alpha=None, m=None, prev0=None):
    """Left-multiply a coefficient-matrix list by the order-1 basis.

    Kernel rows become the stored constant combination; pivot rows are
    multiplied by x (approximants) or x - alpha (interpolants).  When the
    list is a window of a longer series, prev0 supplies the coefficient
    just below the window so pivot-row shifts stay aligned.
    """
    if not coeffs:
        return coeffs
    L = len(coeffs)
    m = m if m is not None else len(coeffs[0])
    width = len(coeffs[0][0]) if m else 0
    pivset = set(pivots)
    out = []
    for t in range(L + 1):
        cur = coeffs[t] if t < L else None
        prev = coeffs[t - 1] if t >= 1 else prev0
        mat = []
        for i in range(m):
            if i in pivset:
                row = prev[i][:] if prev is not None else [0] * width
                if alpha is not None and cur is not None:
                    ci = cur[i]
                    row = [(x - alpha * y) % p for x, y in zip(row, ci)]
                mat.append(row)
            else:
                if cur is None:
                    mat.append([0] * width)
                    continue
                row = cur[i][:]
                for j, c in kernel[i]:
                    cj = cur[j]
                    row = [(x - c * y) % p for x, y in zip(row, cj)]
                mat.append(row)
        out.append(mat)
    while out and all(all(x == 0 for x in row) for row in out[-1]):
        out.pop()
    return out


def _rdeg_from_coeffs(coeffs, s, m):
    """s-row-degrees of a coefficient-matrix list."""
    out = []
    for i in range(m):
        best = NEG_INF
        for t, mat in enumerate(coeffs):
            row = mat[i]
            for j, x in enumerate(row):
                if x and t + s[j] > best:
                    best = t + s[j]
        out.append(best)
    return out


def _finish_shift(sft, s):
    """Replace NEG_INF placeholders (impossible for bases) defensively."""
    return [int(v) if v != NEG_INF else min(s) for v in sft]


# ---------------------------------------------------------------------------
# approximant bases


def mbasis(F, order, s):
    """Iterative s-ordered weak Popov approximant basis for (F, order)."""
    ctx = F.ctx
    p = ctx.p
    m = F.m
    fcoeffs = [F.coefficient(k) for k in range(order)]
    P = [[[1 if i == j else 0 for j in range(m)] for i in range(m)]]
    sft = list(s)
    update_list = F.n > m / 2
    G = [[row[:] for row in mat] for mat in fcoeffs] if update_list else None
    for k in range(order):
        if update_list:
            R = G[k]
        else:
            R = [[0] * F.n for _ in range(m)]
            for t in range(min(len(P) - 1, k) + 1):
                Pt = P[t]
                Fk = fcoeffs[k - t]
                for i in range(m):
                    prow = Pt[i]
                    Ri = R[i]
                    for l, c in enumerate(prow):
                        if c:
                            Fl = Fk[l]
                            for j in range(F.n):
                                Ri[j] += c * Fl[j]
            R = [[x % p for x in row] for row in R]
        kernel, pivots = _mbasis1_struct(R, sft, p)
        if len(kernel) < m:
            P = _apply_step(kernel, pivots, P, p, m=m)
            if update_list and k + 1 < order:
                tail = _apply_step(kernel, pivots, G[k + 1 :], p, m=m, prev0=R)
                tail = tail[: order - k - 1]
                while len(tail) < order - k - 1:
                    tail.append([[0] * F.n for _ in range(m)])
                G = G[: k + 1] + tail
            sft = _finish_shift(_rdeg_from_coeffs(P, s, m), s)
    return PolMat.from_matpoly(ctx, P)


def pmbasis(F, order, s):
    """Divide-and-conquer s-ordered weak Popov approximant basis."""
    if order <= config.PMBASIS_BASE_ORDER:
        return mbasis(F.truncate(order), order, s)
    ctx = F.ctx
    o1 = (order + 1) // 2
    o2 = order - o1
    P1 = pmbasis(F.truncate(o1), o1, s)
    R = _pm_middle(P1, F.truncate(order), o1, o2)
    from .forms import rdeg

    s1 = _finish_shift(rdeg(P1, s), s)
    P2 = pmbasis(R, o2, s1)
    return pm_mul(P2, P1)


# ---------------------------------------------------------------------------
# interpolant bases


def _check_points(alpha):
    if len(set(alpha)) != len(alpha):
        raise DuplicatePoints("interpolation points must be pairwise distinct")


def m_intbasis(E, alpha, s, ctx):
    """Iterative s-ordered weak Popov interpolant basis for (E, alpha)."""
    _check_points(alpha)
    p = ctx.p
    m = len(E[0]) if E else len(s)
    P = [[[1 if i == j else 0 for j in range(m)] for i in range(m)]]
    sft = list(s)
    for Ei, ai in zip(E, alpha):
        ai %= p
        # evaluate P at alpha_i, then form the residual P(alpha_i) E_i
        pw = 1
        Pa = [[0] * m for _ in range(m)]
        for t, mat in enumerate(P):
            if t:
                pw = pw * ai % p
            for i in range(m):
                row = mat[i]
                Pai = Pa[i]
                for j, c in enumerate(row):
                    if c:
                        Pai[j] += c * pw
        Pa = [[x % p for x in row] for row in Pa]
        n = len(Ei[0])
        R = [[0] * n for _ in range(m)]
        for i in range(m):
            for l, c in enumerate(Pa[i]):
                if c:
                    El = Ei[l]
                    Ri = R[i]
                    for j in range(n):
                        Ri[j] += c * El[j]
        R = [[x % p for x in row] for row in R]
        kernel, pivots = _mbasis1_struct(R, sft, p)
        if len(kernel) < m:
            P = _apply_step(kernel, pivots, P, p, alpha=ai, m=m)
        sft = _finish_shift(_rdeg_from_coeffs(P, s, m), s)
    return PolMat.from_matpoly(ctx, P, m=m, n=m)


def _is_geometric(pts, p):
    """(start, ratio) if pts is a geometric progression, else None."""
    if len(pts) < 3:
        return None
    if pts[0] == 0 or pts[1] == 0:
        return None
    r = pts[1] * pow(pts[0], -1, p) % p
    cur = pts[1]
    for x in pts[2:]:
        cur = cur * r % p
        if cur != x:
            return None
    return pts[0], r


def eval_polmat_points(P, pts, ctx):
    """[P(x) for x in pts] as constant matrices, batched when geometric."""
    p = ctx.p
    npts = len(pts)
    geo = _is_geometric([x % p for x in pts], p)
    if geo is not None and P.degree >= 16:
        start, ratio = geo
        vals = [[[0] * P.n for _ in range(P.m)] for _ in range(npts)]
        for i in range(P.m):
            for j in range(P.n):
                e = P.rows[i][j]
                if not e:
                    continue
                scaled = []
                pw = 1
                for t, c in enumerate(e):
                    if t:
                        pw = pw * start % p
                    scaled.append(c * pw % p)
                f = _eval_geometric_raw(_trim(scaled), ratio, npts, ctx)
                for t in range(npts):
                    vals[t][i][j] = f[t]
        return vals
    return [
        [[_eval_horner(e, x % p, p) for e in row] for row in P.rows]
        for x in pts
    ]


def pm_intbasis(E, alpha, s, ctx):
    """Divide-and-conquer s-ordered weak Popov interpolant basis."""
    _check_points(alpha)
    order = len(alpha)
    if order <= config.PMBASIS_BASE_ORDER:
        return m_intbasis(E, alpha, s, ctx)
    o1 = (order + 1) // 2
    P1 = pm_intbasis(E[:o1], alpha[:o1], s, ctx)
    p = ctx.p
    tail_pts = alpha[o1:]
    evs = eval_polmat_points(P1, tail_pts, ctx)
    n = len(E[0][0])
    R = []
    for ev, Ei in zip(evs, E[o1:]):
        m = len(ev)
        out = [[0] * n for _ in range(m)]
        for i in range(m):
            for l, c in enumerate(ev[i]):
                if c:
                    El = Ei[l]
                    oi = out[i]
                    for j in range(n):
                        oi[j] += c * El[j]
        R.append([[x % p for x in row] for row in out])
    from .forms import rdeg

    s1 = _finish_shift(rdeg(P1, s), s)
    P2 = pm_intbasis(R, tail_pts, s1, ctx)
    return pm_mul(P2, P1)
