"""Polynomial matrices over F_p and their multiplication variants.

A PolMat stores raw coefficient lists (low degree first, trimmed) in
row-major order.  Both views of the data are available: matrix of
polynomials (the storage) and polynomial of constant matrices
(to_matpoly / from_matpoly), which round-trip losslessly.

pm_mul dispatches between four exact strategies:

- "naive":       entrywise dot products with scalar multiplication
- "ntt":         evaluation/interpolation at roots of unity
- "geometric":   evaluation/interpolation at a geometric progression
- "vandermonde": evaluation/interpolation written as dense constant
                 matrix products against (inverse) Vandermonde matrices

All applicable strategies return identical matrices; thresholds only pick
which one runs.
"""

from . import config, _dense
from .errors import (
    CtxMismatch,
    DegreeTooLarge,
    DimMismatch,
    EnvelopeExceeded,
    FieldTooSmall,
    NoSuchElement,
    OrderTooSmall,
)
from .modring import NttPlan, field_new, order_at_least, ntt_forward, ntt_inverse
from .upoly import (
    Poly,
    _add,
    _eval_geometric_raw,
    _eval_horner,
    _interp_geometric_raw,
    _middle,
    _mul,
    _mul_naive,
    _node_poly,
    _sub,
    _trim,
)

STRATEGIES = ("naive", "ntt", "geometric", "vandermonde")


class PolMat:
    """Dense m x n matrix of polynomials, immutable by convention."""

    __slots__ = ("ctx", "m", "n", "rows", "_deg")

    def __init__(self, ctx, rows, ncols=None):
        self.ctx = ctx
        self.m = len(rows)
        self.n = len(rows[0]) if self.m else (ncols or 0)
        self.rows = rows
        self._deg = None

    @classmethod
    def from_entries(cls, ctx, entries):
        """entries: nested list of coefficient lists or Poly values."""
        rows = []
        p = ctx.p
        for row in entries:
            out = []
            for e in row:
                if isinstance(e, Poly):
                    out.append(e.coeffs[:])
                else:
                    out.append(_trim([int(c) % p for c in e]))
            rows.append(out)
        return cls(ctx, rows)

    @classmethod
    def zeros(cls, ctx, m, n):
        return cls(ctx, [[[] for _ in range(n)] for _ in range(m)])

    @classmethod
    def identity(cls, ctx, n):
        rows = [[[] for _ in range(n)] for _ in range(n)]
        for i in range(n):
            rows[i][i] = [1]
        return cls(ctx, rows)

    @classmethod
    def from_const(cls, ctx, mat):
        p = ctx.p
        return cls(
            ctx,
            [[([v % p] if v % p else []) for v in row] for row in mat],
        )

    @property
    def degree(self):
        """Max entry degree; -1 for the zero matrix."""
        if self._deg is None:
            d = -1
            for row in self.rows:
                for e in row:
                    if len(e) - 1 > d:
                        d = len(e) - 1
            self._deg = d
        return self._deg

    def entry(self, i, j):
        return Poly._raw(self.ctx, self.rows[i][j][:])

    def coefficient(self, k):
        """Constant matrix of the degree-k coefficients."""
        return [
            [e[k] if k < len(e) else 0 for e in row] for row in self.rows
        ]

    def to_matpoly(self):
        """List of constant matrices indexed by degree (length degree+1)."""
        return [self.coefficient(k) for k in range(self.degree + 1)]

    @classmethod
    def from_matpoly(cls, ctx, coeffs, m=None, n=None):
        if not coeffs:
            return cls.zeros(ctx, m or 0, n or 0)
        m = len(coeffs[0])
        n = len(coeffs[0][0]) if m else 0
        rows = []
        for i in range(m):
            row = []
            for j in range(n):
                row.append(_trim([c[i][j] for c in coeffs]))
            rows.append(row)
        return cls(ctx, rows)

    def transpose(self):
        return PolMat(
            self.ctx,
            [[self.rows[i][j][:] for i in range(self.m)] for j in range(self.n)],
        )

    def truncate(self, k):
        """Entrywise mod x^k."""
        return PolMat(
            self.ctx, [[_trim(e[:k]) for e in row] for row in self.rows]
        )

    def slice_coeffs(self, lo, hi):
        """Coefficients lo..hi-1, reindexed from degree 0."""
        return PolMat(
            self.ctx, [[_trim(e[lo:hi]) for e in row] for row in self.rows]
        )

    def shift(self, k):
        """Entrywise multiplication by x^k."""
        return PolMat(
            self.ctx,
            [[([0] * k + e if e else []) for e in row] for row in self.rows],
        )

    def submatrix(self, rows, cols):
        cols = list(cols)
        return PolMat(
            self.ctx,
            [[self.rows[i][j][:] for j in cols] for i in rows],
            ncols=len(cols),
        )

    def vstack(self, other):
        _same_ctx(self, other)
        if self.n != other.n:
            raise DimMismatch("column counts differ")
        return PolMat(self.ctx, [r[:] for r in self.rows] + [r[:] for r in other.rows])

    def hstack(self, other):
        _same_ctx(self, other)
        if self.m != other.m:
            raise DimMismatch("row counts differ")
        return PolMat(
            self.ctx,
            [a[:] + b[:] for a, b in zip(self.rows, other.rows)],
        )

    def is_zero(self):
        return all(not e for row in self.rows for e in row)

    def __eq__(self, other):
        return (
            isinstance(other, PolMat)
            and self.ctx.p == other.ctx.p
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(
            (self.ctx.p, tuple(tuple(tuple(e) for e in r) for r in self.rows))
        )

    def __repr__(self):
        return f"PolMat(p={self.ctx.p}, {self.m}x{self.n}, deg={self.degree})"

    def __add__(self, other):
        _same_ctx(self, other)
        if (self.m, self.n) != (other.m, other.n):
            raise DimMismatch("shapes differ")
        p = self.ctx.p
        return PolMat(
            self.ctx,
            [
                [_add(a, b, p) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other):
        _same_ctx(self, other)
        if (self.m, self.n) != (other.m, other.n):
            raise DimMismatch("shapes differ")
        p = self.ctx.p
        return PolMat(
            self.ctx,
            [
                [_sub(a, b, p) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def scale(self, c):
        p = self.ctx.p
        c %= p
        return PolMat(
            self.ctx, [[_trim([v * c % p for v in e]) for e in row] for row in self.rows]
        )

    def scale_poly(self, f):
        """Entrywise multiplication by a scalar polynomial."""
        fc = f.coeffs if isinstance(f, Poly) else f
        return PolMat(
            self.ctx,
            [[_mul(e, fc, self.ctx) for e in row] for row in self.rows],
        )


def _same_ctx(A, B):
    if A.ctx.p != B.ctx.p:
        raise CtxMismatch("matrices live in different prime fields")


# ---------------------------------------------------------------------------
# multiplication strategies


def _mul_dims(A, B):
    _same_ctx(A, B)
    if A.n != B.m:
        raise DimMismatch(f"cannot multiply {A.m}x{A.n} by {B.m}x{B.n}")


def _pm_mul_naive(A, B):
    ctx = A.ctx
    p = ctx.p
    out = []
    for i in range(A.m):
        arow = A.rows[i]
        row = []
        for j in range(B.n):
            acc = []
            for k in range(A.n):
                a = arow[k]
                b = B.rows[k][j]
                if a and b:
                    acc = _add(acc, _mul(a, b, ctx), p)
            row.append(acc)
        out.append(row)
    return PolMat(ctx, out, ncols=B.n)


def _eval_all_entries_ntt(M, plan):
    """vals[t] = constant matrix of entry values at the t-th root power."""
    n = plan.length
    vals = [[[0] * M.n for _ in range(M.m)] for _ in range(n)]
    for i in range(M.m):
        for j in range(M.n):
            e = M.rows[i][j]
            if not e:
                continue
            f = ntt_forward(plan, e + [0] * (n - len(e)))
            for t in range(n):
                vals[t][i][j] = f[t]
    return vals


def _pm_mul_ntt(A, B):
    ctx = A.ctx
    p = ctx.p
    need = A.degree + B.degree + 1
    log_len = max(1, (need - 1).bit_length())
    if log_len > ctx.two_adicity:
        raise OrderTooSmall("no long enough root of unity for this product")
    plan = NttPlan(ctx, log_len)
    va = _eval_all_entries_ntt(A, plan)
    vb = _eval_all_entries_ntt(B, plan)
    vc = [_dense.mat_mul(a, b, p) for a, b in zip(va, vb)]
    rows = []
    for i in range(A.m):
        row = []
        for j in range(B.n):
            col = [vc[t][i][j] for t in range(plan.length)]
            row.append(_trim(ntt_inverse(plan, col)))
        rows.append(row)
    return PolMat(ctx, rows)


def _geometric_alpha(ctx, npts):
    try:
        return order_at_least(ctx, npts)
    except NoSuchElement:
        raise OrderTooSmall(f"field too small for {npts} geometric points")


def _pm_mul_geometric(A, B):
    ctx = A.ctx
    p = ctx.p
    npts = A.degree + B.degree + 1
    alpha = _geometric_alpha(ctx, npts)

    def eval_entries(M):
        vals = [[[0] * M.n for _ in range(M.m)] for _ in range(npts)]
        for i in range(M.m):
            for j in range(M.n):
                e = M.rows[i][j]
                if not e:
                    continue
                f = _eval_geometric_raw(e, alpha, npts, ctx)
                for t in range(npts):
                    vals[t][i][j] = f[t]
        return vals

    va = eval_entries(A)
    vb = eval_entries(B)
    vc = [_dense.mat_mul(a, b, p) for a, b in zip(va, vb)]
    rows = []
    for i in range(A.m):
        row = []
        for j in range(B.n):
            col = [vc[t][i][j] for t in range(npts)]
            row.append(_trim(_interp_geometric_raw(col, alpha, ctx)))
        rows.append(row)
    return PolMat(ctx, rows)


def _vandermonde_pair(ctx, pts, max_deg):
    """Evaluation matrix (len(pts) x max_deg+1) and interpolation matrix."""
    p = ctx.p
    V = []
    for x in pts:
        row = [1] * (max_deg + 1)
        for t in range(1, max_deg + 1):
            row[t] = row[t - 1] * x % p
        V.append(row)
    return V


def _lagrange_interp_matrix(ctx, pts):
    """W with W[t][j] = coeff_t of the j-th Lagrange basis polynomial."""
    p = ctx.p
    n = len(pts)
    M = _node_poly(pts, ctx)
    W = [[0] * n for _ in range(n)]
    for j, xj in enumerate(pts):
        # M / (x - xj), synthetic division
        q = [0] * n
        acc = 0
        for t in range(n, 0, -1):
            acc = (M[t] + acc * xj) % p
            q[t - 1] = acc
        d = _eval_horner(q, xj, p)
        inv = pow(d, -1, p)
        for t in range(n):
            W[t][j] = q[t] * inv % p
    return W


def _flatten_coeffs(M, max_deg):
    """(max_deg+1) x (m*n) matrix of coefficients, entries flattened row-major."""
    out = [[0] * (M.m * M.n) for _ in range(max_deg + 1)]
    e = 0
    for row in M.rows:
        for ent in row:
            for t, c in enumerate(ent):
                out[t][e] = c
            e += 1
    return out


def _pm_mul_vandermonde(A, B):
    ctx = A.ctx
    p = ctx.p
    npts = A.degree + B.degree + 1
    if npts > p:
        raise FieldTooSmall(f"need {npts} distinct points, field has {p}")
    pts = list(range(npts))
    VA = _vandermonde_pair(ctx, pts, max(A.degree, 0))
    VB = _vandermonde_pair(ctx, pts, max(B.degree, 0))
    evA = _dense.mat_mul(VA, _flatten_coeffs(A, max(A.degree, 0)), p)
    evB = _dense.mat_mul(VB, _flatten_coeffs(B, max(B.degree, 0)), p)
    k = A.n
    vc = []
    for t in range(npts):
        at = [evA[t][i * k : (i + 1) * k] for i in range(A.m)]
        bt = [evB[t][i * B.n : (i + 1) * B.n] for i in range(B.m)]
        ct = _dense.mat_mul(at, bt, p)
        vc.append([v for row in ct for v in row])
    W = _lagrange_interp_matrix(ctx, pts)
    cc = _dense.mat_mul(W, vc, p)
    rows = []
    for i in range(A.m):
        row = []
        for j in range(B.n):
            e = i * B.n + j
            row.append(_trim([cc[t][e] for t in range(npts)]))
        rows.append(row)
    return PolMat(ctx, rows)


_STRATEGY_FUNCS = {
    "naive": _pm_mul_naive,
    "ntt": _pm_mul_ntt,
    "geometric": _pm_mul_geometric,
    "vandermonde": _pm_mul_vandermonde,
}


def applicable_strategies(A, B):
    """Strategies mathematically valid for this product, in dispatch order."""
    ctx = A.ctx
    out = ["naive"]
    if A.degree < 0 or B.degree < 0:
        return out
    npts = A.degree + B.degree + 1
    if max(1, (npts - 1).bit_length()) <= ctx.two_adicity:
        out.append("ntt")
    if npts <= ctx.p - 1:
        out.append("geometric")
    if npts <= ctx.p:
        out.append("vandermonde")
    return out


def pm_mul(A, B, strategy=None):
    """Exact product A*B with automatic or forced strategy selection."""
    _mul_dims(A, B)
    if strategy is not None:
        if strategy not in _STRATEGY_FUNCS:
            raise ValueError(f"unknown strategy {strategy!r}")
        return _STRATEGY_FUNCS[strategy](A, B)
    if A.degree < 0 or B.degree < 0:
        return PolMat.zeros(A.ctx, A.m, B.n)
    npts = A.degree + B.degree + 1
    if (
        max(A.m, A.n, B.n) <= config.PM_MUL_NAIVE_MAX_DIM
        or npts < config.PM_MUL_EVAL_MIN_POINTS
    ):
        return _pm_mul_naive(A, B)
    ctx = A.ctx
    if max(1, (npts - 1).bit_length()) <= ctx.two_adicity:
        return _pm_mul_ntt(A, B)
    if npts <= ctx.p - 1:
        return _pm_mul_geometric(A, B)
    return _pm_mul_naive(A, B)


def pm_middle_product(A, B, c, d):
    """Coefficient slice c..c+d-1 of A*B.

    Contract mirrors the scalar middle product: deg A < c (checked against
    the matrix degree) and deg B < c + d.
    """
    _mul_dims(A, B)
    if A.degree >= c and c > 0:
        raise DegreeTooLarge(f"deg A = {A.degree} must be < c = {c}")
    if B.degree >= c + d:
        raise DegreeTooLarge(f"deg B = {B.degree} must be < c+d = {c + d}")
    return _pm_middle(A, B, c, d)


def _pm_middle(A, B, c, d):
    """Slice [c, c+d) of A*B without precondition checks (internal)."""
    ctx = A.ctx
    p = ctx.p
    if A.degree < 0 or B.degree < 0 or d <= 0:
        return PolMat.zeros(ctx, A.m, B.n)
    need = A.degree + d + 1
    log_len = max(1, (need - 1).bit_length())
    wrap_ok = c + (1 << log_len) > A.degree + B.degree
    if (
        need >= config.MIDDLE_PRODUCT_FFT_MIN
        and log_len <= ctx.two_adicity
        and wrap_ok
    ):
        plan = NttPlan(ctx, log_len)
        n = plan.length
        va = _eval_all_entries_ntt(A, plan)
        # fold B cyclically before transforming
        vb = [[[0] * B.n for _ in range(B.m)] for _ in range(n)]
        for i in range(B.m):
            for j in range(B.n):
                e = B.rows[i][j]
                if not e:
                    continue
                folded = [0] * n
                for t, v in enumerate(e):
                    folded[t % n] = (folded[t % n] + v) % p
                f = ntt_forward(plan, folded)
                for t in range(n):
                    vb[t][i][j] = f[t]
        vc = [_dense.mat_mul(a, b, p) for a, b in zip(va, vb)]
        rows = []
        for i in range(A.m):
            row = []
            for j in range(B.n):
                col = ntt_inverse(plan, [vc[t][i][j] for t in range(n)])
                row.append(_trim([col[(c + t) % n] for t in range(d)]))
            rows.append(row)
        return PolMat(ctx, rows)
    # entrywise transposed products
    out = []
    for i in range(A.m):
        row = []
        for j in range(B.n):
            acc = []
            for k in range(A.n):
                a = A.rows[i][k]
                b = B.rows[k][j]
                if a and b:
                    acc = _add(acc, _middle(a, b, c, d, ctx), p)
            row.append(acc)
        out.append(row)
    return PolMat(ctx, out)


def pm_eval(A, alpha):
    """Entrywise Horner evaluation; returns a constant matrix."""
    p = A.ctx.p
    alpha %= p
    return [[_eval_horner(e, alpha, p) for e in row] for row in A.rows]


# ---------------------------------------------------------------------------
# repeated-multiplication helper


class Multiplier:
    """Precomputed transforms of a fixed left factor A.

    apply(B) equals pm_mul(A, B) for any B with B.degree <= max_rhs_degree;
    beyond the declared envelope EnvelopeExceeded is raised.
    """

    __slots__ = ("A", "max_rhs_degree", "_mode", "_plan", "_vals", "_alpha", "_npts")

    def __init__(self, A, max_rhs_degree):
        self.A = A
        self.max_rhs_degree = max_rhs_degree
        ctx = A.ctx
        npts = max(A.degree, 0) + max(max_rhs_degree, 0) + 1
        log_len = max(1, (npts - 1).bit_length())
        if (
            npts >= config.PM_MUL_EVAL_MIN_POINTS
            and max(A.m, A.n) > config.PM_MUL_NAIVE_MAX_DIM
            and log_len <= ctx.two_adicity
        ):
            self._mode = "ntt"
            self._plan = NttPlan(ctx, log_len)
            self._vals = _eval_all_entries_ntt(A, self._plan)
            self._alpha = None
            self._npts = self._plan.length
        else:
            self._mode = "naive"
            self._plan = None
            self._vals = None
            self._alpha = None
            self._npts = npts

    def apply(self, B):
        if B.degree > self.max_rhs_degree:
            raise EnvelopeExceeded(
                f"deg B = {B.degree} exceeds envelope {self.max_rhs_degree}"
            )
        _mul_dims(self.A, B)
        if self._mode == "naive":
            return _pm_mul_naive(self.A, B)
        ctx = self.A.ctx
        p = ctx.p
        plan = self._plan
        vb = _eval_all_entries_ntt(B, plan)
        vc = [_dense.mat_mul(a, b, p) for a, b in zip(self._vals, vb)]
        rows = []
        for i in range(self.A.m):
            row = []
            for j in range(B.n):
                col = [vc[t][i][j] for t in range(plan.length)]
                row.append(_trim(ntt_inverse(plan, col)))
            rows.append(row)
        return PolMat(ctx, rows)


def multiplier_precompute(A, max_rhs_degree):
    return Multiplier(A, max_rhs_degree)


def multiplier_apply(mult, B):
    return mult.apply(B)


# ---------------------------------------------------------------------------
# text serialization (CLI interchange format)


def polmat_to_text(A):
    """Header "p m n", then one coefficient line per entry, row-major."""
    lines = [f"{A.ctx.p} {A.m} {A.n}"]
    for row in A.rows:
        for e in row:
            lines.append(" ".join(str(c) for c in e))
    return "\n".join(lines) + "\n"


def polmat_from_text(text, ctx=None):
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("matrix header must be 'p m n'")
    p, m, n = (int(t) for t in head)
    if ctx is None or ctx.p != p:
        ctx = field_new(p)
    body = lines[1:]
    if len(body) < m * n:
        body = body + [""] * (m * n - len(body))
    rows = []
    it = iter(body)
    for _ in range(m):
        row = []
        for _ in range(n):
            s = next(it).strip()
            row.append(_trim([int(t) % p for t in s.split()]) if s else [])
        rows.append(row)
    return PolMat(ctx, rows)


def random_polmat(ctx, m, n, deg, rng):
    """Uniform random matrix with entries of degree <= deg."""
    p = ctx.p
    return PolMat(
        ctx,
        [
            [_trim([rng.randrange(p) for _ in range(deg + 1)]) for _ in range(n)]
            for _ in range(m)
        ],
    )
