"""Dense univariate polynomial arithmetic over F_p.

Coefficient vectors are Python lists, low degree first, with no trailing
zeros (the zero polynomial is the empty list; degree queries return -1).
The raw helpers at the bottom operate on plain lists and are shared with
the polynomial-matrix layer; the Poly class is the public wrapper.

Multiplication auto-selects between the schoolbook loop, Karatsuba, and a
product lifted to Z[x]: coefficients are packed into fixed-width digits of
one big integer each, multiplied exactly with CPython's bignum kernel and
reduced back mod p.  The lift plays the role of CRT-based FFT multipli-
cation for primes whose 2-adic structure cannot host a long transform,
with a single code path for every modulus.  An in-field transform via
NttPlan is also provided and used when a plan of sufficient length exists.
"""

from . import config
from .errors import (
    BothZero,
    CtxMismatch,
    DegreeTooLarge,
    DuplicatePoints,
    LengthMismatch,
    NotInvertibleAtZero,
    OrderTooSmall,
)
from .modring import NttPlan, field_new, ntt_forward, ntt_inverse


# ---------------------------------------------------------------------------
# raw coefficient-list helpers


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _neg(a, p):
    return [(-x) % p for x in a]


def _scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [x * c % p for x in a]


def _shift(a, k):
    """Multiply by x^k (k >= 0)."""
    if not a:
        return []
    return [0] * k + a


def _mul_naive(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    if len(a) > len(b):
        a, b = b, a
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _mul_karatsuba(a, b, p):
    n = min(len(a), len(b))
    if n <= config.MUL_NAIVE_MAX:
        return _mul_naive(a, b, p)
    h = max(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_karatsuba(a0, b0, p)
    z2 = _mul_karatsuba(a1, b1, p)
    z1 = _mul_karatsuba(_add(a0, a1, p), _add(b0, b1, p), p)
    z1 = _sub(_sub(z1, z0, p), z2, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] = (out[i] + v) % p
    for i, v in enumerate(z1):
        out[i + h] = (out[i + h] + v) % p
    for i, v in enumerate(z2):
        out[i + 2 * h] = (out[i + 2 * h] + v) % p
    return _trim(out)


def _digit_bytes(k):
    # digits must hold k products of two (p-1) values, p < 2^62
    w = 17
    cap = 1 << (8 * w)
    while k * ((1 << 62) - 1) ** 2 >= cap:
        w += 1
        cap = 1 << (8 * w)
    return w


def _pack(a, w):
    return int.from_bytes(
        b"".join(x.to_bytes(w, "little") for x in a), "little"
    )


def _mul_zlift(a, b, p):
    """Exact product through Z[x] with packed-digit big integers."""
    if not a or not b:
        return []
    w = _digit_bytes(min(len(a), len(b)))
    prod = _pack(a, w) * _pack(b, w)
    n = len(a) + len(b) - 1
    buf = prod.to_bytes(n * w + w, "little")
    return _trim(
        [int.from_bytes(buf[i * w : (i + 1) * w], "little") % p for i in range(n)]
    )


def _mul_ntt(a, b, plan):
    """Product via a length-2^k transform; requires 2^k >= len(a)+len(b)-1."""
    p = plan.ctx.p
    n = plan.length
    fa = ntt_forward(plan, a + [0] * (n - len(a)))
    fb = ntt_forward(plan, b + [0] * (n - len(b)))
    return _trim(ntt_inverse(plan, [x * y % p for x, y in zip(fa, fb)]))


def _mul(a, b, ctx):
    p = ctx.p
    small = min(len(a), len(b))
    if small <= config.MUL_NAIVE_MAX:
        return _mul_naive(a, b, p)
    if len(a) + len(b) - 2 <= config.MUL_KARATSUBA_MAX:
        return _mul_karatsuba(a, b, p)
    return _mul_zlift(a, b, p)


def _mulmod_xk(a, b, k, ctx):
    """Product truncated mod x^k."""
    return _trim(_mul(a[:k], b[:k], ctx)[:k])


def _eval_horner(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _divmod(a, b, p):
    """Quotient and remainder; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, -1, p)
    if len(a) - 1 < db:
        return [], _trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c * inv % p
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return _trim(q), _trim(a)


def _rem(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return []
    if a[-1] == 1:
        return a[:]
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _deriv(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _gcd_raw(a, b, p):
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p)


# ---------------------------------------------------------------------------
# Poly wrapper


class Poly:
    """Immutable dense polynomial over a FieldCtx."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        p = ctx.p
        c = [int(x) % p for x in coeffs]
        self.coeffs = _trim(c)

    @classmethod
    def _raw(cls, ctx, coeffs):
        """Wrap an already-normalized list without copying."""
        self = object.__new__(cls)
        self.ctx = ctx
        self.coeffs = coeffs
        return self

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ctx.p == other.ctx.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.p, tuple(self.coeffs)))

    def __repr__(self):
        return f"Poly(p={self.ctx.p}, {self.coeffs})"

    def _check(self, other):
        if self.ctx.p != other.ctx.p:
            raise CtxMismatch("operands live in different prime fields")

    def __add__(self, other):
        self._check(other)
        return Poly._raw(self.ctx, _add(self.coeffs, other.coeffs, self.ctx.p))

    def __sub__(self, other):
        self._check(other)
        return Poly._raw(self.ctx, _sub(self.coeffs, other.coeffs, self.ctx.p))

    def __neg__(self):
        return Poly._raw(self.ctx, _neg(self.coeffs, self.ctx.p))

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly._raw(self.ctx, _scale(self.coeffs, other, self.ctx.p))
        self._check(other)
        return Poly._raw(self.ctx, _mul(self.coeffs, other.coeffs, self.ctx))

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        q, r = _divmod(self.coeffs, other.coeffs, self.ctx.p)
        return Poly._raw(self.ctx, q), Poly._raw(self.ctx, r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def shift(self, k):
        """Multiply by x^k."""
        return Poly._raw(self.ctx, _shift(self.coeffs, k))

    def truncate(self, k):
        return Poly._raw(self.ctx, _trim(self.coeffs[:k]))

    def monic(self):
        return Poly._raw(self.ctx, _monic(self.coeffs, self.ctx.p))

    def eval(self, x):
        return _eval_horner(self.coeffs, x % self.ctx.p, self.ctx.p)

    def deriv(self):
        return Poly._raw(self.ctx, _deriv(self.coeffs, self.ctx.p))


def poly(ctx, coeffs):
    return Poly(ctx, coeffs)


def zero(ctx):
    return Poly._raw(ctx, [])


def one(ctx):
    return Poly._raw(ctx, [1])


def x(ctx):
    return Poly._raw(ctx, [0, 1])


def mul(F, G):
    """Exact product, algorithm selected by degree."""
    return F * G


def middle_product(F, G, c, d):
    """Coefficients c..c+d-1 of F*G, returned as a polynomial of degree < d.

    Requires deg F < c and deg G < c + d; these bounds make the wrapped
    transform below exact and are part of the contract.
    """
    F._check(G)
    if F.degree >= c:
        raise DegreeTooLarge(f"deg F = {F.degree} must be < c = {c}")
    if G.degree >= c + d:
        raise DegreeTooLarge(f"deg G = {G.degree} must be < c + d = {c + d}")
    return Poly._raw(F.ctx, _middle(F.coeffs, G.coeffs, c, d, F.ctx))


def _middle(a, b, c, d, ctx):
    """Slice [c, c+d) of a*b; exact whenever len(a) <= c+1 wrap-safe bound holds."""
    if not a or not b or d <= 0:
        return []
    p = ctx.p
    la = len(a)
    if la * d <= config.MIDDLE_PRODUCT_FFT_MIN ** 2 // 4 and la * d <= 16384:
        # transposed schoolbook: only the d requested coefficients
        out = []
        for t in range(c, c + d):
            lo = max(0, t - len(b) + 1)
            hi = min(la - 1, t)
            acc = 0
            for j in range(lo, hi + 1):
                acc += a[j] * b[t - j]
            out.append(acc % p)
        return _trim(out)
    need = la - 1 + d + 1  # cyclic length with no wrap into the window
    log_len = max(1, (need - 1).bit_length())
    if log_len <= ctx.two_adicity:
        plan = NttPlan(ctx, log_len)
        n = plan.length
        fa = ntt_forward(plan, a + [0] * (n - la))
        bb = [0] * n
        for i, v in enumerate(b):
            bb[i % n] = (bb[i % n] + v) % p
        fb = ntt_forward(plan, bb)
        cyc = ntt_inverse(plan, [u * v % p for u, v in zip(fa, fb)])
        return _trim([cyc[(c + t) % n] for t in range(d)])
    full = _mul(a, b, ctx)
    return _trim(full[c : c + d])


def inv_trunc(F, k):
    """G with F*G = 1 mod x^k, by Newton iteration."""
    if F.is_zero() or F.coeffs[0] == 0:
        raise NotInvertibleAtZero("constant term is zero")
    ctx = F.ctx
    p = ctx.p
    g = [pow(F.coeffs[0], -1, p)]
    prec = 1
    f = F.coeffs
    while prec < k:
        prec = min(2 * prec, k)
        fg = _mulmod_xk(f, g, prec, ctx)
        two_minus = _sub([2], fg, p)
        g = _mulmod_xk(g, two_minus, prec, ctx)
    return Poly._raw(ctx, _trim(g[:k]))


def xgcd(F, G):
    """Extended Euclid: monic g = gcd(F, G) with g = s*F + t*G."""
    F._check(G)
    if F.is_zero() and G.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    ctx = F.ctx
    p = ctx.p
    r0, r1 = F.coeffs[:], G.coeffs[:]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, ctx), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, ctx), p)
    if r0 and r0[-1] != 1:
        inv = pow(r0[-1], -1, p)
        r0 = [v * inv % p for v in r0]
        s0 = [v * inv % p for v in s0]
        t0 = [v * inv % p for v in t0]
    return Poly._raw(ctx, r0), Poly._raw(ctx, s0), Poly._raw(ctx, t0)


# ---------------------------------------------------------------------------
# evaluation / interpolation


class GeomGrid:
    """Evaluation grid (1, alpha, ..., alpha^(len-1)); alpha of order >= len."""

    __slots__ = ("ctx", "alpha", "len", "points")

    def __init__(self, ctx, alpha, length):
        self.ctx = ctx
        self.alpha = alpha % ctx.p
        self.len = length
        pts = [1] * length
        for i in range(1, length):
            pts[i] = pts[i - 1] * self.alpha % ctx.p
        self.points = pts
        if len(set(pts)) != length:
            raise OrderTooSmall(
                f"alpha={alpha} has order < {length} modulo {ctx.p}"
            )


def _tri_powers(alpha, n, p):
    """[alpha^C(k,2) for k in range(n)] (C(0,2)=C(1,2)=0)."""
    out = [1] * n
    run = 1  # alpha^(k-1) when updating index k
    for k in range(2, n):
        run = run * alpha % p
        out[k] = out[k - 1] * run % p
    if n > 1:
        out[1] = 1
    return out


def _eval_geometric_raw(a, alpha, npts, ctx):
    """[F(alpha^j) for j < npts] via the chirp correlation."""
    p = ctx.p
    if not a:
        return [0] * npts
    la = len(a)
    tri = _tri_powers(alpha, la + npts, p)
    inv_alpha = pow(alpha, -1, p)
    tri_inv = _tri_powers(inv_alpha, max(la, npts), p)
    u = [a[i] * tri_inv[i] % p for i in range(la)]
    u.reverse()  # correlation as convolution
    prod = _mul(u, tri[: la + npts - 1], ctx)
    out = []
    for j in range(npts):
        k = la - 1 + j
        v = prod[k] if k < len(prod) else 0
        out.append(v * tri_inv[j] % p)
    return out


def eval_geometric(F, grid):
    """[F(1), F(alpha), ..., F(alpha^(len-1))]."""
    if F.degree + 1 > 0 and grid.len < 1:
        return []
    return _eval_geometric_raw(F.coeffs, grid.alpha, grid.len, F.ctx)


def _node_poly_geometric(grid):
    """prod_j (x - alpha^j) via the Gauss binomial expansion."""
    ctx, p, q, n = grid.ctx, grid.ctx.p, grid.alpha, grid.len
    # [n choose k]_q by the recurrence; requires q^i != 1 for 1 <= i < n
    coeffs = [0] * (n + 1)
    qbin = 1
    qpow_n = pow(q, n, p)
    qpow_k = 1
    tri = _tri_powers(q, n + 1, p)
    for k in range(n + 1):
        j = n - k
        sign = 1 if j % 2 == 0 else p - 1
        coeffs[k] = sign * tri[j] % p * qbin % p
        if k + 1 == n:
            qbin = 1  # [n, n]_q; the recurrence divides by q^n - 1 here
        elif k < n:
            # [n, k+1]_q = [n, k]_q * (q^(n-k) - 1) / (q^(k+1) - 1)
            num = (qpow_n * pow(q, -k, p) - 1) % p
            den = (qpow_k * q - 1) % p
            qbin = qbin * num % p * pow(den, -1, p) % p
            qpow_k = qpow_k * q % p
    return coeffs


def _interp_geometric_raw(vals, alpha, ctx):
    p = ctx.p
    n = len(vals)
    if all(v == 0 for v in vals):
        return []
    grid = GeomGrid(ctx, alpha, n)
    M = _node_poly_geometric(grid)
    dM = _deriv(M, p)
    dvals = _eval_geometric_raw(dM, alpha, n, ctx)
    c = [vals[j] * pow(dvals[j], -1, p) % p for j in range(n)]
    # series of sum_j c_j / (x - alpha^j): coefficient t is
    # -sum_j (c_j alpha^-j) * (alpha^-t)^j, a chirp at ratio alpha^-1
    inv_alpha = pow(alpha, -1, p)
    w = [c[j] * pow(inv_alpha, j, p) % p for j in range(n)]
    u = _eval_geometric_raw(w, inv_alpha, n, ctx)
    series = [(-v) % p for v in u]
    F = _mulmod_xk(M, series, n, ctx)
    return _trim(F)


def interp_geometric(vals, grid):
    """Unique F of degree < len with F(alpha^i) = vals[i]."""
    if len(vals) != grid.len:
        raise LengthMismatch("value count must match grid length")
    return Poly._raw(grid.ctx, _interp_geometric_raw(list(vals), grid.alpha, grid.ctx))


def _subproduct_tree(pts, ctx):
    p = ctx.p
    level = [[(-x) % p, 1] for x in pts]
    tree = [level]
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            nxt.append(_mul(level[i], level[i + 1], ctx))
        if len(level) % 2:
            nxt.append(level[-1])
        tree.append(nxt)
        level = nxt
    return tree


def eval_general(F, pts):
    """Multipoint evaluation at arbitrary points (remainder-tree based)."""
    ctx = F.ctx
    p = ctx.p
    pts = [x % p for x in pts]
    if not pts:
        return []
    a = F.coeffs

    def rec(coeffs, points):
        if len(points) <= 8 or len(coeffs) <= 8:
            return [_eval_horner(coeffs, x, p) for x in points]
        h = len(points) // 2
        left, right = points[:h], points[h:]
        ml = _node_poly(left, ctx)
        mr = _node_poly(right, ctx)
        return rec(_rem(coeffs, ml, p), left) + rec(_rem(coeffs, mr, p), right)

    return rec(a, pts)


def _node_poly(pts, ctx):
    p = ctx.p
    acc = [1]
    for x in pts:
        acc = _mul(acc, [(-x) % p, 1], ctx)
    return acc


def interp_general(vals, pts, ctx):
    """Unique interpolant of degree < len(pts) through (pts[i], vals[i])."""
    p = ctx.p
    pts = [x % p for x in pts]
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("interpolation points must be pairwise distinct")
    if len(vals) != len(pts):
        raise LengthMismatch("value count must match point count")
    if not pts:
        return zero(ctx)
    M = _node_poly(pts, ctx)
    dM = _deriv(M, p)
    F = Poly._raw(ctx, dM)
    dvals = eval_general(F, pts)
    w = [v * pow(dv, -1, p) % p for v, dv in zip(vals, dvals)]

    def rec(points, weights):
        # returns (sum_i w_i prod_{j != i} (x - x_j), prod_j (x - x_j))
        if len(points) == 1:
            return [weights[0]] if weights[0] else [], [(-points[0]) % p, 1]
        h = len(points) // 2
        fl, ml = rec(points[:h], weights[:h])
        fr, mr = rec(points[h:], weights[h:])
        f = _add(_mul(fl, mr, ctx), _mul(fr, ml, ctx), p)
        return f, _mul(ml, mr, ctx)

    f, _ = rec(pts, w)
    return Poly._raw(ctx, _trim(f))


# ---------------------------------------------------------------------------
# text serialization (CLI interchange format)


def poly_to_text(F):
    """Two lines: the prime, then coefficients low to high."""
    return f"{F.ctx.p}\n{' '.join(str(c) for c in F.coeffs)}\n"


def poly_from_text(text, ctx=None):
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty polynomial file")
    p = int(lines[0].strip())
    if ctx is None or ctx.p != p:
        ctx = field_new(p)
    coeffs = []
    if len(lines) > 1 and lines[1].strip():
        coeffs = [int(t) for t in lines[1].split()]
    return Poly(ctx, coeffs)
