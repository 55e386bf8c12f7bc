"""Bivariate resultants and characteristic polynomials.

villard_resultant evaluates the top-right m x m block of the inverse
Sylvester matrix at geometric points (through the Toeplitz-like generator
representation fed by one extended GCD per point), reconstructs the
minimal left fraction of that rational block, and returns det(Q) scaled
to match the true resultant at a held-out point.  Genericity violations
are detected Las Vegas style and fall back to the direct
evaluation/interpolation resultant.

charpoly_generic follows the same determinant-of-denominator route for
x I - M with M the multiplication matrix of A modulo P, computing the
needed block entries with baby-steps/giant-steps modular products instead
of the structured inverse.
"""

import math
import random

from . import _dense, config
from .detred import determinant
from .errors import (
    FieldTooSmall,
    GenericityFailure,
    NoSuchElement,
    NotCoprime,
    NotInvertibleAtZero,
    ReconstructionFailed,
    SingularEvaluation,
    VerificationFailed,
)
from .fraction import fracrec_points, fracrec_series
from .modring import field_new, order_at_least
from .polmat import PolMat
from .upoly import (
    Poly,
    _divmod,
    _eval_horner,
    _mul,
    _rem,
    _scale,
    _sub,
    _trim,
    interp_general,
    xgcd,
)


class BivarPoly:
    """Polynomial in z and x: a list of x-coefficient polynomials per z power."""

    __slots__ = ("ctx", "zcoeffs")

    def __init__(self, ctx, zcoeffs):
        p = ctx.p
        zc = [_trim([int(c) % p for c in e]) for e in zcoeffs]
        while zc and not zc[-1]:
            zc.pop()
        self.ctx = ctx
        self.zcoeffs = zc

    @property
    def deg_z(self):
        return len(self.zcoeffs) - 1

    @property
    def deg_x(self):
        return max((len(e) - 1 for e in self.zcoeffs if e), default=-1)

    def eval_x(self, alpha):
        """Specialize x = alpha; returns the z-coefficient list."""
        p = self.ctx.p
        return _trim([_eval_horner(e, alpha % p, p) for e in self.zcoeffs])

    def __repr__(self):
        return f"BivarPoly(p={self.ctx.p}, deg_z={self.deg_z}, deg_x={self.deg_x})"


def bivar_to_text(F):
    lines = [f"{F.ctx.p} {F.deg_z} {max(F.deg_x, 0)}"]
    for e in F.zcoeffs:
        lines.append(" ".join(str(c) for c in e))
    return "\n".join(lines) + "\n"


def bivar_from_text(text, ctx=None):
    lines = text.splitlines()
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("bivariate header must be 'p nz dx'")
    p, nz, _dx = (int(t) for t in head)
    if ctx is None or ctx.p != p:
        ctx = field_new(p)
    body = lines[1:]
    if len(body) < nz + 1:
        body = body + [""] * (nz + 1 - len(body))
    zc = []
    for k in range(nz + 1):
        s = body[k].strip()
        zc.append([int(t) % p for t in s.split()] if s else [])
    return BivarPoly(ctx, zc)


class SylvesterCtx:
    """Input pair plus the block parameter of the determinant algorithm."""

    __slots__ = ("F", "G", "nu", "d", "m")

    def __init__(self, F, G, m=None):
        if F.deg_z < 1 or G.deg_z < 1:
            raise ValueError("both inputs must have positive degree in z")
        self.F = F
        self.G = G
        self.nu = F.deg_z + G.deg_z
        self.d = max(F.deg_x, G.deg_x, 0)
        if m is None:
            nz = max(F.deg_z, G.deg_z)
            m = max(1, math.ceil(nz ** 0.4))
        self.m = min(max(1, m), self.nu)


# ---------------------------------------------------------------------------
# structured Sylvester inverse at a point


def sylvester_matrix(F, G, p):
    """Dense Sylvester matrix of two z-polynomials (layout of the oracle)."""
    u = len(F) - 1
    v = len(G) - 1
    nu = u + v
    S = [[0] * nu for _ in range(nu)]
    for j in range(v):
        for i in range(nu):
            k = u - i + j
            if 0 <= k <= u:
                S[i][j] = F[k] % p
    for j in range(v, nu):
        for i in range(nu):
            k = j - i
            if 0 <= k <= v:
                S[i][j] = G[k] % p
    return S


class StructuredInverseEval:
    """Generators of Syl(F, G)^-1 = L(c1) U(r1) + L(c2) U(r2).

    L(c) is lower triangular Toeplitz with first column c, U(r) upper
    triangular Toeplitz with first row r.  c1 is the first column of the
    inverse, r1 the first unit row; c2 and r2 come from the displacement
    rank-2 structure of the Sylvester matrix.
    """

    __slots__ = ("p", "nu", "c1", "c2", "r1", "r2")

    def __init__(self, p, nu, c1, c2, r1, r2):
        self.p = p
        self.nu = nu
        self.c1 = c1
        self.c2 = c2
        self.r1 = r1
        self.r2 = r2

    def reconstruct(self):
        """Dense inverse from the generators (small sizes, for checks)."""
        nu = self.nu
        p = self.p
        M = [[0] * nu for _ in range(nu)]
        for i in range(nu):
            for k in range(nu):
                acc = 0
                for t in range(min(i, k) + 1):
                    acc += self.c1[i - t] * self.r1[k - t]
                    acc += self.c2[i - t] * self.r2[k - t]
                M[i][k] = acc % p
        return M

    def block(self, rows, cols):
        """Entries [i][k] for i in rows, k in cols via the diagonal recurrence."""
        p = self.p
        out = [[0] * len(cols) for _ in range(len(rows))]
        for a, i in enumerate(rows):
            for b, k in enumerate(cols):
                if a > 0 and b > 0 and rows[a - 1] == i - 1 and cols[b - 1] == k - 1:
                    v = out[a - 1][b - 1]
                    v += self.c1[i] * self.r1[k] + self.c2[i] * self.r2[k]
                    out[a][b] = v % p
                else:
                    acc = 0
                    for t in range(min(i, k) + 1):
                        acc += self.c1[i - t] * self.r1[k - t]
                        acc += self.c2[i - t] * self.r2[k - t]
                    out[a][b] = acc % p
        return out


def _column_from_pair(A, B, u, v, p):
    """Column vector of Syl^-1-style pairs: A (deg < v) over B (deg < u)."""
    col = []
    for i in range(v):
        k = v - 1 - i
        col.append(A[k] if k < len(A) else 0)
    for i in range(u):
        k = u - 1 - i
        col.append(B[k] if k < len(B) else 0)
    return col


def sylvester_generators(F, G, p):
    """StructuredInverseEval for coprime z-polynomials F, G."""
    u = len(F) - 1
    v = len(G) - 1
    nu = u + v
    ctx = field_new(p) if not hasattr(F, "ctx") else None
    Fp = Poly(ctx, F)
    Gp = Poly(ctx, G)
    g, s, t = xgcd(Fp, Gp)
    if g.degree != 0:
        raise NotCoprime("inputs share a nontrivial common factor")
    # scale so that s F + t G = 1 exactly
    s = s.coeffs
    t = t.coeffs
    f0 = F[0] % p
    g0 = G[0] % p
    s0 = s[0] if s else 0
    t0 = t[0] if t else 0
    # first column: A0 = z^(nu-1) s mod G, B0 = (z^(nu-1) - A0 F) / G
    A0 = _rem(([0] * (nu - 1)) + s, G, p)
    num = _sub([0] * (nu - 1) + [1], _mul(A0, F, p_ctx := ctx), p)
    B0, rem = _divmod(num, G, p)
    assert not rem
    c1 = _column_from_pair(A0, B0, u, v, p)
    r1 = [0] * nu
    r1[0] = 1
    # explicit columns M q and M p from the displacement of Syl
    Aq, rq = _divmod(_sub(_scale(s, g0, p), _scale(G, s0, p), p), [0, 1], p)
    Bq_num = _sub(_sub(_scale(t, g0, p), [1], p), _scale(F, (-s0) % p, p), p)
    Bq, rq2 = _divmod(Bq_num, [0, 1], p)
    assert not rq and not rq2
    Mq = _column_from_pair(Aq, Bq, u, v, p)
    Ap_num = _sub(_sub(_scale(s, f0, p), [1], p), _scale(G, (-t0) % p, p), p)
    Ap, rp = _divmod(Ap_num, [0, 1], p)
    Bp_num = _sub(_scale(t, f0, p), _scale(F, t0, p), p)
    Bp, rp2 = _divmod(Bp_num, [0, 1], p)
    assert not rp and not rp2
    Bp = _trim(
        [(Bp[i] if i < len(Bp) else 0) + (1 if i == u - 1 else 0) for i in range(u)]
    )
    Bp = [c % p for c in Bp]
    Mp = _column_from_pair(Ap, Bp, u, v, p)
    # constant rows of the A- and B-part (rows v-1 and nu-1 of the inverse)
    rowA = [0] * nu
    rowB = [0] * nu
    q = _rem(([0] * (nu - 1)) + s, G, p)  # z^(nu-1) s mod G = A at column 0
    # iterate A_k by k descending is equivalent to q_j = z^j s mod G ascending
    qq = _rem(s, G, p)
    Bk = _poly_from(t)
    # compute constants directly: A_k[0] and B_k[0] for all k
    # A_k = z^(nu-1-k) s mod G; iterate j = 0..nu-1 with q_{j+1} = z q_j mod G
    qj = _rem(s, G, p)
    gv_inv = pow(G[-1], -1, p)
    Acol = [qj[0] if qj else 0]
    for j in range(1, nu):
        qj = _rem([0] + qj, G, p)
        Acol.append(qj[0] if qj else 0)
    for k in range(nu):
        rowA[k] = Acol[nu - 1 - k]
    # B_k[0] from f0 A_k[0] + g0 B_k[0] = [k = nu-1]
    if g0:
        g0inv = pow(g0, -1, p)
        for k in range(nu):
            unit = 1 if k == nu - 1 else 0
            rowB[k] = (unit - f0 * rowA[k]) % p * g0inv % p
    if g0:
        f_over_g = f0 * pow(g0, -1, p) % p
        c2 = [(-(mp - f_over_g * mq)) % p for mp, mq in zip(Mp, Mq)]
        r2 = [0] + [rowA[k] for k in range(nu - 1)]
    else:
        # g0 = 0 forces f0 != 0 (coprimality); the A-row collapses
        c2 = [(-mq) % p for mq in Mq]
        f0inv = pow(f0, -1, p)
        for k in range(nu):
            Bk_num = _sub([0] * (nu - 1 - k) + [1], _mul(_shifted_A(s, G, nu - 1 - k, p), F, ctx), p)
            Bfull, _r = _divmod(Bk_num, G, p)
            rowB[k] = Bfull[0] if Bfull else 0
        r2 = [0] + [rowB[k] for k in range(nu - 1)]
    return StructuredInverseEval(p, nu, c1, c2, r1, r2)


def _shifted_A(s, G, j, p):
    return _rem(([0] * j) + s, G, p)


def _poly_from(c):
    return list(c)


def structured_inverse_eval(F, G, m, p):
    """Top-right m x m block of Syl(F, G)^-1, from the generators."""
    u = len(F) - 1
    v = len(G) - 1
    nu = u + v
    if m < 1 or m > nu:
        raise ValueError(f"block size must be in [1, {nu}]")
    gens = sylvester_generators(F, G, p)
    rows = list(range(m))
    cols = list(range(nu - m, nu))
    return gens.block(rows, cols)


# ---------------------------------------------------------------------------
# univariate and direct resultants


def resultant_univariate(A, B, p):
    """Resultant of two z-polynomials by the Euclidean scheme."""
    a = _trim([c % p for c in A])
    b = _trim([c % p for c in B])
    if not a or not b:
        if not a and not b:
            return 0
        other = a or b
        return 0 if len(other) > 1 else 1
    res = 1
    while len(b) > 1:
        r = _rem(a, b, p)
        da, db, dr = len(a) - 1, len(b) - 1, len(r) - 1
        res = res * pow(b[-1], da - (dr if r else -1 * 0), p) % p if False else res
        # res(A,B) = (-1)^(da db) lc(B)^(da - dr) res(B, R)
        if not r:
            return 0
        res = res * pow(b[-1], da - dr, p) % p
        if (da * db) % 2:
            res = (-res) % p
        a, b = b, r
    return res * pow(b[0], len(a) - 1, p) % p


def resultant_direct(F, G):
    """Res_z(F, G) by specialization at enough x-points and interpolation."""
    ctx = F.ctx
    p = ctx.p
    u, v = F.deg_z, G.deg_z
    if u < 1 or v < 1:
        raise ValueError("inputs must have positive z-degree")
    bound = u * max(G.deg_x, 0) + v * max(F.deg_x, 0)
    npts = bound + 1
    lcF = F.zcoeffs[-1]
    lcG = G.zcoeffs[-1]
    pts = []
    vals = []
    candidate = 0
    tried = 0
    while len(pts) < npts:
        if tried >= p:
            raise FieldTooSmall(
                f"could not collect {npts} usable points modulo {p}"
            )
        x0 = candidate
        candidate += 1
        tried += 1
        if _eval_horner(lcF, x0, p) == 0 or _eval_horner(lcG, x0, p) == 0:
            continue
        Fa = F.eval_x(x0)
        Ga = G.eval_x(x0)
        pts.append(x0)
        vals.append(resultant_univariate(Fa, Ga, p))
    return interp_general(vals, pts, ctx)


# ---------------------------------------------------------------------------
# Villard-style resultant


def villard_resultant(sctx, rng=None, no_fallback=False):
    """det of the Sylvester matrix via structured inversion and fraction
    reconstruction; falls back to resultant_direct on genericity failures."""
    F, G = sctx.F, sctx.G
    ctx = F.ctx
    p = ctx.p
    rng = rng if rng is not None else random.Random()
    nu, d, m = sctx.nu, sctx.d, sctx.m
    D = -(-nu // m) * d
    delta = 2 * D + 1
    try:
        return _villard_core(sctx, D, delta, rng)
    except (GenericityFailure, FieldTooSmall, ReconstructionFailed,
            VerificationFailed, NoSuchElement) as exc:
        if no_fallback:
            raise GenericityFailure(str(exc))
        return resultant_direct(F, G)


def _villard_core(sctx, D, delta, rng):
    F, G = sctx.F, sctx.G
    ctx = F.ctx
    p = ctx.p
    nu, d, m = sctx.nu, sctx.d, sctx.m
    lcF = F.zcoeffs[-1]
    lcG = G.zcoeffs[-1]
    # geometric points, skipping evaluations where the structure degenerates
    try:
        alpha = order_at_least(ctx, delta + 2)
    except NoSuchElement:
        raise FieldTooSmall(f"no geometric run of length {delta + 2}")
    pts = []
    Hvals = []
    skipped = 0
    x0 = 1
    while len(pts) < delta and skipped < delta + 16:
        a = x0
        x0 = x0 * alpha % p
        if _eval_horner(lcF, a, p) == 0 or _eval_horner(lcG, a, p) == 0:
            skipped += 1
            continue
        Fa = F.eval_x(a)
        Ga = G.eval_x(a)
        try:
            H = structured_inverse_eval(Fa, Ga, m, p)
        except NotCoprime:
            skipped += 1
            continue
        pts.append(a)
        Hvals.append(H)
    if len(pts) < delta:
        raise GenericityFailure("too many degenerate evaluation points")
    desc = fracrec_points(ctx, Hvals[: 2 * D], pts[: 2 * D], D)
    detQ = determinant(desc.Q, rng=rng).det
    # scale against the true resultant at held-out points
    held = pts[2 * D]
    r_held = _point_resultant(F, G, held, p)
    dq_held = detQ.eval(held)
    if dq_held == 0 or r_held == 0:
        raise GenericityFailure("held-out point degenerate")
    c = r_held * pow(dq_held, -1, p) % p
    cand = Poly._raw(ctx, _scale(detQ.coeffs, c, p))
    checks = 0
    trial = 0
    while checks < 2 and trial < 64:
        beta = rng.randrange(1, p)
        trial += 1
        if _eval_horner(lcF, beta, p) == 0 or _eval_horner(lcG, beta, p) == 0:
            continue
        if cand.eval(beta) != _point_resultant(F, G, beta, p):
            raise GenericityFailure(f"verification mismatch at x = {beta}")
        checks += 1
    if checks < 2:
        raise GenericityFailure("could not verify at held-out points")
    return cand


def _point_resultant(F, G, x0, p):
    return resultant_univariate(F.eval_x(x0), G.eval_x(x0), p)


# ---------------------------------------------------------------------------
# characteristic polynomial (baby steps / giant steps)


def _mulmod(a, b, mod, ctx):
    return _rem(_mul(a, b, ctx), mod, ctx.p)


def charpoly_generic(A, P, m=None, rng=None, no_fallback=False):
    """Characteristic polynomial of multiplication by A modulo monic P."""
    ctx = P.ctx
    p = ctx.p
    n = P.degree
    if n < 1:
        raise ValueError("P must have positive degree")
    Pm = P.monic()
    Ar = A % Pm
    g, s, _t = xgcd(Ar, Pm)
    if g.degree != 0:
        raise NotInvertibleAtZero("A is not invertible modulo P")
    rng = rng if rng is not None else random.Random()
    if m is None:
        m = max(1, math.ceil(n ** (1.0 / 3.0)))
    m = min(m, n)
    try:
        return _charpoly_core(Ar, Pm, m, s.coeffs, rng)
    except (GenericityFailure, ReconstructionFailed, VerificationFailed) as exc:
        if no_fallback:
            raise GenericityFailure(str(exc))
        return _charpoly_resultant(Ar, Pm)


def _charpoly_core(A, P, m, s_cofactor, rng):
    ctx = P.ctx
    p = ctx.p
    n = P.degree
    Pc = P.coeffs
    B = _rem(s_cofactor, Pc, p)  # A^-1 mod P
    D = -(-n // m)
    delta = 2 * D
    r = max(1, math.isqrt(delta - 1) + 1)
    smax = (delta - 1) // r + 1  # k+1 = s*r + t, t in [1, r]
    # baby steps: C_t = B^t mod P, t = 1..r
    C = [None] * (r + 1)
    C[1] = B
    for t2 in range(2, r + 1):
        C[t2] = _mulmod(C[t2 - 1], B, Pc, ctx)
    # shifted babies D[j][t] = z^j C_t mod P
    Djt = {}
    for t2 in range(1, r + 1):
        cur = C[t2]
        Djt[(0, t2)] = cur
        for j in range(1, m):
            cur = _rem([0] + cur, Pc, p)
            Djt[(j, t2)] = cur
    # giants G_s = B^(r s) mod P
    Br = _mulmod(C[r], [1], Pc, ctx)
    Gs = [None] * (smax + 1)
    Gs[0] = [1]
    for s2 in range(1, smax + 1):
        Gs[s2] = _mulmod(Gs[s2 - 1], Br, Pc, ctx)
    # h[i][j][k] = coeff_i(-z^j B^(k+1) mod P) for i, j < m, k < delta
    h = [[[0] * delta for _ in range(m)] for _ in range(m)]
    for s2 in range(0, smax + 1):
        # T[i][l] = coeff_i(z^l G_s mod P)
        ks = [k for k in range(delta) if (k + 1 - 1) // r == s2 or _sgroup(k, r) == s2]
        ks = [k for k in range(delta) if _sgroup(k, r) == s2]
        if not ks:
            continue
        T = []
        cur = Gs[s2]
        cols = [cur]
        for l in range(1, n):
            cur = _rem([0] + cur, Pc, p)
            cols.append(cur)
        for i in range(m):
            T.append([cols[l][i] if i < len(cols[l]) else 0 for l in range(n)])
        # batch the products over (j, t) pairs needed at this giant step
        for k in ks:
            t2 = (k + 1) - s2 * r
            for j in range(m):
                dd = Djt[(j, t2)]
                for i in range(m):
                    Ti = T[i]
                    acc = 0
                    for l, c in enumerate(dd):
                        if c:
                            acc += c * Ti[l]
                    h[i][j][k] = (-acc) % p
    rows = [[_trim(h[i][j][:]) for j in range(m)] for i in range(m)]
    Hbar = PolMat(ctx, rows, ncols=m)
    desc = fracrec_series(Hbar, D)
    chi = determinant(desc.Q, rng=rng).det
    if chi.degree != n:
        raise GenericityFailure(
            f"denominator determinant has degree {chi.degree}, expected {n}"
        )
    chi = chi.monic()
    # verify at a random point against the multiplication matrix
    x0 = rng.randrange(p)
    if n <= 64:
        M = _mult_matrix(A.coeffs, Pc, p)
        xI = [[(x0 if i == j else 0) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                xI[i][j] = (xI[i][j] - M[i][j]) % p
        want = _dense.det(xI, p)
    else:
        shifted = _sub([x0], A.coeffs, p)
        want = resultant_univariate(Pc, shifted, p)
    if chi.eval(x0) != want:
        raise GenericityFailure(f"charpoly verification mismatch at x = {x0}")
    return chi


def _sgroup(k, r):
    """Giant-step index of exponent k+1 with k+1 = s r + t, t in [1, r]."""
    return (k + 1 - 1) // r


def _mult_matrix(A, P, p):
    """Matrix of multiplication by A modulo monic P (production copy)."""
    n = len(P) - 1
    cur = _rem(list(A), P, p)
    base = cur + [0] * (n - len(cur))
    cols = [base[:]]
    for _ in range(1, n):
        lead = base[n - 1]
        base = [0] + base[: n - 1]
        if lead:
            for i in range(n):
                base[i] = (base[i] - lead * P[i]) % p
        cols.append(base[:])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _charpoly_resultant(A, P):
    """Fallback: resultant of P(z) and x - A(z) with respect to z."""
    ctx = P.ctx
    p = ctx.p
    Pb = BivarPoly(ctx, [[c] for c in P.coeffs])
    zc = []
    ac = A.coeffs
    for k in range(max(len(ac), 1)):
        c = ac[k] if k < len(ac) else 0
        if k == 0:
            zc.append([(-c) % p, 1])
        else:
            zc.append([(-c) % p])
    Ab = BivarPoly(ctx, zc)
    chi = resultant_direct(Pb, Ab)
    return chi.monic()
