"""Brute-force reference implementations used by the test suite.

Everything here is textbook linear algebra written directly on integer
lists, deliberately sharing no code with the production paths beyond the
prime p itself.  Size caps raise TooLarge so an oracle can never be
mistaken for a production routine.
"""

from . import config
from .errors import SingularMatrix, TooLarge

# ---------------------------------------------------------------------------
# local helpers (intentionally duplicated textbook code)


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _gauss_nullspace(rows, ncols, p):
    """Right nullspace basis of a matrix given as a list of rows."""
    work = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(work)):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [x * inv % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        vec = [0] * ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-work[i][fc]) % p
        basis.append(vec)
    return basis


def _gauss_rank(rows, p):
    if not rows:
        return 0
    work = [r[:] for r in rows]
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(work)):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [x * inv % p for x in work[r]]
        for i in range(r + 1, len(work)):
            if work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


# ---------------------------------------------------------------------------
# linearized approximant / interpolant modules


class LinearizedModule:
    """Constraint matrix of an order condition plus its nullspace.

    Unknowns are the coefficients p[r, t] of a row vector p, with the
    degree of row-entry r capped at caps[r] (a uniform cap D means all
    caps equal D).  Membership of a candidate row is a constraint-matrix
    product.
    """

    def __init__(self, p, m, caps, constraints):
        self.p = p
        self.m = m
        self.caps = caps
        widths = [c + 1 if c >= 0 else 0 for c in caps]
        self.offsets = []
        acc = 0
        for w in widths:
            self.offsets.append(acc)
            acc += w
        self.nunknowns = acc
        self.constraints = constraints
        self.nullspace = _gauss_nullspace(constraints, acc, p)

    def dimension(self):
        return len(self.nullspace)

    def flatten_row(self, row_coeff_lists):
        """Row given as m coefficient lists -> flat unknown vector."""
        vec = [0] * self.nunknowns
        for r, e in enumerate(row_coeff_lists):
            if len(e) - 1 > self.caps[r]:
                return None
            for t, c in enumerate(e):
                vec[self.offsets[r] + t] = c % self.p
        return vec

    def contains(self, row_coeff_lists):
        vec = self.flatten_row(row_coeff_lists)
        if vec is None:
            return False
        for row in self.constraints:
            if sum(a * b for a, b in zip(row, vec)) % self.p:
                return False
        return True


def _resolve_caps(m, D, caps):
    if caps is None:
        caps = [D] * m
    if sum(c + 1 for c in caps if c >= 0) > config.ORACLE_MAX_UNKNOWNS:
        raise TooLarge("oracle instance exceeds the size cap")
    return caps


def oracle_approx_module(F, sigma, D=None, caps=None):
    """Linearization of p F = 0 mod x^sigma over rows with capped degrees."""
    p = F.ctx.p
    m, n = F.m, F.n
    caps = _resolve_caps(m, D, caps)
    widths = [c + 1 if c >= 0 else 0 for c in caps]
    offsets = []
    acc = 0
    for w in widths:
        offsets.append(acc)
        acc += w
    constraints = []
    for j in range(n):
        for k in range(sigma):
            row = [0] * acc
            for r in range(m):
                e = F.rows[r][j]
                for t in range(min(k, widths[r] - 1) + 1):
                    c = e[k - t] if k - t < len(e) else 0
                    if c:
                        row[offsets[r] + t] = c
            constraints.append(row)
    return LinearizedModule(p, m, caps, constraints)


def oracle_interp_module(E, alpha, p, D=None, caps=None):
    """Linearization of p(alpha_i) E_i = 0 over rows with capped degrees."""
    m = len(E[0])
    n = len(E[0][0])
    caps = _resolve_caps(m, D, caps)
    widths = [c + 1 if c >= 0 else 0 for c in caps]
    offsets = []
    acc = 0
    for w in widths:
        offsets.append(acc)
        acc += w
    constraints = []
    for Ei, ai in zip(E, alpha):
        maxw = max(widths) if widths else 0
        pows = [1] * maxw
        for t in range(1, maxw):
            pows[t] = pows[t - 1] * ai % p
        for j in range(n):
            row = [0] * acc
            for r in range(m):
                c = Ei[r][j] % p
                if c:
                    for t in range(widths[r]):
                        row[offsets[r] + t] = c * pows[t] % p
            constraints.append(row)
    return LinearizedModule(p, m, caps, constraints)


# ---------------------------------------------------------------------------
# minimal kernel oracle


def _kernel_solution_space(F, caps):
    """Nullspace of p F = 0 (exactly) with deg p_r <= caps[r]; flat vectors."""
    p = F.ctx.p
    m, n = F.m, F.n
    d = F.degree
    widths = [c + 1 if c >= 0 else 0 for c in caps]
    offs = []
    acc = 0
    for w in widths:
        offs.append(acc)
        acc += w
    nunk = acc
    if nunk == 0:
        return [], offs, widths
    maxdeg = max((c for c in caps if c >= 0), default=0) + max(d, 0)
    constraints = []
    for j in range(n):
        for k in range(maxdeg + 1):
            row = [0] * nunk
            nz = False
            for r in range(m):
                e = F.rows[r][j]
                for t in range(widths[r]):
                    c = e[k - t] if 0 <= k - t < len(e) else 0
                    if c:
                        row[offs[r] + t] = c
                        nz = True
            if nz:
                constraints.append(row)
    if not constraints:
        basis = []
        for i in range(nunk):
            v = [0] * nunk
            v[i] = 1
            basis.append(v)
        return basis, offs, widths
    return _gauss_nullspace(constraints, nunk, p), offs, widths


def oracle_min_kernel(F, s):
    """Minimal left kernel basis by ascending-degree brute force.

    Returns (rows, sdegs): rows as lists of m coefficient lists and the
    sorted multiset of their s-degrees.  Small sizes only.
    """
    p = F.ctx.p
    m, n = F.m, F.n
    d = max(F.degree, 0)
    bound = n * d + max(s) - min(s) + 1
    if m * (bound + 2) > 4 * config.ORACLE_MAX_UNKNOWNS:
        raise TooLarge("oracle kernel instance exceeds the size cap")
    # K(x)-rank: rank at enough points; an r x r nonzero minor (degree <= r d)
    # cannot vanish at more than r d points
    rank_F = 0
    for x0 in range(min(p, min(m, n) * d + 2)):
        ev = [[sum(c * pow(x0, t, p) for t, c in enumerate(F.rows[i][j])) % p
               for j in range(n)] for i in range(m)]
        rank_F = max(rank_F, _gauss_rank(ev, p))
    target = m - rank_F
    chosen = []  # (delta, row coefficient lists)

    def embed(row_lists, caps, offs, widths):
        vec = [0] * (offs[-1] + widths[-1] if widths else 0)
        for r, e in enumerate(row_lists):
            for t, c in enumerate(e):
                vec[offs[r] + t] = c
        return vec

    delta = min(s)
    while len(chosen) < target and delta <= max(s) + bound:
        caps = [delta - sr for sr in s]
        sols, offs, widths = _kernel_solution_space(F, caps)
        # span of previously chosen rows times x^t, embedded at this level
        span = []
        for cdeg, row_lists in chosen:
            shift_max = delta - cdeg
            for t in range(shift_max + 1):
                shifted = [([0] * t + e if e else []) for e in row_lists]
                span.append(embed(shifted, caps, offs, widths))
        # eliminate: find solutions independent from span
        work = [v[:] for v in span]
        pivcols = []

        def reduce_vec(v):
            v = v[:]
            for row, pc in zip(work, pivcols):
                if v[pc]:
                    f = v[pc]
                    v = [(x - f * y) % p for x, y in zip(v, row)]
            return v

        # echelonize work
        tmp = work
        work, pivcols = [], []
        for v in tmp:
            v = reduce_vec(v)
            nzc = next((c for c, x in enumerate(v) if x), None)
            if nzc is None:
                continue
            inv = pow(v[nzc], -1, p)
            v = [x * inv % p for x in v]
            work.append(v)
            pivcols.append(nzc)
        for v in sols:
            v = reduce_vec(v)
            nzc = next((c for c, x in enumerate(v) if x), None)
            if nzc is None:
                continue
            inv = pow(v[nzc], -1, p)
            v = [x * inv % p for x in v]
            row_lists = []
            for r in range(m):
                e = [v[offs[r] + t] for t in range(widths[r])]
                row_lists.append(_trim(e))
            chosen.append((delta, row_lists))
            work.append(v)
            pivcols.append(nzc)
            if len(chosen) == target:
                break
        delta += 1
    rows = [rl for _, rl in chosen]
    sdegs = sorted(dd for dd, _ in chosen)
    return rows, sdegs


# ---------------------------------------------------------------------------
# minimal denominator oracle


def oracle_min_denominator(A, b):
    """Monic f of minimal degree with A u = f b solvable, by brute force."""
    p = A.ctx.p
    n = A.m
    d = max(A.degree, 0)
    db = max(b.degree, 0)
    for df in range(n * d + 1):
        du = df + (n - 1) * d + db
        nunk = (df + 1) + n * (du + 1)
        if nunk > 2 * config.ORACLE_MAX_UNKNOWNS:
            raise TooLarge("oracle denominator instance exceeds the size cap")
        maxdeg = max(d + du, df + db)
        constraints = []
        for i in range(n):
            for k in range(maxdeg + 1):
                row = [0] * nunk
                # - f * b_i contribution
                e = b.rows[i][0]
                for t in range(df + 1):
                    c = e[k - t] if 0 <= k - t < len(e) else 0
                    if c:
                        row[t] = (-c) % p
                # A_i. * u contribution
                for r in range(n):
                    e = A.rows[i][r]
                    for t in range(du + 1):
                        c = e[k - t] if 0 <= k - t < len(e) else 0
                        if c:
                            row[df + 1 + r * (du + 1) + t] = c
                constraints.append(row)
        sols = _gauss_nullspace(constraints, nunk, p)
        for v in sols:
            f = _trim(v[: df + 1])
            if f:
                inv = pow(f[-1], -1, p)
                return [c * inv % p for c in f]
    raise SingularMatrix("no denominator found; matrix is singular")


# ---------------------------------------------------------------------------
# dense constant-matrix oracles


def oracle_dense_det(M, p):
    n = len(M)
    if n > 64:
        raise TooLarge("dense determinant oracle capped at 64")
    work = [row[:] for row in M]
    det = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if work[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            work[c], work[pr] = work[pr], work[c]
            det = -det % p
        det = det * work[c][c] % p
        inv = pow(work[c][c], -1, p)
        for i in range(c + 1, n):
            if work[i][c]:
                f = work[i][c] * inv % p
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[c])]
    return det


def oracle_dense_inverse(M, p):
    n = len(M)
    if n > 128:
        raise TooLarge("dense inverse oracle capped at 128")
    work = [row[:] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        pr = next((i for i in range(c, n) if work[i][c]), None)
        if pr is None:
            raise SingularMatrix("oracle inverse of singular matrix")
        work[c], work[pr] = work[pr], work[c]
        inv = pow(work[c][c], -1, p)
        work[c] = [x * inv % p for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[c])]
    return [row[n:] for row in work]


def oracle_charpoly(M, p):
    """Characteristic polynomial det(xI - M) via Hessenberg reduction."""
    n = len(M)
    if n > 128:
        raise TooLarge("charpoly oracle capped at 128")
    H = [row[:] for row in M]
    for c in range(n - 2):
        pr = next((i for i in range(c + 1, n) if H[i][c]), None)
        if pr is None:
            continue
        if pr != c + 1:
            H[c + 1], H[pr] = H[pr], H[c + 1]
            for i in range(n):
                H[i][c + 1], H[i][pr] = H[i][pr], H[i][c + 1]
        inv = pow(H[c + 1][c], -1, p)
        for i in range(c + 2, n):
            if H[i][c]:
                f = H[i][c] * inv % p
                H[i] = [(x - f * y) % p for x, y in zip(H[i], H[c + 1])]
                for r in range(n):
                    H[r][c + 1] = (H[r][c + 1] + f * H[r][i]) % p
    # charpoly of leading k x k blocks of the Hessenberg form
    polys = [[1]]
    for k in range(1, n + 1):
        term = _poly_mul(polys[k - 1], [(-H[k - 1][k - 1]) % p, 1], p)
        beta = 1
        for i in range(k - 2, -1, -1):
            beta = beta * H[i + 1][i] % p
            c = H[i][k - 1] * beta % p
            if c:
                term = _poly_add(term, [(-c * v) % p for v in polys[i]], p)
        polys.append(term)
    return polys[n]


def oracle_multiplication_matrix(A, P, p):
    """Matrix of multiplication by A modulo monic P, in the monomial basis."""
    n = len(P) - 1
    cols = []
    cur = _poly_reduce(list(A), P, p)
    base = cur + [0] * (n - len(cur))
    cols.append(base[:])
    for _ in range(1, n):
        # multiply by z mod P
        lead = base[n - 1]
        base = [0] + base[: n - 1]
        if lead:
            for i in range(n):
                base[i] = (base[i] - lead * P[i]) % p
        cols.append(base[:])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _poly_reduce(a, mod, p):
    a = [c % p for c in a]
    dm = len(mod) - 1
    inv = pow(mod[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        if a[i]:
            f = a[i] * inv % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * mod[j]) % p
    return _trim(a)


def oracle_sylvester(F, G, p):
    """Dense Sylvester matrix; layout frozen by the golden test.

    Column j < deg G holds z^(deg G - 1 - j) * F, columns deg G.. hold the
    shifts of G, all written from the top coefficient of z^(nu-1) down.
    """
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


def oracle_polmat_mul(A, B):
    """Schoolbook entrywise product of two polynomial matrices."""
    p = A.ctx.p
    out = []
    for i in range(A.m):
        row = []
        for j in range(B.n):
            acc = []
            for k in range(A.n):
                acc = _poly_add(acc, _poly_mul(A.rows[i][k], B.rows[k][j], p), p)
            row.append(acc)
        out.append(row)
    from .polmat import PolMat

    return PolMat(A.ctx, out)


def oracle_cyclic_convolution(a, b, p):
    """Length-n cyclic convolution of two length-n vectors."""
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[(i + j) % n] = (out[(i + j) % n] + x * y) % p
    return out
