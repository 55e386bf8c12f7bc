"""Dense constant-matrix arithmetic over F_p (internal helpers).

Matrices are lists of row lists of ints in [0, p).  The multiplication
kernel packs rows of the right factor into big integers (one 17-byte digit
per entry) so the inner dot products run inside CPython's C-level bignum
multiply instead of the interpreter loop.  17-byte digits hold any sum of
up to 2^12 products of two 62-bit values without carry overflow.
"""

from .errors import SingularMatrix

_DIGIT_BYTES = 17
_PACK_MIN_WORK = 600  # below this many multiply-adds the plain loop wins


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = 1
    return mat


def mat_add(A, B, p):
    return [[(a + b) % p for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B, p):
    return [[(a - b) % p for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c, p):
    return [[a * c % p for a in row] for row in A]


def mat_mul(A, B, p):
    """Product of an m x k and a k x n matrix mod p."""
    m = len(A)
    k = len(B)
    n = len(B[0]) if k else 0
    if m * k * n <= _PACK_MIN_WORK or k == 0:
        Bt = list(zip(*B)) if k else []
        return [
            [sum(a * b for a, b in zip(row, col)) % p for col in Bt]
            for row in A
        ]
    row_bytes = n * _DIGIT_BYTES
    packed = [
        int.from_bytes(
            b"".join(x.to_bytes(_DIGIT_BYTES, "little") for x in row),
            "little",
        )
        for row in B
    ]
    out = []
    for row in A:
        acc = 0
        for a, pb in zip(row, packed):
            if a:
                acc += a * pb
        buf = acc.to_bytes(row_bytes + _DIGIT_BYTES, "little")
        out.append(
            [
                int.from_bytes(
                    buf[j * _DIGIT_BYTES : (j + 1) * _DIGIT_BYTES], "little"
                )
                % p
                for j in range(n)
            ]
        )
    return out


def mat_vec(A, v, p):
    return [sum(a * x for a, x in zip(row, v)) % p for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def _elim(A, p, rhs=None):
    """Row echelon elimination in place; returns (rank, pivot_cols)."""
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if A[i][c]:
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        if rhs is not None:
            rhs[r], rhs[pr] = rhs[pr], rhs[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        if rhs is not None:
            rhs[r] = [x * inv % p for x in rhs[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
                if rhs is not None:
                    rhs[i] = [(x - f * y) % p for x, y in zip(rhs[i], rhs[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return r, pivots


def rank(A, p):
    if not A:
        return 0
    work = [row[:] for row in A]
    r, _ = _elim(work, p)
    return r


def det(A, p):
    """Determinant via fraction-free pivoting elimination."""
    n = len(A)
    work = [row[:] for row in A]
    d = 1
    for c in range(n):
        pr = None
        for i in range(c, n):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            return 0
        if pr != c:
            work[c], work[pr] = work[pr], work[c]
            d = -d % p
        d = d * work[c][c] % p
        inv = pow(work[c][c], -1, p)
        for i in range(c + 1, n):
            if work[i][c]:
                f = work[i][c] * inv % p
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[c])]
    return d


def inverse(A, p):
    n = len(A)
    work = [row[:] for row in A]
    rhs = identity(n)
    r, pivots = _elim(work, p, rhs)
    if r < n:
        raise SingularMatrix("matrix is singular")
    return rhs


def solve(A, b, p):
    """Solve A x = b for square nonsingular A; b is a flat vector."""
    n = len(A)
    work = [row[:] for row in A]
    rhs = [[x] for x in b]
    r, pivots = _elim(work, p, rhs)
    if r < n:
        raise SingularMatrix("matrix is singular")
    return [row[0] for row in rhs]


def nullspace(A, p):
    """Basis of the right nullspace, as a list of vectors."""
    m = len(A)
    n = len(A[0]) if m else 0
    work = [row[:] for row in A]
    r, pivots = _elim(work, p)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-work[i][fc]) % p
        basis.append(vec)
    return basis


def left_nullspace(A, p):
    return nullspace(transpose(A), p)
