"""Shifted row degrees, pivots, and certified normal-form checks.

A shift is a plain list of integers weighting the columns of a row
vector: the s-degree of a row is max_j(deg(p_j) + s_j) and its s-pivot is
the rightmost entry attaining that maximum.  Zero rows have s-degree
NEG_INF, a float sentinel that composes correctly with integer shifts
(NEG_INF + s == NEG_INF, comparisons work); it is never a magic integer.
"""

from . import _dense
from .errors import LengthMismatch, NotSquare

NEG_INF = float("-inf")


def uniform_shift(value, length):
    return [value] * length


def row_rdeg(row, s):
    """s-degree of one row given as a list of coefficient lists."""
    if len(row) != len(s):
        raise LengthMismatch("shift length must match column count")
    best = NEG_INF
    for e, sj in zip(row, s):
        if e:
            v = len(e) - 1 + sj
            if v > best:
                best = v
    return best


def row_pivot(row, s):
    """(s-degree, pivot column, pivot entry degree); (NEG_INF, None, None) for zero rows."""
    d = row_rdeg(row, s)
    if d is NEG_INF or d == NEG_INF:
        return NEG_INF, None, None
    piv = None
    for j in range(len(row) - 1, -1, -1):
        e = row[j]
        if e and len(e) - 1 + s[j] == d:
            piv = j
            break
    return d, piv, len(row[piv]) - 1


def rdeg(M, s):
    """List of s-row-degrees of M (s indexes columns)."""
    if len(s) != M.n:
        raise LengthMismatch("shift length must match column count")
    return [row_rdeg(row, s) for row in M.rows]


def pivot_profile(M, s):
    """Per-row (s-degree, pivot column, pivot degree) triples."""
    if len(s) != M.n:
        raise LengthMismatch("shift length must match column count")
    return [row_pivot(row, s) for row in M.rows]


def _require_square(M):
    if M.m != M.n:
        raise NotSquare(f"{M.m}x{M.n} matrix is not square")


def is_owp(M, s, with_profile=False):
    """True iff every row's s-pivot sits on the diagonal (ordered weak Popov)."""
    _require_square(M)
    prof = pivot_profile(M, s)
    ok = all(piv == i for i, (_, piv, _) in enumerate(prof))
    if with_profile:
        return ok, prof
    return ok


def is_popov(M, s):
    """Ordered weak Popov plus monic pivots dominating their columns."""
    _require_square(M)
    ok, prof = is_owp(M, s, with_profile=True)
    if not ok:
        return False
    for i, (_, piv, pdeg) in enumerate(prof):
        e = M.rows[i][piv]
        if e[-1] != 1:
            return False
        for r in range(M.m):
            if r == i:
                continue
            other = M.rows[r][piv]
            if other and len(other) - 1 >= pdeg:
                return False
    return True


def leading_matrix(M, s):
    """s-leading coefficient matrix: entry (i,j) is the coefficient of
    degree rdeg_s(row i) - s_j in M[i][j] (zero when out of range)."""
    degs = rdeg(M, s)
    out = []
    for i, row in enumerate(M.rows):
        di = degs[i]
        lrow = []
        for j, e in enumerate(row):
            if di == NEG_INF:
                lrow.append(0)
                continue
            k = di - s[j]
            lrow.append(e[int(k)] if 0 <= k < len(e) else 0)
        out.append(lrow)
    return out


def is_reduced(M, s):
    """True iff the s-leading coefficient matrix is invertible over F_p."""
    _require_square(M)
    degs = rdeg(M, s)
    if any(d == NEG_INF for d in degs):
        return False
    L = leading_matrix(M, s)
    return _dense.rank(L, M.ctx.p) == M.m
