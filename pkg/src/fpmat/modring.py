"""Prime-field contexts and number-theoretic transform plans.

A FieldCtx fixes a word-size odd prime p together with the 2-adic
structure of the multiplicative group: two_adicity is the largest k with
2^k | p-1 and ntt_root has multiplicative order exactly 2^two_adicity.
NttPlan precomputes twiddle tables for one power-of-two transform length.

Field elements are plain Python integers reduced to [0, p).  Python's
native modular arithmetic already runs in C without branches at the
interpreter level, so no Montgomery/Barrett layer is used here.
"""

from .errors import (
    CompositeModulus,
    LengthMismatch,
    NoSuchElement,
    OutOfRange,
)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_DIVISION_BOUND = 1 << 21


def is_prime(n):
    """Deterministic Miller-Rabin, valid for all n < 2^64."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n, seed=1):
    """One Brent-style rho round; n must be odd composite > 1."""
    if n % 2 == 0:
        return 2
    c = seed
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def factorize(n):
    """Prime factorization as a sorted dict {prime: exponent}.

    Trial division up to 2^21 first, Pollard rho for what remains; exact
    for any n < 2^124 in practice (inputs here are below 2^62).
    """
    factors = {}
    for q in (2, 3, 5):
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
    q = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while q * q <= n and q < _TRIAL_DIVISION_BOUND:
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
        q += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(factors.items()))


class FieldCtx:
    """Arithmetic context for F_p, immutable after construction."""

    __slots__ = ("p", "two_adicity", "ntt_root", "_p1_factors")

    def __init__(self, p, two_adicity, ntt_root):
        self.p = p
        self.two_adicity = two_adicity
        self.ntt_root = ntt_root
        self._p1_factors = None

    def __repr__(self):
        return f"FieldCtx(p={self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.p == other.p

    def __hash__(self):
        return hash(self.p)

    def inv(self, a):
        """Multiplicative inverse of a mod p."""
        return pow(a, -1, self.p)

    def p1_factors(self):
        """Factorization of p-1, memoized."""
        if self._p1_factors is None:
            self._p1_factors = factorize(self.p - 1)
        return self._p1_factors

    def element_order(self, a):
        """Exact multiplicative order of a (certified via factoring p-1)."""
        p = self.p
        order = p - 1
        for q, e in self.p1_factors().items():
            for _ in range(e):
                if pow(a, order // q, p) == 1:
                    order //= q
                else:
                    break
        return order


def field_new(p):
    """Build the context for an odd prime 2 < p < 2^62.

    Raises OutOfRange outside that window and CompositeModulus when the
    deterministic Miller-Rabin test rejects p.
    """
    if not isinstance(p, int) or p <= 2 or p >= (1 << 62):
        raise OutOfRange(f"modulus must satisfy 2 < p < 2^62, got {p!r}")
    if not is_prime(p):
        raise CompositeModulus(f"{p} is not prime")
    m = p - 1
    k = 0
    while m % 2 == 0:
        m //= 2
        k += 1
    # smallest quadratic non-residue gives a root of order exactly 2^k
    a = 2
    while pow(a, (p - 1) // 2, p) == 1:
        a += 1
    root = pow(a, (p - 1) >> k, p)
    return FieldCtx(p, k, root)


_CTX_CACHE = {}


def cached_field(p):
    """Memoized field_new for hot paths that only hold the prime."""
    ctx = _CTX_CACHE.get(p)
    if ctx is None:
        ctx = field_new(p)
        _CTX_CACHE[p] = ctx
    return ctx


def order_at_least(ctx, n):
    """An element of multiplicative order >= n, certified exactly.

    Candidates are scanned deterministically (2, 3, ...) and each order is
    certified through the factorization of p-1.  NoSuchElement is raised
    when n exceeds the group order p-1.
    """
    p = ctx.p
    if n > p - 1:
        raise NoSuchElement(f"group order is {p - 1}, no element of order {n}")
    if n <= 1:
        return 1
    for a in range(2, p):
        if ctx.element_order(a) >= n:
            return a
    raise NoSuchElement(f"no candidate of order >= {n} found")


def _bit_reverse_indices(log_len):
    n = 1 << log_len
    idx = [0] * n
    for i in range(1, n):
        idx[i] = (idx[i >> 1] >> 1) | ((i & 1) << (log_len - 1))
    return idx


class NttPlan:
    """Radix-2 decimation-in-time transform plan for length 2^log_len.

    ntt_forward returns evaluations in natural order: output[j] = F(w^j)
    where w is the plan's primitive 2^log_len-th root of unity.  The
    bit-reversed layout is internal only.
    """

    __slots__ = ("ctx", "log_len", "length", "omega", "twiddles",
                 "inv_twiddles", "inv_len", "_rev")

    def __init__(self, ctx, log_len):
        if log_len > ctx.two_adicity:
            raise OutOfRange(
                f"p={ctx.p} supports transforms up to length 2^{ctx.two_adicity}"
            )
        self.ctx = ctx
        self.log_len = log_len
        self.length = 1 << log_len
        p = ctx.p
        # primitive root of order 2^log_len
        self.omega = pow(ctx.ntt_root, 1 << (ctx.two_adicity - log_len), p)
        self.twiddles = self._twiddle_tables(self.omega)
        self.inv_twiddles = self._twiddle_tables(pow(self.omega, -1, p))
        self.inv_len = pow(self.length, -1, p)
        self._rev = _bit_reverse_indices(log_len)

    def _twiddle_tables(self, omega):
        # tables[s] holds the half-length twiddles for butterfly span 2^(s+1)
        p = self.ctx.p
        tables = []
        for s in range(self.log_len):
            span = 1 << (s + 1)
            w = pow(omega, self.length // span, p)
            row = [1] * (span // 2)
            for i in range(1, span // 2):
                row[i] = row[i - 1] * w % p
            tables.append(row)
        return tables


def _ntt_core(plan, v, tables):
    p = plan.ctx.p
    a = [v[i] for i in plan._rev]
    n = plan.length
    for s in range(plan.log_len):
        half = 1 << s
        tw = tables[s]
        step = half * 2
        for start in range(0, n, step):
            for i in range(half):
                j = start + i
                k = j + half
                t = a[k] * tw[i] % p
                u = a[j]
                a[j] = (u + t) % p
                a[k] = (u - t) % p
    return a


def ntt_forward(plan, v):
    """Evaluate the coefficient vector v at the 2^log_len-th roots of unity."""
    if len(v) != plan.length:
        raise LengthMismatch(f"expected length {plan.length}, got {len(v)}")
    return _ntt_core(plan, v, plan.twiddles)


def ntt_inverse(plan, v):
    """Inverse transform: recover coefficients from evaluations."""
    if len(v) != plan.length:
        raise LengthMismatch(f"expected length {plan.length}, got {len(v)}")
    a = _ntt_core(plan, v, plan.inv_twiddles)
    p = plan.ctx.p
    s = plan.inv_len
    return [x * s % p for x in a]
