"""Table-backed arithmetic for the ground field F_q, q = p^e.

Elements are plain ints in [0, q).  An element sum c_i * u^i (u the class of
the generator modulo a fixed irreducible polynomial over F_p) is encoded as
the integer sum c_i * p^i.  For e = 1 this is ordinary arithmetic mod p.
"""

from functools import lru_cache


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q):
    """Return (p, e) with q = p^e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = q
    for d in range(2, q + 1):
        if d * d > q:
            break
        if q % d == 0:
            p = d
            break
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1 or not _is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _fp_poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _fp_poly_mod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * mod[j]) % p
    return a[:dm]


def _fp_irreducible(mod, p):
    # x^{p^i} mod `mod` must return to x exactly at i = deg, with gcd checks
    # replaced by the cheap distinct-power criterion (deg is small here).
    deg = len(mod) - 1
    x = [0, 1] + [0] * max(0, deg - 2)
    cur = x[:deg] if deg > 1 else _fp_poly_mod(x, mod, p)
    seen = []
    for _ in range(deg):
        # cur^p mod `mod`
        acc = [1] + [0] * (deg - 1)
        base = cur
        k = p
        while k:
            if k & 1:
                acc = _fp_poly_mod(_fp_poly_mul(acc, base, p), mod, p)
            base = _fp_poly_mod(_fp_poly_mul(base, base, p), mod, p)
            k >>= 1
        cur = acc
        seen.append(tuple(cur))
    xin = tuple((x[:deg] + [0] * deg)[:deg])
    if seen[-1] != xin:
        return False
    for d in range(1, deg):
        if deg % d == 0 and seen[d - 1] == xin:
            return False
    return True


def _canonical_fp_modulus(p, e):
    """Least monic irreducible of degree e over F_p, by low-first digit order."""
    if e == 1:
        return (0, 1)
    count = p ** e
    for k in range(count):
        digits = []
        m = k
        for _ in range(e):
            digits.append(m % p)
            m //= p
        mod = digits + [1]
        if _fp_irreducible(mod, p):
            return tuple(mod)
    raise AssertionError("no irreducible polynomial found")


class Fq:
    """The field F_q with table-backed add/mul/inv and the p-power map.

    Immutable after construction; tables are plain tuples.
    """

    _TABLE_LIMIT = 4096

    def __init__(self, q):
        p, e = factor_prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        self.modulus = _canonical_fp_modulus(p, e)
        if q <= self._TABLE_LIMIT:
            self._build_tables()
        else:  # pragma: no cover - beyond desk scale
            self._add_t = self._mul_t = self._inv_t = self._neg_t = None

    # -- encoding -----------------------------------------------------------

    def decode(self, a):
        """Int in [0,q) -> coordinate tuple over F_p, length e."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def encode(self, digits):
        v = 0
        for d in reversed(digits):
            v = v * self.p + (d % self.p)
        return v

    # -- table construction --------------------------------------------------

    def _raw_add(self, a, b):
        p = self.p
        da, db = self.decode(a), self.decode(b)
        return self.encode([(x + y) % p for x, y in zip(da, db)])

    def _raw_mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        prod = _fp_poly_mul(list(self.decode(a)), list(self.decode(b)), self.p)
        prod = _fp_poly_mod(prod, list(self.modulus), self.p)
        return self.encode(prod)

    def _build_tables(self):
        q = self.q
        self._add_t = tuple(
            tuple(self._raw_add(a, b) for b in range(q)) for a in range(q)
        )
        self._mul_t = tuple(
            tuple(self._raw_mul(a, b) for b in range(q)) for a in range(q)
        )
        self._neg_t = tuple(self._raw_add_inverse(a) for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul_t[a][b] == 1:
                    inv[a] = b
                    break
        self._inv_t = tuple(inv)
        self._frobp_t = tuple(self.pow(a, self.p) for a in range(q))

    def _raw_add_inverse(self, a):
        p = self.p
        return self.encode([(-x) % p for x in self.decode(a)])

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return self._add_t[a][b]

    def sub(self, a, b):
        return self._add_t[a][self._neg_t[b]]

    def neg(self, a):
        return self._neg_t[a]

    def mul(self, a, b):
        return self._mul_t[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._inv_t[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if k < 0:
            a = self.inv(a)
            k = -k
        r = 1
        while k:
            if k & 1:
                r = self._raw_mul(r, a) if self._mul_t is None else self._mul_t[r][a]
            a = self._raw_mul(a, a) if self._mul_t is None else self._mul_t[a][a]
            k >>= 1
        return r

    def frob_p(self, a):
        """a^p (the absolute Frobenius on F_q)."""
        return self._frobp_t[a]

    def frob_p_inv(self, a):
        """The inverse of a -> a^p (F_q is perfect)."""
        return self.pow(a, self.p ** (self.e - 1)) if self.e > 1 else a

    def is_square(self, a):
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a):
        """A square root of a, or None.  Brute table walk (q is small)."""
        for b in range(self.q):
            if self.mul(b, b) == a:
                return b
        return None

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"Fq({self.q})"

    def __eq__(self, other):
        return isinstance(other, Fq) and other.q == self.q

    def __hash__(self):
        return hash(("Fq", self.q))


@lru_cache(maxsize=None)
def get_fq(q):
    """Shared Fq instances; contents are immutable so sharing is safe."""
    return Fq(q)
