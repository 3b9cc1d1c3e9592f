"""Elements of the coefficient ring A = F_q[t], and polynomials over A.

``APoly`` wraps an fqpoly tuple with operators; it is the currency for
characteristic ideals, minimal-polynomial coefficients, and F_q[t]-module
coordinates.  Polynomials in X over A (minimal/characteristic polynomials of
endomorphisms) are plain tuples of APoly, low X-degree first and monic; the
``ax_*`` helpers operate on those.
"""

from .fqcore import get_fq
from . import fqpoly as fp


class APoly:
    """An element of F_q[t]."""

    __slots__ = ("fq", "coeffs")

    def __init__(self, fq, coeffs):
        if isinstance(fq, int):
            fq = get_fq(fq)
        self.fq = fq
        self.coeffs = fp.trim(coeffs)

    @classmethod
    def zero(cls, q):
        return cls(get_fq(q), ())

    @classmethod
    def one(cls, q):
        return cls(get_fq(q), (1,))

    @classmethod
    def t(cls, q):
        return cls(get_fq(q), (0, 1))

    @classmethod
    def const(cls, q, c):
        return cls(get_fq(q), fp.const(get_fq(q), c))

    @classmethod
    def parse(cls, q, s):
        fq = get_fq(q)
        return cls(fq, fp.parse(fq, s))

    def _check(self, other):
        if not isinstance(other, APoly) or other.fq != self.fq:
            raise ValueError("mixed APoly operands")

    def __add__(self, other):
        self._check(other)
        return APoly(self.fq, fp.add(self.fq, self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return APoly(self.fq, fp.sub(self.fq, self.coeffs, other.coeffs))

    def __neg__(self):
        return APoly(self.fq, fp.neg(self.fq, self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return APoly(self.fq, fp.mul(self.fq, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        self._check(other)
        q, r = fp.divmod_(self.fq, self.coeffs, other.coeffs)
        return APoly(self.fq, q), APoly(self.fq, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k):
        r = APoly(self.fq, (1,))
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def gcd(self, other):
        self._check(other)
        return APoly(self.fq, fp.gcd(self.fq, self.coeffs, other.coeffs))

    def divides(self, other):
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self):
        return APoly(self.fq, fp.monic(self.fq, self.coeffs))

    def is_zero(self):
        return len(self.coeffs) == 0

    def is_one(self):
        return self.coeffs == (1,)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_unit(self):
        return len(self.coeffs) == 1

    def is_irreducible(self):
        return fp.is_irreducible(self.fq, self.coeffs)

    def factor(self):
        return [
            (APoly(self.fq, g), m) for g, m in fp.factor(self.fq, self.coeffs)
        ]

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def to_rf(self, tfield):
        """The image in F_q(t) (a RationalFunctionField with var 't')."""
        return tfield.from_poly(self.coeffs)

    def render(self):
        return fp.render(self.coeffs)

    def sort_key(self):
        return (len(self.coeffs), self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, APoly)
            and other.fq == self.fq
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(("APoly", self.fq.q, self.coeffs))

    def __repr__(self):
        return f"APoly{self.coeffs}"


def apoly_eval(a, field, gamma_t):
    """a(gamma_t) in `field`; the characteristic homomorphism gamma."""
    r = field.zero
    for c in reversed(a.coeffs):
        r = r * gamma_t + field.from_fq(c)
    return r


# -- polynomials in X over A -----------------------------------------------
# Represented as tuples of APoly, low X-degree first, no trailing zeros.


def ax_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


def ax_degree(P):
    return len(P) - 1


def ax_is_monic(P):
    return len(P) > 0 and P[-1].is_one()


def ax_render(P):
    return "[" + ",".join(a.render() for a in P) + "]"


def ax_parse(q, s):
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"bad A[X] literal: {s!r}")
    body = s[1:-1].strip()
    out = []
    depth = 0
    cur = ""
    for ch in body:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return ax_trim([APoly.parse(q, item) for item in out])


def ax_equal(P, Q):
    return ax_trim(P) == ax_trim(Q)


def ax_to_kpoly(P, tfield):
    """Map a polynomial over A to one over F_q(t) for field computations."""
    return [a.to_rf(tfield) for a in P]


def ax_from_kpoly(coeffs, q):
    """Back from F_q(t)[X] when every coefficient is integral (polynomial)."""
    out = []
    for c in coeffs:
        if not c.is_polynomial():
            raise ValueError("coefficient is not in F_q[t]")
        out.append(APoly(get_fq(q), c.num))
    return ax_trim(out)


def ax_pow_strip(P, p):
    """Largest i with P(X) = Q(X^{p^i}); returns (Q, i)."""
    i = 0
    cur = list(P)
    while True:
        if ax_degree(ax_trim(cur)) < 1:
            return ax_trim(cur), i
        ok = all(
            cur[j].is_zero() for j in range(len(cur)) if j % p != 0
        )
        if not ok or (len(cur) - 1) % p != 0:
            return ax_trim(cur), i
        cur = [cur[j] for j in range(0, len(cur), p)]
        i += 1
