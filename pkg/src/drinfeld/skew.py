"""The twisted polynomial ring K{tau}, tau*c = c^q*tau.

SkewPoly is immutable; the zero polynomial has degree -inf (float), which
compares below every integer.  Right division, greatest common right
divisors, and least common left multiples are supported; the lclm of a set
is found by linear algebra over K on the residues of tau^j in the direct sum
of the quotients K{tau}/K{tau}u, bounded by the sum of the input degrees.
"""

from .errors import PreconditionError
from . import linalg

NEG_INF = float("-inf")


class SkewPoly:
    """A twisted polynomial over a base field (finite or F_q(x))."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == field.zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def tau(cls, field, k=1):
        return cls(field, (field.zero,) * k + (field.one,))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant_coefficient(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError("expected a SkewPoly")
        if other.field != self.field:
            raise PreconditionError("mismatched base fields")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return SkewPoly(self.field, out)

    def __neg__(self):
        return SkewPoly(self.field, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return skew_mul(self, other)

    def __pow__(self, k):
        r = SkewPoly.one(self.field)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def scale(self, c):
        """Left multiplication by the constant c."""
        return SkewPoly(self.field, (c * a for a in self.coeffs))

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading
        if lc == self.field.one:
            return self
        return self.scale(lc.inverse())

    def map_coefficients(self, fn, field=None):
        return SkewPoly(field or self.field, (fn(c) for c in self.coeffs))

    def evaluate(self, x):
        """Value of the additive polynomial sum c_i X^{q^i} at x (same field;
        base-change the polynomial first to evaluate in an extension)."""
        out = self.field.zero
        for i, c in enumerate(self.coeffs):
            if c != self.field.zero:
                out = out + c * x.frob(i)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.key(), self.coeffs))

    def sort_key(self):
        return (len(self.coeffs), tuple(c.sort_key() for c in self.coeffs))

    def render(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            cs = self.field.render(c)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{cs}*t^")
            else:
                parts.append(f"{cs}*t^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return self.render()


def _is_zero_elem(field, c):
    return c == field.zero


def skew_mul(u, v):
    """The twisted product: (a tau^i)(b tau^j) = a b^{q^i} tau^{i+j}."""
    u._check(v)
    field = u.field
    if u.is_zero() or v.is_zero():
        return SkewPoly.zero(field)
    out = [field.zero] * (len(u.coeffs) + len(v.coeffs) - 1)
    for i, a in enumerate(u.coeffs):
        if a == field.zero:
            continue
        twisted = [b.frob(i) for b in v.coeffs]
        for j, b in enumerate(twisted):
            if b != field.zero:
                out[i + j] = out[i + j] + a * b
    return SkewPoly(field, out)


def right_divmod(u, v):
    """(quot, rem) with u = quot*v + rem and deg rem < deg v; unique."""
    u._check(v)
    if v.is_zero():
        raise ZeroDivisionError("right division by the zero skew polynomial")
    field = u.field
    if u.degree < v.degree:
        return SkewPoly.zero(field), u
    rem = list(u.coeffs)
    dv = len(v.coeffs) - 1
    lead = v.leading
    quot = [field.zero] * (len(rem) - dv)
    for i in range(len(rem) - 1, dv - 1, -1):
        c = rem[i]
        if c == field.zero:
            continue
        k = i - dv
        # (a tau^k) * v has leading coefficient a * lead^{q^k} at tau^i
        a = c / lead.frob(k)
        quot[k] = a
        for j, b in enumerate(v.coeffs):
            rem[k + j] = rem[k + j] - a * b.frob(k)
    return SkewPoly(field, quot), SkewPoly(field, rem[:dv])


def gcrd(polys):
    """Greatest common right divisor of a nonempty set, monic (or zero)."""
    polys = list(polys)
    if not polys:
        raise PreconditionError("gcrd of an empty set")
    field = polys[0].field
    for u in polys:
        u._check(polys[0])
    g = SkewPoly.zero(field)
    for u in polys:
        a, b = g, u
        while not b.is_zero():
            a, b = b, right_divmod(a, b)[1]
        g = a
    return g.monic()


def lclm(polys):
    """Least common left multiple of a nonempty set, monic (or zero).

    Solves for the minimal monic annihilator of (1,...,1) in the direct sum
    of the K{tau}/K{tau}u by incremental linear algebra on the residues of
    tau^j; the degree is bounded by the sum of the input degrees.
    """
    polys = list(polys)
    if not polys:
        raise PreconditionError("lclm of an empty set")
    field = polys[0].field
    for u in polys:
        if not u.is_zero():
            u._check(polys[0])
    if any(u.is_zero() for u in polys):
        return SkewPoly.zero(field)
    polys = [u.monic() for u in polys]
    # dedupe keeps the residue space small; lclm is set-valued anyway
    seen = []
    for u in polys:
        if u not in seen:
            seen.append(u)
    polys = seen
    if all(u.degree == 0 for u in polys):
        return SkewPoly.one(field)
    width = sum(int(u.degree) for u in polys)
    ech = linalg.FieldEchelon(field, width)
    residues = [SkewPoly.one(field) for _ in polys]
    j = 0
    while True:
        vec = []
        for u, r in zip(polys, residues):
            cs = list(r.coeffs) + [field.zero] * (int(u.degree) - len(r.coeffs))
            vec.extend(cs[: int(u.degree)])
        dep = ech.insert(vec)
        if dep is not None:
            return SkewPoly(field, dep)
        # advance: residue of tau^{j+1} = (tau * residue) mod u
        new_residues = []
        for u, r in zip(polys, residues):
            shifted = SkewPoly(
                field, (field.zero,) + tuple(c.frob(1) for c in r.coeffs)
            )
            new_residues.append(right_divmod(shifted, u)[1])
        residues = new_residues
        j += 1
        if j > width + 1:  # pragma: no cover - the bound is a theorem
            raise AssertionError("lclm did not terminate within its bound")
