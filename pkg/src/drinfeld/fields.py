"""Field objects shared by the whole library.

Two kinds of base field sit behind one duck-typed interface:

* ``FiniteField(q, n, modulus)`` -- the tower F_{q^n} = F_q[v]/(modulus),
  elements are coordinate vectors over F_q of length n;
* ``RationalFunctionField(q, var)`` -- F_q(x), elements are reduced fractions
  of F_q[x] polynomials with monic denominator.

Both element types support +, -, *, /, ** and ``frob(k)`` (the q^k-power
map), decidable equality, a canonical text rendering, and a total sort key.
All values are immutable; per-field caches only memoize pure computations.
"""

from .fqcore import get_fq
from . import fqpoly as fp


class FiniteField:
    """F_{q^n} over the ground field F_q, with the q-power Frobenius."""

    is_finite = True

    def __init__(self, q, n, modulus=None):
        self.fq = get_fq(q)
        self.q = q
        self.n = n
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = fp.canonical_irreducible(self.fq, n)
        else:
            modulus = fp.monic(self.fq, fp.trim(modulus))
            if fp.deg(modulus) != n:
                raise ValueError("modulus degree does not match n")
            if not fp.is_irreducible(self.fq, modulus):
                raise ValueError("modulus is reducible")
        self.modulus = modulus
        self.size = q**n
        self.zero = FF(self, (0,) * n)
        self.one = FF(self, (1,) + (0,) * (n - 1))
        self.gen = FF(self, ((0, 1) + (0,) * n)[:n]) if n > 1 else self.one
        self._frob_mats = {}
        self._embeddings = {}

    # -- construction of elements -------------------------------------------

    def element(self, coords):
        coords = tuple(coords)
        if len(coords) > self.n:
            poly = fp.mod(self.fq, fp.trim(coords), self.modulus)
            coords = poly + (0,) * (self.n - len(poly))
        elif len(coords) < self.n:
            coords = coords + (0,) * (self.n - len(coords))
        return FF(self, coords)

    def from_fq(self, c):
        """Embed c in F_q (an int) as a constant."""
        return FF(self, (c,) + (0,) * (self.n - 1))

    def elements(self):
        for k in range(self.size):
            coords = []
            m = k
            for _ in range(self.n):
                coords.append(m % self.q)
                m //= self.q
            yield FF(self, tuple(coords))

    def sample(self, rng):
        return FF(self, tuple(rng.randrange(self.q) for _ in range(self.n)))

    # -- Frobenius -----------------------------------------------------------

    def _frob_matrix(self, k):
        """Matrix of c -> c^{q^k} in the power basis, columns = basis images."""
        k %= self.n
        if k in self._frob_mats:
            return self._frob_mats[k]
        cols = []
        for i in range(self.n):
            img = fp.pow_mod(
                self.fq, fp.x_power(i), self.q**k, self.modulus
            )
            cols.append(img + (0,) * (self.n - len(img)))
        self._frob_mats[k] = cols
        return cols

    # -- tower embeddings ----------------------------------------------------

    def extension(self, m):
        """The canonical field F_{q^{n*m}} (canonical modulus)."""
        return FiniteField(self.q, self.n * m)

    def hom_to(self, target):
        """The cached canonical embedding into a larger FiniteField."""
        key = (target.n, target.modulus)
        if key in self._embeddings:
            return self._embeddings[key]
        emb = Embedding(self, target)
        self._embeddings[key] = emb
        return emb

    # -- parsing / rendering ------------------------------------------------

    def render(self, elem):
        return "[" + ",".join(str(c) for c in elem.coords) + "]"

    def parse(self, s):
        coords = fp.parse(self.fq, s)
        return self.element(coords)

    def key(self):
        return ("finite", self.q, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"GF({self.q}^{self.n})" if self.n > 1 else f"GF({self.q})"


class FF:
    """An element of a FiniteField: coordinate vector over F_q."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, FF) or other.field != self.field:
            raise ValueError("mixed finite-field operands")

    def __add__(self, other):
        self._check(other)
        fq = self.field.fq
        return FF(
            self.field,
            tuple(fq.add(a, b) for a, b in zip(self.coords, other.coords)),
        )

    def __sub__(self, other):
        self._check(other)
        fq = self.field.fq
        return FF(
            self.field,
            tuple(fq.sub(a, b) for a, b in zip(self.coords, other.coords)),
        )

    def __neg__(self):
        fq = self.field.fq
        return FF(self.field, tuple(fq.neg(a) for a in self.coords))

    def __mul__(self, other):
        self._check(other)
        fq = self.field.fq
        prod = fp.mod(
            fq,
            fp.mul(fq, fp.trim(self.coords), fp.trim(other.coords)),
            self.field.modulus,
        )
        return FF(self.field, prod + (0,) * (self.field.n - len(prod)))

    def inverse(self):
        fq = self.field.fq
        g, s, _ = fp.ext_gcd(fq, fp.trim(self.coords), self.field.modulus)
        if fp.deg(g) != 0:
            raise ZeroDivisionError("inverse of zero")
        s = fp.mod(fq, s, self.field.modulus)
        return FF(self.field, s + (0,) * (self.field.n - len(s)))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = self.field.one
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def frob(self, k=1):
        """self^{q^k} via the cached Frobenius matrix."""
        k %= self.field.n
        if k == 0:
            return self
        fq = self.field.fq
        cols = self.field._frob_matrix(k)
        out = [0] * self.field.n
        for i, c in enumerate(self.coords):
            if c:
                col = cols[i]
                row = fq._mul_t[c]
                for j in range(self.field.n):
                    if col[j]:
                        out[j] = fq.add(out[j], row[col[j]])
        return FF(self.field, tuple(out))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def in_fq(self):
        """The F_q value if the element is a constant, else None."""
        if all(c == 0 for c in self.coords[1:]):
            return self.coords[0]
        return None

    def __eq__(self, other):
        return (
            isinstance(other, FF)
            and other.field == self.field
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((self.field.key(), self.coords))

    def sort_key(self):
        return self.coords

    def __repr__(self):
        return self.field.render(self)


class Embedding:
    """A fixed F_q-embedding F_{q^n} -> F_{q^{nm}}.

    The image of the source generator is the least root (by sort key) of the
    source modulus in the target; the choice is cached on the source field so
    one computation uses one consistent embedding throughout.
    """

    def __init__(self, src, dst):
        if dst.n % src.n != 0:
            raise ValueError("no embedding: degree does not divide")
        self.src = src
        self.dst = dst
        if src.n == 1:
            img = dst.one
        else:
            from . import kpoly

            mod_in_dst = [dst.from_fq(c) for c in src.modulus]
            rts = kpoly.roots(dst, mod_in_dst)
            if not rts:
                raise AssertionError("modulus has no root in target field")
            img = min(rts, key=lambda r: r.sort_key())
        self.gen_image = img
        pows = [dst.one]
        for _ in range(src.n - 1):
            pows.append(pows[-1] * img)
        self._powers = pows
        self._descend_cache = None

    def __call__(self, elem):
        if elem.field != self.src:
            raise ValueError("element not in the embedding's source field")
        out = self.dst.zero
        for c, pw in zip(elem.coords, self._powers):
            if c:
                out = out + FF(self.dst, tuple(
                    self.dst.fq.mul(c, x) for x in pw.coords
                ))
        return out

    def descend(self, elem):
        """Preimage in the source field; raises ValueError if not in image."""
        if elem.field != self.dst:
            raise ValueError("element not in the embedding's target field")
        from . import linalg

        if self._descend_cache is None:
            cols = [pw.coords for pw in self._powers]
            self._descend_cache = linalg.FqSolver(self.dst.fq, cols)
        sol = self._descend_cache.solve(elem.coords)
        if sol is None:
            raise ValueError("element is not in the embedded subfield")
        return FF(self.src, tuple(sol))


class RationalFunctionField:
    """F_q(x): reduced fractions num/den with den monic."""

    is_finite = False

    def __init__(self, q, var="x"):
        self.fq = get_fq(q)
        self.q = q
        self.var = var
        self.zero = RF(self, fp.ZERO, (1,))
        self.one = RF(self, (1,), (1,))
        self.gen = RF(self, (0, 1), (1,))

    def element(self, num, den=(1,)):
        return _rf_make(self, fp.trim(num), fp.trim(den))

    def from_fq(self, c):
        return RF(self, fp.const(self.fq, c), (1,))

    def from_poly(self, num):
        return RF(self, fp.trim(num), (1,))

    def sample(self, rng, num_deg=1, den_deg=1):
        num = fp.trim([rng.randrange(self.q) for _ in range(num_deg + 1)])
        den = fp.ZERO
        while fp.is_zero(den):
            den = fp.trim([rng.randrange(self.q) for _ in range(den_deg)] + [1])
        return _rf_make(self, num, den)

    def render(self, elem):
        return fp.render(elem.num) + "/" + fp.render(elem.den)

    def parse(self, s):
        s = s.strip()
        if "/" in s:
            ns, ds = s.split("/", 1)
        else:
            ns, ds = s, "[1]"
        num = fp.parse(self.fq, ns)
        den = fp.parse(self.fq, ds)
        if fp.is_zero(den):
            raise ValueError("zero denominator")
        return _rf_make(self, num, den)

    def key(self):
        return ("rational", self.q, self.var)

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunctionField) and other.key() == self.key()
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"GF({self.q})({self.var})"


def _rf_make(field, num, den):
    """Normalize a fraction: reduced, monic denominator."""
    fq = field.fq
    if fp.is_zero(num):
        return RF(field, fp.ZERO, (1,))
    if fp.is_zero(den):
        raise ZeroDivisionError("zero denominator")
    g = fp.gcd(fq, num, den)
    if fp.deg(g) > 0:
        num = fp.divexact(fq, num, g)
        den = fp.divexact(fq, den, g)
    lc = den[-1]
    if lc != 1:
        c = fq.inv(lc)
        num = fp.scal(fq, c, num)
        den = fp.scal(fq, c, den)
    return RF(field, num, den)


class RF:
    """A reduced rational function over F_q."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    def _check(self, other):
        if not isinstance(other, RF) or other.field != self.field:
            raise ValueError("mixed rational-function operands")

    def __add__(self, other):
        self._check(other)
        fq = self.field.fq
        num = fp.add(
            fq, fp.mul(fq, self.num, other.den), fp.mul(fq, other.num, self.den)
        )
        return _rf_make(self.field, num, fp.mul(fq, self.den, other.den))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RF(self.field, fp.neg(self.field.fq, self.num), self.den)

    def __mul__(self, other):
        self._check(other)
        fq = self.field.fq
        # cross-reduce first: keeps gcds on small operands
        n1, d2 = _cross(fq, self.num, other.den)
        n2, d1 = _cross(fq, other.num, self.den)
        return _rf_make(self.field, fp.mul(fq, n1, n2), fp.mul(fq, d1, d2))

    def inverse(self):
        if fp.is_zero(self.num):
            raise ZeroDivisionError("inverse of zero")
        return _rf_make(self.field, self.den, self.num)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = self.field.one
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def frob(self, k=1):
        """self^{q^k} by exponent spreading (no reduction needed)."""
        fq = self.field.fq
        num = fp.pow_q_iter(fq, self.num, k)
        den = fp.pow_q_iter(fq, self.den, k)
        return RF(self.field, num, den)

    def is_zero(self):
        return fp.is_zero(self.num)

    def is_constant(self):
        return fp.deg(self.num) <= 0 and fp.deg(self.den) == 0

    def in_fq(self):
        if self.is_constant():
            return self.num[0] if self.num else 0
        return None

    def is_polynomial(self):
        return fp.deg(self.den) == 0

    def height(self):
        return max(fp.deg(self.num), fp.deg(self.den))

    def __eq__(self, other):
        return (
            isinstance(other, RF)
            and other.field == self.field
            and other.num == self.num
            and other.den == self.den
        )

    def __hash__(self):
        return hash((self.field.key(), self.num, self.den))

    def sort_key(self):
        return (len(self.den), self.den, len(self.num), self.num)

    def __repr__(self):
        return self.field.render(self)


def _cross(fq, num, den):
    g = fp.gcd(fq, num, den)
    if fp.deg(g) > 0:
        return fp.divexact(fq, num, g), fp.divexact(fq, den, g)
    return num, den
