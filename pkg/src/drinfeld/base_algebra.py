"""Field-level algorithms: factorization, rational roots, stable powers.

``poly_factor`` factors over any finite field in the tower; ``rational_roots``
finds the F_q(x)-rational roots of a polynomial over F_q(x) by clearing
denominators and enumerating divisor pairs; ``stable_power_exponent``
computes, for x with given irreducible minimal polynomial over F = F_q(t),
an exponent m with F(x^m) contained in every F(x^n), together with the
minimal polynomial and degree of x^m.
"""

from . import fqpoly as fp
from . import kpoly as kp
from . import linalg
from .apoly import APoly, ax_to_kpoly, ax_from_kpoly, ax_pow_strip, ax_trim
from .errors import PreconditionError, ScopeError
from .fields import RationalFunctionField


def poly_factor(field, coeffs):
    """Monic irreducible factors with multiplicities over a finite field.

    The product of the factors (to their multiplicities) times the leading
    coefficient equals the input exactly.
    """
    coeffs = kp.trim(field, list(coeffs))
    if kp.is_zero(coeffs):
        raise PreconditionError("cannot factor the zero polynomial")
    return kp.factor(field, coeffs)


def rational_roots(field, coeffs):
    """All roots in F_q(x) of a nonzero polynomial with F_q(x) coefficients.

    Clears denominators, passes to the primitive polynomial over F_q[x], and
    enumerates candidate roots num/den with num dividing the constant
    coefficient (up to a scalar) and den a monic divisor of the leading
    coefficient.  Every returned value is verified by direct evaluation.
    """
    fq = field.fq
    coeffs = kp.trim(field, list(coeffs))
    if kp.is_zero(coeffs):
        raise PreconditionError("zero polynomial has no well-defined root set")
    if kp.deg(coeffs) == 0:
        return []
    # clear denominators: common denominator D, g_i = num_i * D / den_i
    D = (1,)
    for c in coeffs:
        D = fp.lcm(fq, D, c.den)
    polys = []
    for c in coeffs:
        polys.append(fp.mul(fq, c.num, fp.divexact(fq, D, c.den)))
    # primitive part
    content = fp.ZERO
    for g in polys:
        content = fp.gcd(fq, content, g)
    if fp.deg(content) > 0:
        polys = [fp.divexact(fq, g, content) for g in polys]
    roots = []
    # strip X^k: root 0
    k = 0
    while k < len(polys) and fp.is_zero(polys[k]):
        k += 1
    if k > 0:
        roots.append(field.zero)
        polys = polys[k:]
    if len(polys) <= 1:
        return sorted(set(roots), key=lambda r: r.sort_key())
    c0, cm = polys[0], polys[-1]
    num_divs = fp.monic_divisors(fq, c0)
    den_divs = [d for d in fp.monic_divisors(fq, cm)]
    fcoeffs = [field.element(g) for g in polys]
    for den in den_divs:
        for num in num_divs:
            if fp.deg(fp.gcd(fq, num, den)) > 0:
                continue
            for alpha in range(1, fq.q):
                cand = field.element(fp.scal(fq, alpha, num), den)
                if kp.eval_(field, fcoeffs, cand) == field.zero:
                    roots.append(cand)
    return sorted(set(roots), key=lambda r: r.sort_key())


# -- stable power exponents ----------------------------------------------------


def element_stream(field):
    """Deterministic stream of distinct elements of F_q(t): all polynomials
    in t by ascending (degree, digits)."""
    q = field.q
    for k in range(q):
        yield field.from_poly(fp.const(field.fq, k))
    d = 1
    while True:
        for k in range(q**d * (q - 1)):
            m = k
            digits = []
            for _ in range(d):
                digits.append(m % q)
                m //= q
            yield field.from_poly(fp.trim(digits + [m + 1]))
        d += 1


def _resultant_by_interp(F, A, make_B, degree_bound, skip_zero=True):
    """R(X) = Res_Y(A(Y), B_X(Y)) by evaluation at X = xi + interpolation.

    ``make_B(xi)`` returns the Y-polynomial B at X = xi; points where B drops
    degree are skipped (they would break the product formula).
    """
    pts = []
    degB = None
    stream = element_stream(F)
    while len(pts) < degree_bound + 1:
        xi = next(stream)
        if skip_zero and xi == F.zero:
            continue
        B = make_B(xi)
        if degB is None:
            degB = kp.deg(B)
        if kp.deg(B) != degB:
            continue
        pts.append((xi, kp.resultant(F, A, B)))
    return kp.interpolate(F, pts)


def ratio_polynomial(F, P):
    """prod_{i != j} (X - sigma_i(x)/sigma_j(x)) for separable monic P.

    Computed as Res_Y(P(Y), P(XY)) / (X-1)^{deg P}, normalized monic.
    """
    r = kp.deg(P)
    R = _resultant_by_interp(
        F,
        P,
        lambda xi: kp.trim(F, [c * xi**j for j, c in enumerate(P)]),
        r * r,
    )
    lin = [-F.one, F.one]
    for _ in range(r):
        R = kp.divexact(F, R, lin)
    return kp.monic(F, R)


def power_product_poly(F, P, m):
    """prod_i (X - sigma_i(x)^m) = Res_Y(P(Y), X - Y^m), monic (P monic)."""
    def make_B(xi):
        B = [F.zero] * (m + 1)
        B[0] = xi
        B[m] = -F.one
        return B

    R = _resultant_by_interp(F, P, make_B, kp.deg(P), skip_zero=False)
    return kp.monic(F, R)


def _constant_field_factors(F, Qr):
    """Monic irreducibles over F_q dividing Qr in F_q(t)[X].

    Candidates come from specializing t (or from full enumeration when no
    good specialization point exists); each candidate is confirmed by exact
    division over F_q(t).
    """
    fq = F.fq
    if kp.deg(Qr) < 1:
        return []
    # clear denominators of Qr -> W with F_q[t] coefficients
    D = (1,)
    for c in Qr:
        D = fp.lcm(fq, D, c.den)
    W = [fp.mul(fq, c.num, fp.divexact(fq, D, c.den)) for c in Qr]
    content = fp.ZERO
    for w in W:
        content = fp.gcd(fq, content, w)
    if fp.deg(content) > 0:
        W = [fp.divexact(fq, w, content) for w in W]
    # specialization pre-filter
    G = None
    good = 0
    for theta in range(fq.q):
        lead = fp.eval_(fq, W[-1], theta)
        if lead == 0:
            continue
        spec = fp.trim([fp.eval_(fq, w, theta) for w in W])
        G = spec if G is None else fp.gcd(fq, G, spec)
        good += 1
        if good >= 3 or fp.deg(G) == 0:
            break
    if G is not None and fp.deg(G) == 0:
        return []
    if G is not None:
        candidates = [g for g, _ in fp.factor(fq, G)]
    else:
        candidates = []
        for d in range(1, kp.deg(Qr) + 1):
            candidates.extend(fp.irreducibles(fq, d))
    out = []
    for g in candidates:
        gF = [F.from_fq(c) for c in g]
        _, rem = kp.divmod_(F, Qr, gF)
        if kp.is_zero(rem):
            out.append(g)
    return out


def stable_power_exponent(minpoly):
    """(m, minpoly of x^m, degree of x^m) for x with the given minimal
    polynomial over F = F_q(t).

    Follows the constructive argument: strip the largest p-power so the
    polynomial becomes separable, build the conjugate-ratio polynomial by
    resultants, detect its factors defined over the constant field, and take
    m as p^strip times the lcm of the multiplicative orders of their roots.
    The minimal polynomial of x^m is then found by linear algebra in
    F[X]/(minpoly).
    """
    P = ax_trim(minpoly)
    if len(P) < 2:
        raise PreconditionError("minimal polynomial must have degree >= 1")
    if not P[-1].is_one():
        raise PreconditionError("minimal polynomial must be monic")
    q = P[0].fq.q
    if P[0].is_zero():
        raise PreconditionError("x = 0 is rejected")
    F = RationalFunctionField(q, "t")
    Pk = ax_to_kpoly(P, F)
    _validate_irreducible(F, Pk)
    if len(P) == 2:
        return 1, P, 1
    p = P[0].fq.p
    Q0, strip = ax_pow_strip(P, p)
    if strip > 0 and len(Q0) == 2:
        return p**strip, ax_trim(Q0), 1
    Qk = ax_to_kpoly(ax_trim(Q0), F)
    Qr = ratio_polynomial(F, Qk)
    const_factors = _constant_field_factors(F, Qr)
    orders = [fp.multiplicative_order_mod(P[0].fq, g) for g in const_factors]
    m_sep = fp.lcm_int(orders) if orders else 1
    m = (p**strip) * m_sep
    if m == 1:
        return 1, P, len(P) - 1
    min_m, deg_m = _power_minpoly(F, Pk, m, q)
    return m, min_m, deg_m


def _validate_irreducible(F, Pk):
    d = kp.deg(Pk)
    if d == 1:
        return
    if d in (2, 3):
        if rational_roots(F, Pk):
            raise PreconditionError("reducible minimal polynomial rejected")
        return
    raise ScopeError(
        f"irreducibility validation for degree {d} over F_q(t) is out of scope"
    )


def _power_minpoly(F, Pk, m, q):
    """Minimal polynomial of X^m in the field F[X]/(Pk), as APoly tuple."""
    r = kp.deg(Pk)
    xi = kp.pow_mod(F, kp.x_power(F, 1), m, Pk)
    ech = linalg.FieldEchelon(F, r)
    vec = kp.x_power(F, 0)
    while True:
        coords = (vec + [F.zero] * r)[:r]
        dep = ech.insert(coords)
        if dep is not None:
            min_coeffs = kp.trim(F, dep)
            break
        vec = kp.mod(F, kp.mul(F, vec, xi), Pk)
    return ax_from_kpoly(min_coeffs, q), kp.deg(min_coeffs)
