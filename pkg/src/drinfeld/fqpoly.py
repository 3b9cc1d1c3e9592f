"""Dense univariate polynomials over F_q as int tuples, low degree first.

The zero polynomial is the empty tuple.  Every function takes the Fq context
as its first argument.  Factorization is distinct-degree then equal-degree
splitting with a fixed internal seed, so results are deterministic.
"""

import math
import random

ZERO = ()


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(a):
    return len(a) - 1


def is_zero(a):
    return len(a) == 0


def const(fq, c):
    return (c,) if c != 0 else ()


def x_power(k):
    return (0,) * k + (1,)


def add(fq, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = fq.add(out[i], c)
    return trim(out)


def neg(fq, a):
    return tuple(fq.neg(c) for c in a)


def sub(fq, a, b):
    return add(fq, a, neg(fq, b))


def scal(fq, c, a):
    if c == 0:
        return ZERO
    return tuple(fq.mul(c, x) for x in a)


def mul(fq, a, b):
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            row = fq._mul_t[ai]
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = fq.add(out[i + j], row[bj])
    return trim(out)


def divmod_(fq, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return ZERO, a
    a = list(a)
    db, lb = deg(b), b[-1]
    inv_lb = fq.inv(lb)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = fq.mul(c, inv_lb)
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = fq.sub(a[i - db + j], fq.mul(f, b[j]))
    return trim(q), trim(a[:db])


def mod(fq, a, b):
    return divmod_(fq, a, b)[1]


def divexact(fq, a, b):
    q, r = divmod_(fq, a, b)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def monic(fq, a):
    if not a:
        return ZERO
    if a[-1] == 1:
        return a
    return scal(fq, fq.inv(a[-1]), a)


def gcd(fq, a, b):
    while b:
        a, b = b, mod(fq, a, b)
    return monic(fq, a)


def ext_gcd(fq, a, b):
    """Return (g, s, t) with g = s*a + t*b, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = (1,), ZERO
    t0, t1 = ZERO, (1,)
    while r1:
        q, r = divmod_(fq, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(fq, s0, mul(fq, q, s1))
        t0, t1 = t1, sub(fq, t0, mul(fq, q, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    c = fq.inv(r0[-1])
    return scal(fq, c, r0), scal(fq, c, s0), scal(fq, c, t0)


def lcm(fq, a, b):
    if not a or not b:
        return ZERO
    return monic(fq, divexact(fq, mul(fq, a, b), gcd(fq, a, b)))


def pow_mod(fq, a, k, m):
    r = (1,)
    a = mod(fq, a, m)
    while k:
        if k & 1:
            r = mod(fq, mul(fq, r, a), m)
        a = mod(fq, mul(fq, a, a), m)
        k >>= 1
    return r


def eval_(fq, a, x):
    r = 0
    for c in reversed(a):
        r = fq.add(fq.mul(r, x), c)
    return r


def derivative(fq, a):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        k = i % fq.p
        acc = 0
        for _ in range(k):
            acc = fq.add(acc, c)
        out.append(acc)
    return trim(out)


def pow_p(fq, a):
    """a(x)^p = a_sigma(x^p): spread exponents, p-th-power coefficients."""
    if not a:
        return ZERO
    out = [0] * ((len(a) - 1) * fq.p + 1)
    for i, c in enumerate(a):
        out[i * fq.p] = fq.frob_p(c)
    return tuple(out)


def pow_q_iter(fq, a, k):
    """a^{q^k} by k*e applications of the p-power spread."""
    for _ in range(k * fq.e):
        a = pow_p(fq, a)
    return a


def pth_root(fq, a):
    """The p-th root of a, or None if a is not a p-th power."""
    if not a:
        return ZERO
    if (len(a) - 1) % fq.p != 0:
        return None
    out = [0] * ((len(a) - 1) // fq.p + 1)
    for i, c in enumerate(a):
        if i % fq.p == 0:
            out[i // fq.p] = fq.frob_p_inv(c)
        elif c != 0:
            return None
    return tuple(out)


def render(a):
    if not a:
        return "[0]"
    return "[" + ",".join(str(c) for c in a) + "]"


def parse(fq, s):
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"bad polynomial literal: {s!r}")
    body = s[1:-1].strip()
    if not body:
        return ZERO
    coeffs = []
    for item in body.split(","):
        v = int(item.strip())
        if not 0 <= v < fq.q:
            raise ValueError(f"coefficient {v} out of range for F_{fq.q}")
        coeffs.append(v)
    return trim(coeffs)


# -- irreducibility, enumeration, factorization -------------------------------


def is_irreducible(fq, f):
    f = monic(fq, f)
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = x_power(1)
    # x^{q^d} mod f for d = 1..n: must fix x exactly at d = n and have
    # trivial gcd with f at every proper divisor d.
    h = pow_mod(fq, x, fq.q, f)
    powers = {1: h}
    cur = h
    for d in range(2, n + 1):
        cur = _compose_frob(fq, cur, h, f)
        powers[d] = cur
    if sub(fq, powers[n], x) != ZERO:
        return False
    for d in range(1, n):
        if n % d == 0 and deg(gcd(fq, sub(fq, powers[d], x), f)) > 0:
            return False
    return True


def _compose_frob(fq, g, h, f):
    """g(h) mod f by Horner; used to iterate x -> x^q mod f."""
    r = ZERO
    for c in reversed(g):
        r = mod(fq, mul(fq, r, h), f)
        if c:
            r = add(fq, r, (c,))
    return r


def monic_polys(fq, d):
    """All monic polynomials of degree d, in ascending base-q digit order."""
    for k in range(fq.q**d):
        digits = []
        m = k
        for _ in range(d):
            digits.append(m % fq.q)
            m //= fq.q
        yield tuple(digits) + (1,)


def irreducibles(fq, d):
    """Monic irreducibles of degree d in the canonical enumeration order."""
    for f in monic_polys(fq, d):
        if is_irreducible(fq, f):
            yield f


def canonical_irreducible(fq, d):
    return next(irreducibles(fq, d))


def squarefree_decomposition(fq, f):
    """Yield (g, multiplicity) with g squarefree, product g^m = f (f monic)."""
    out = []
    _sqf_rec(fq, monic(fq, f), 1, out)
    return out


def _sqf_rec(fq, f, mult, out):
    if deg(f) <= 0:
        return
    df = derivative(fq, f)
    if is_zero(df):
        _sqf_rec(fq, pth_root(fq, f), mult * fq.p, out)
        return
    g = gcd(fq, f, df)
    w = divexact(fq, f, g)
    # w collects each factor of p-prime multiplicity once; peel by level
    i = 1
    while deg(w) > 0:
        y = gcd(fq, w, g)
        z = divexact(fq, w, y)
        if deg(z) > 0:
            out.append((z, i * mult))
        w = y
        if deg(y) > 0:
            g = divexact(fq, g, y)
        i += 1
    # g now holds exactly the factors of multiplicity divisible by p
    if deg(g) > 0:
        _sqf_rec(fq, pth_root(fq, g), mult * fq.p, out)


def distinct_degree(fq, f):
    """For squarefree monic f: yield (product of degree-d factors, d)."""
    x = x_power(1)
    h = x
    d = 0
    while deg(f) > 0:
        d += 1
        if 2 * d > deg(f):
            yield f, deg(f)
            return
        h = pow_mod(fq, h, fq.q, f)
        g = gcd(fq, sub(fq, h, x), f)
        if deg(g) > 0:
            yield g, d
            f = divexact(fq, f, g)
            h = mod(fq, h, f)


def equal_degree(fq, f, d, rng):
    """Split squarefree monic f, all of whose factors have degree d."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        h = trim([rng.randrange(fq.q) for _ in range(n)])
        if deg(h) < 1:
            continue
        if fq.p == 2:
            # additive trace from F_{q^d} to F_2
            m = fq.e * d
            t = h
            acc = h
            for _ in range(m - 1):
                t = mod(fq, mul(fq, t, t), f)
                acc = add(fq, acc, t)
            g = gcd(fq, acc, f)
        else:
            ex = (fq.q**d - 1) // 2
            g = gcd(fq, sub(fq, pow_mod(fq, h, ex, f), (1,)), f)
        if 0 < deg(g) < n:
            return sorted(
                equal_degree(fq, g, d, rng)
                + equal_degree(fq, divexact(fq, f, g), d, rng)
            )


def factor(fq, f):
    """Monic irreducible factors with multiplicity: [(g, m), ...], sorted.

    The leading coefficient is dropped; callers re-attach it.
    """
    if is_zero(f):
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(0xD21F)
    out = []
    for g, m in squarefree_decomposition(fq, f):
        for h, d in distinct_degree(fq, g):
            for irr in equal_degree(fq, h, d, rng):
                out.append((irr, m))
    out.sort()
    return out


def roots(fq, f):
    """All roots in F_q, each once (multiplicity ignored), sorted."""
    if is_zero(f):
        raise ValueError("zero polynomial")
    out = []
    for c in range(fq.q):
        if eval_(fq, f, c) == 0:
            out.append(c)
    return out


def monic_divisors(fq, f):
    """All monic divisors of f, from its factorization; sorted, deduped."""
    divs = [(1,)]
    for g, m in factor(fq, f):
        powers = [(1,)]
        for _ in range(m):
            powers.append(mul(fq, powers[-1], g))
        divs = [mul(fq, d0, pw) for d0 in divs for pw in powers]
    return sorted(set(divs))


def multiplicative_order_mod(fq, g):
    """Multiplicative order of x modulo the irreducible g (g != x)."""
    n = fq.q ** deg(g) - 1
    order = n
    for pr in _prime_factors(n):
        while order % pr == 0 and pow_mod(fq, x_power(1), order // pr, g) == (1,):
            order //= pr
    return order


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def lcm_int(values):
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out
