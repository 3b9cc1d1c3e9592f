"""Dense polynomials over an arbitrary field object (lists of elements).

Used for computations whose coefficients live in F_{q^n} or F_q(t):
factorization and root finding over finite fields, resultants by the
Euclidean remainder sequence, and Lagrange interpolation.  The coefficient
field is any object from ``fields`` (or anything with the same protocol).
"""

import random


def trim(K, a):
    a = list(a)
    while a and a[-1] == K.zero:
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def is_zero(a):
    return len(a) == 0


def const(K, c):
    return [] if c == K.zero else [c]


def x_power(K, k):
    return [K.zero] * k + [K.one]


def add(K, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(K, out)


def neg(K, a):
    return [-c for c in a]


def sub(K, a, b):
    return add(K, a, neg(K, b))


def scal(K, c, a):
    if c == K.zero:
        return []
    return trim(K, [c * x for x in a])


def mul(K, a, b):
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai != K.zero:
            for j, bj in enumerate(b):
                if bj != K.zero:
                    out[i + j] = out[i + j] + ai * bj
    return trim(K, out)


def divmod_(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    a = list(a)
    db = deg(b)
    inv_lb = b[-1].inverse()
    q = [K.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c != K.zero:
            f = c * inv_lb
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = a[i - db + j] - f * b[j]
    return trim(K, q), trim(K, a[:db])


def mod(K, a, b):
    return divmod_(K, a, b)[1]


def divexact(K, a, b):
    q, r = divmod_(K, a, b)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def monic(K, a):
    if not a:
        return []
    if a[-1] == K.one:
        return list(a)
    return scal(K, a[-1].inverse(), a)


def gcd(K, a, b):
    while b:
        a, b = b, mod(K, a, b)
    return monic(K, a)


def pow_mod(K, a, k, m):
    r = [K.one]
    a = mod(K, a, m)
    while k:
        if k & 1:
            r = mod(K, mul(K, r, a), m)
        a = mod(K, mul(K, a, a), m)
        k >>= 1
    return r


def eval_(K, a, x):
    r = K.zero
    for c in reversed(a):
        r = r * x + c
    return r


def derivative(K, a):
    out = []
    for i in range(1, len(a)):
        c = K.zero
        for _ in range(i % K.fq.p):
            c = c + a[i]
        out.append(c)
    return trim(K, out)


def render(K, a):
    if not a:
        return "[" + K.render(K.zero) + "]"
    return "[" + ",".join(K.render(c) for c in a) + "]"


# -- factorization over finite fields -----------------------------------------


def _pth_root_elem(K, c):
    # K is finite of order p^(e*n); c -> c^{p^{en-1}}
    m = K.fq.e * K.n
    return c ** (K.fq.p ** (m - 1))


def pth_root(K, a):
    if not a:
        return []
    p = K.fq.p
    if (len(a) - 1) % p != 0:
        return None
    out = [K.zero] * ((len(a) - 1) // p + 1)
    for i, c in enumerate(a):
        if i % p == 0:
            out[i // p] = _pth_root_elem(K, c)
        elif c != K.zero:
            return None
    return out


def squarefree_decomposition(K, f):
    out = []
    _sqf_rec(K, monic(K, f), 1, out)
    return out


def _sqf_rec(K, f, mult, out):
    if deg(f) <= 0:
        return
    df = derivative(K, f)
    if is_zero(df):
        _sqf_rec(K, pth_root(K, f), mult * K.fq.p, out)
        return
    g = gcd(K, f, df)
    w = divexact(K, f, g)
    i = 1
    while deg(w) > 0:
        y = gcd(K, w, g)
        z = divexact(K, w, y)
        if deg(z) > 0:
            out.append((z, i * mult))
        w = y
        if deg(y) > 0:
            g = divexact(K, g, y)
        i += 1
    if deg(g) > 0:
        _sqf_rec(K, pth_root(K, g), mult * K.fq.p, out)


def distinct_degree(K, f):
    x = x_power(K, 1)
    h = list(x)
    d = 0
    size = K.size
    while deg(f) > 0:
        d += 1
        if 2 * d > deg(f):
            yield f, deg(f)
            return
        h = pow_mod(K, h, size, f)
        g = gcd(K, sub(K, h, x), f)
        if deg(g) > 0:
            yield g, d
            f = divexact(K, f, g)
            h = mod(K, h, f)


def equal_degree(K, f, d, rng):
    n = deg(f)
    if n == d:
        return [monic(K, f)]
    size = K.size
    while True:
        h = trim(K, [K.sample(rng) for _ in range(n)])
        if deg(h) < 1:
            continue
        if K.fq.p == 2:
            m = K.fq.e * K.n * d
            t = list(h)
            acc = list(h)
            for _ in range(m - 1):
                t = mod(K, mul(K, t, t), f)
                acc = add(K, acc, t)
            g = gcd(K, acc, f)
        else:
            ex = (size**d - 1) // 2
            g = gcd(K, sub(K, pow_mod(K, h, ex, f), [K.one]), f)
        if 0 < deg(g) < n:
            left = equal_degree(K, g, d, rng)
            right = equal_degree(K, divexact(K, f, g), d, rng)
            return left + right


def factor(K, f):
    """Monic irreducible factors with multiplicities, canonically sorted."""
    if is_zero(f):
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(0xD21F)
    out = []
    for g, m in squarefree_decomposition(K, f):
        for h, d in distinct_degree(K, g):
            for irr in equal_degree(K, h, d, rng):
                out.append((irr, m))
    out.sort(key=lambda gm: (deg(gm[0]), [c.sort_key() for c in gm[0]], gm[1]))
    return out


def roots(K, f):
    """Roots in the finite field K, each once, canonically sorted."""
    if is_zero(f):
        raise ValueError("zero polynomial")
    # strip x^k
    k = 0
    while k < len(f) and f[k] == K.zero:
        k += 1
    out = [K.zero] if k > 0 else []
    f = f[k:]
    if deg(f) >= 1:
        x = x_power(K, 1)
        xq = pow_mod(K, x, K.size, f)
        g = gcd(K, sub(K, xq, x), f)
        if deg(g) >= 1:
            rng = random.Random(0xD21F)
            for lin in equal_degree(K, g, 1, rng):
                out.append(-lin[0])
    return sorted(set(out), key=lambda r: r.sort_key())


def is_irreducible(K, f):
    f = monic(K, f)
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    facs = factor(K, f)
    return len(facs) == 1 and facs[0][1] == 1


# -- resultants and interpolation ---------------------------------------------


def resultant(K, a, b):
    """res(a, b) via the Euclidean remainder sequence."""
    if is_zero(a) or is_zero(b):
        return K.zero
    s = K.one
    minus_one = -K.one
    a = list(a)
    b = list(b)
    while deg(b) > 0:
        n, m = deg(a), deg(b)
        r = mod(K, a, b)
        if is_zero(r):
            return K.zero
        sign = K.one if (n * m) % 2 == 0 else minus_one
        s = s * sign * (b[-1] ** (n - deg(r)))
        a, b = b, r
    return s * (b[0] ** deg(a))


def interpolate(K, points):
    """Lagrange interpolation through [(x_i, y_i)] with distinct x_i."""
    out = []
    for i, (xi, yi) in enumerate(points):
        li = [K.one]
        denom = K.one
        for j, (xj, _) in enumerate(points):
            if i != j:
                li = mul(K, li, [-xj, K.one])
                denom = denom * (xi - xj)
        out = add(K, out, scal(K, yi / denom, li))
    return out
