"""Pure-Python kernels: dense polynomial and truncated power-series arithmetic.

Polynomials are lists of packed field elements, constant term first, with no
trailing zeros.  Series are lists of a fixed length ``n`` (coefficients of
u^0 .. u^(n-1)).  Every function takes the field context built by
:func:`make_ctx` as first argument; the compiled backend mirrors this module
name for name.
"""

from __future__ import annotations

BACKEND = "python"


class Ctx:
    __slots__ = ("p", "q", "prime", "add", "sub", "neg", "mul", "inv", "mul_tab")

    def __init__(self, p, q, exp, log, zech):
        self.p = p
        self.q = q
        self.prime = p == q
        self.mul_tab = None
        if self.prime:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: -a % p
            self.mul = lambda a, b: a * b % p
            self.inv = lambda a: pow(a, -1, p)
            return
        n = q - 1
        if p == 2:
            self.add = self.sub = lambda a, b: a ^ b
            self.neg = lambda a: a
        else:
            half = n // 2

            def add(a, b):
                if a == 0:
                    return b
                if b == 0:
                    return a
                la = log[a]
                z = zech[(log[b] - la) % n]
                return 0 if z < 0 else exp[(la + z) % n]

            def neg(a):
                return exp[(log[a] + half) % n] if a else 0

            self.add = add
            self.neg = neg
            self.sub = lambda a, b: add(a, neg(b))

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp[(log[a] + log[b]) % n]

        def inv(a):
            if a == 0:
                raise ZeroDivisionError("inverse of 0 in F_q")
            return exp[-log[a] % n]

        self.mul = mul
        self.inv = inv
        if q <= 64:
            self.mul_tab = [[mul(a, b) for b in range(q)] for a in range(q)]


def make_ctx(p, q, exp=None, log=None, zech=None):
    return Ctx(p, q, exp, log, zech)


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(ctx, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = ctx.add
    for i, y in enumerate(b):
        out[i] = add(out[i], y)
    return _trim(out)


def poly_sub(ctx, a, b):
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    sub = ctx.sub
    for i, y in enumerate(b):
        out[i] = sub(out[i], y)
    return _trim(out)


def poly_scale(ctx, a, c):
    if c == 0:
        return []
    mul = ctx.mul
    return [mul(x, c) for x in a]


def poly_mul(ctx, a, b):
    if not a or not b:
        return []
    if ctx.prime:
        p = ctx.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b, i):
                    out[j] += x * y
        return _trim([c % p for c in out])
    return _mul_generic(ctx, a, b, len(a) + len(b) - 1)


def _mul_generic(ctx, a, b, n):
    out = [0] * n
    add = ctx.add
    tab = ctx.mul_tab
    if tab is not None:
        for i, x in enumerate(a):
            if x and i < n:
                row = tab[x]
                for j in range(min(len(b), n - i)):
                    y = b[j]
                    if y:
                        out[i + j] = add(out[i + j], row[y])
    else:
        mul = ctx.mul
        for i, x in enumerate(a):
            if x and i < n:
                for j in range(min(len(b), n - i)):
                    y = b[j]
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
    return out


def poly_divmod(ctx, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    r = list(a)
    quo = [0] * (len(a) - db)
    inv = ctx.inv(b[-1])
    if ctx.prime:
        p = ctx.p
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] * inv % p
            if c:
                quo[i - db] = c
                off = i - db
                for j in range(db):
                    r[off + j] = (r[off + j] - c * b[j]) % p
                r[i] = 0
        return _trim(quo), _trim(r[:db])
    mul, sub = ctx.mul, ctx.sub
    for i in range(len(r) - 1, db - 1, -1):
        c = mul(r[i], inv)
        if c:
            quo[i - db] = c
            off = i - db
            for j in range(db):
                if b[j]:
                    r[off + j] = sub(r[off + j], mul(c, b[j]))
            r[i] = 0
    return _trim(quo), _trim(r[:db])


def poly_rem(ctx, a, b):
    return poly_divmod(ctx, a, b)[1]


def poly_mulmod(ctx, a, b, m):
    return poly_rem(ctx, poly_mul(ctx, a, b), m)


def poly_powmod(ctx, a, n, m):
    result = poly_rem(ctx, [1], m)
    base = poly_rem(ctx, a, m)
    while n:
        if n & 1:
            result = poly_mulmod(ctx, result, base, m)
        n >>= 1
        if n:
            base = poly_mulmod(ctx, base, base, m)
    return result


def poly_monic(ctx, a):
    if not a or a[-1] == 1:
        return list(a)
    return poly_scale(ctx, a, ctx.inv(a[-1]))


def poly_gcd(ctx, a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_rem(ctx, a, b)
    return poly_monic(ctx, a)


def _frobenius(ctx, h, f):
    """h^q mod f, using h(T)^q = sum h_i T^(iq) for h over F_q."""
    q = ctx.q
    d = len(f) - 1
    if q * (d - 1) <= d * d * q.bit_length():
        spread = [0] * ((len(h) - 1) * q + 1) if h else []
        for i, c in enumerate(h):
            spread[i * q] = c
        return poly_rem(ctx, spread, f)
    return poly_powmod(ctx, h, q, f)


def _prime_divisors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(ctx, f):
    """Rabin's test on a polynomial of degree >= 1."""
    d = len(f) - 1
    if d < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if d == 1:
        return True
    if f[0] == 0:
        return False
    if ctx.q == 2:
        return _gf2_is_irreducible(f)
    f = poly_monic(ctx, f)
    needed = {d // r for r in _prime_divisors(d)}
    x = [0, 1]
    h = x
    for i in range(1, d + 1):
        h = _frobenius(ctx, h, f)
        if i in needed:
            g = poly_gcd(ctx, poly_sub(ctx, h, x), f)
            if len(g) != 1:
                return False
    return h == x


_SPREAD = [sum(((b >> i) & 1) << (2 * i) for i in range(8)) for b in range(256)]


def _gf2_square(a):
    out, shift = 0, 0
    while a:
        out |= _SPREAD[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return out


def _gf2_rem(a, f, df):
    while True:
        da = a.bit_length() - 1
        if da < df:
            return a
        a ^= f << (da - df)


def _gf2_gcd(a, b):
    while b:
        a, b = b, _gf2_rem(a, b, b.bit_length() - 1)
    return a


def _gf2_is_irreducible(f):
    fi = 0
    for c in reversed(f):
        fi = (fi << 1) | c
    d = len(f) - 1
    needed = {d // r for r in _prime_divisors(d)}
    h = 2
    for i in range(1, d + 1):
        h = _gf2_rem(_gf2_square(h), fi, d)
        if i in needed and _gf2_gcd(fi, h ^ 2) != 1:
            return False
    return h == 2


def series_mul(ctx, a, b, n):
    """First n coefficients of a*b."""
    if ctx.prime:
        p = ctx.p
        out = [0] * n
        lb = len(b)
        for i in range(min(len(a), n)):
            x = a[i]
            if x:
                for j in range(min(lb, n - i)):
                    out[i + j] += x * b[j]
        return [c % p for c in out]
    return _mul_generic(ctx, a, b, n)


def series_div(ctx, a, b, n):
    """First n coefficients of a/b; requires b[0] != 0."""
    b0 = b[0] if b else 0
    if b0 == 0:
        raise ZeroDivisionError("series division by a non-unit")
    inv = ctx.inv(b0)
    lb = len(b)
    out = [0] * n
    if ctx.prime:
        p = ctx.p
        for i in range(n):
            acc = a[i] if i < len(a) else 0
            for j in range(1, min(lb, i + 1)):
                acc -= b[j] * out[i - j]
            out[i] = acc * inv % p
        return out
    mul, sub = ctx.mul, ctx.sub
    for i in range(n):
        acc = a[i] if i < len(a) else 0
        for j in range(1, min(lb, i + 1)):
            if b[j] and out[i - j]:
                acc = sub(acc, mul(b[j], out[i - j]))
        out[i] = mul(acc, inv)
    return out


def series_pow(ctx, a, k, n):
    """First n coefficients of a^k, k >= 0."""
    result = [1] + [0] * (n - 1) if n else []
    base = list(a[:n]) + [0] * (n - len(a))
    while k:
        if k & 1:
            result = series_mul(ctx, result, base, n)
        k >>= 1
        if k:
            base = series_mul(ctx, base, base, n)
    return result
