# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same API and results as ``fqsums._pykernels``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

BACKEND = "cython"

ctypedef long long i64


cdef class Ctx:
    cdef public i64 p, q
    cdef public bint prime
    cdef int kind          # 0 prime field, 1 char-2 extension, 2 odd extension
    cdef i64 n, half
    cdef i64* exp
    cdef i64* log
    cdef i64* zech

    def __cinit__(self, i64 p, i64 q, exp=None, log=None, zech=None):
        cdef Py_ssize_t i
        self.p = p
        self.q = q
        self.prime = p == q
        self.n = q - 1
        self.half = (q - 1) // 2
        self.exp = NULL
        self.log = NULL
        self.zech = NULL
        if self.prime:
            self.kind = 0
            return
        self.kind = 1 if p == 2 else 2
        self.exp = <i64*> malloc(self.n * sizeof(i64))
        self.log = <i64*> malloc(q * sizeof(i64))
        self.zech = <i64*> malloc(self.n * sizeof(i64))
        if self.exp == NULL or self.log == NULL or self.zech == NULL:
            raise MemoryError()
        for i in range(self.n):
            self.exp[i] = exp[i]
            self.zech[i] = zech[i]
        for i in range(q):
            self.log[i] = log[i]

    def __dealloc__(self):
        free(self.exp)
        free(self.log)
        free(self.zech)


cdef inline i64 fadd(Ctx c, i64 a, i64 b):
    cdef i64 la, d, z, s
    if c.kind == 0:
        a += b
        return a - c.p if a >= c.p else a
    if c.kind == 1:
        return a ^ b
    if a == 0:
        return b
    if b == 0:
        return a
    la = c.log[a]
    d = c.log[b] - la
    if d < 0:
        d += c.n
    z = c.zech[d]
    if z < 0:
        return 0
    s = la + z
    if s >= c.n:
        s -= c.n
    return c.exp[s]


cdef inline i64 fneg(Ctx c, i64 a):
    cdef i64 s
    if a == 0:
        return 0
    if c.kind == 0:
        return c.p - a
    if c.kind == 1:
        return a
    s = c.log[a] + c.half
    if s >= c.n:
        s -= c.n
    return c.exp[s]


cdef inline i64 fsub(Ctx c, i64 a, i64 b):
    return fadd(c, a, fneg(c, b))


cdef inline i64 fmul(Ctx c, i64 a, i64 b):
    cdef i64 s
    if a == 0 or b == 0:
        return 0
    if c.kind == 0:
        return a * b % c.p
    s = c.log[a] + c.log[b]
    if s >= c.n:
        s -= c.n
    return c.exp[s]


cdef i64 finv(Ctx c, i64 a) except -1:
    cdef i64 t, newt, r, newr, quo, tmp
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in F_q")
    if c.kind == 0:
        t, newt, r, newr = 0, 1, c.p, a
        while newr != 0:
            quo = r // newr
            tmp = t - quo * newt
            t, newt = newt, tmp
            tmp = r - quo * newr
            r, newr = newr, tmp
        return t + c.p if t < 0 else t
    if c.log[a] == 0:
        return 1
    return c.exp[c.n - c.log[a]]


def make_ctx(p, q, exp=None, log=None, zech=None):
    return Ctx(p, q, exp, log, zech)


# -- buffer helpers ----------------------------------------------------------

cdef i64* to_buf(list a, Py_ssize_t n) except NULL:
    """Copy list a into a fresh zero-padded buffer of length max(n, 1)."""
    cdef Py_ssize_t i, m = len(a)
    cdef i64* buf = <i64*> malloc((n if n > 0 else 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    memset(buf, 0, (n if n > 0 else 1) * sizeof(i64))
    if m > n:
        m = n
    for i in range(m):
        buf[i] = a[i]
    return buf


cdef list to_list(i64* buf, Py_ssize_t n):
    return [buf[i] for i in range(n)]


cdef inline Py_ssize_t trimmed(i64* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return n


cdef void c_mul(Ctx c, i64* a, Py_ssize_t la, i64* b, Py_ssize_t lb,
                i64* out, Py_ssize_t n):
    """out[0:n] = (a*b)[0:n]"""
    cdef Py_ssize_t i, j, jmax
    cdef i64 x, p = c.p
    cdef unsigned long long* acc
    memset(out, 0, n * sizeof(i64))
    if c.kind == 0:
        acc = <unsigned long long*> out
        for i in range(la if la < n else n):
            x = a[i]
            if x == 0:
                continue
            jmax = lb if lb < n - i else n - i
            for j in range(jmax):
                acc[i + j] += <unsigned long long> (x * b[j])
        for i in range(n):
            out[i] = <i64> (acc[i] % <unsigned long long> p)
        return
    for i in range(la if la < n else n):
        x = a[i]
        if x == 0:
            continue
        jmax = lb if lb < n - i else n - i
        for j in range(jmax):
            if b[j]:
                out[i + j] = fadd(c, out[i + j], fmul(c, x, b[j]))


cdef Py_ssize_t c_rem(Ctx c, i64* r, Py_ssize_t lr, i64* b, Py_ssize_t lb,
                      i64* quo) except -1:
    """Reduce r (length lr) modulo b (trimmed, length lb) in place.

    Writes the quotient to quo when it is not NULL; returns the trimmed
    length of the remainder.
    """
    cdef Py_ssize_t i, j, off, db = lb - 1
    cdef i64 inv, co, p = c.p
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv = finv(c, b[db])
    for i in range(lr - 1, db - 1, -1):
        co = fmul(c, r[i], inv)
        off = i - db
        if quo != NULL:
            quo[off] = co
        if co == 0:
            continue
        if c.kind == 0:
            for j in range(db):
                r[off + j] = (r[off + j] + (p - co) * b[j]) % p
        else:
            for j in range(db):
                if b[j]:
                    r[off + j] = fsub(c, r[off + j], fmul(c, co, b[j]))
        r[i] = 0
    return trimmed(r, lr if lr < db else db)


# -- polynomial API ----------------------------------------------------------

def poly_add(Ctx ctx, list a, list b):
    cdef Py_ssize_t i, n = max(len(a), len(b))
    cdef i64* x = to_buf(a, n)
    cdef i64* y = to_buf(b, n)
    try:
        for i in range(n):
            x[i] = fadd(ctx, x[i], y[i])
        return to_list(x, trimmed(x, n))
    finally:
        free(x)
        free(y)


def poly_sub(Ctx ctx, list a, list b):
    cdef Py_ssize_t i, n = max(len(a), len(b))
    cdef i64* x = to_buf(a, n)
    cdef i64* y = to_buf(b, n)
    try:
        for i in range(n):
            x[i] = fsub(ctx, x[i], y[i])
        return to_list(x, trimmed(x, n))
    finally:
        free(x)
        free(y)


def poly_scale(Ctx ctx, list a, i64 co):
    if co == 0:
        return []
    return [fmul(ctx, x, co) for x in a]


def poly_mul(Ctx ctx, list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), n
    if la == 0 or lb == 0:
        return []
    n = la + lb - 1
    cdef i64* x = to_buf(a, la)
    cdef i64* y = to_buf(b, lb)
    cdef i64* out = <i64*> malloc(n * sizeof(i64))
    try:
        c_mul(ctx, x, la, y, lb, out, n)
        return to_list(out, trimmed(out, n))
    finally:
        free(x)
        free(y)
        free(out)


def poly_divmod(Ctx ctx, list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), lr
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return [], list(a)
    cdef i64* r = to_buf(a, la)
    cdef i64* d = to_buf(b, lb)
    cdef i64* quo = to_buf([], la - lb + 1)
    try:
        lr = c_rem(ctx, r, la, d, lb, quo)
        return to_list(quo, trimmed(quo, la - lb + 1)), to_list(r, lr)
    finally:
        free(r)
        free(d)
        free(quo)


def poly_rem(Ctx ctx, list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), lr
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return list(a)
    cdef i64* r = to_buf(a, la)
    cdef i64* d = to_buf(b, lb)
    try:
        lr = c_rem(ctx, r, la, d, lb, NULL)
        return to_list(r, lr)
    finally:
        free(r)
        free(d)


def poly_mulmod(Ctx ctx, list a, list b, list m):
    return poly_rem(ctx, poly_mul(ctx, a, b), m)


cdef Py_ssize_t c_mulmod(Ctx c, i64* a, Py_ssize_t la, i64* b, Py_ssize_t lb,
                         i64* m, Py_ssize_t lm, i64* scratch, i64* out) except -1:
    """out = a*b mod m; scratch must hold la+lb entries. Returns length."""
    cdef Py_ssize_t n, lr
    if la == 0 or lb == 0:
        return 0
    n = la + lb - 1
    c_mul(c, a, la, b, lb, scratch, n)
    lr = c_rem(c, scratch, n, m, lm, NULL)
    memcpy(out, scratch, lr * sizeof(i64))
    return lr


cdef Py_ssize_t c_powmod(Ctx c, i64* a, Py_ssize_t la, object e, i64* m,
                         Py_ssize_t lm, i64* out) except -1:
    """out = a^e mod m (a already reduced); out needs lm entries."""
    cdef Py_ssize_t d = lm - 1, lres, lbase
    cdef i64* base = <i64*> malloc((lm + 1) * sizeof(i64))
    cdef i64* scratch = <i64*> malloc(2 * (lm + 1) * sizeof(i64))
    if base == NULL or scratch == NULL:
        free(base)
        free(scratch)
        raise MemoryError()
    try:
        memcpy(base, a, la * sizeof(i64))
        lbase = la
        out[0] = 1
        lres = 1
        if d == 0:
            return 0
        while e:
            if e & 1:
                lres = c_mulmod(c, out, lres, base, lbase, m, lm, scratch, out)
            e >>= 1
            if e:
                lbase = c_mulmod(c, base, lbase, base, lbase, m, lm, scratch, base)
        return lres
    finally:
        free(base)
        free(scratch)


def poly_powmod(Ctx ctx, list a, n, list m):
    cdef Py_ssize_t lm = len(m), la, lr
    if lm == 0:
        raise ZeroDivisionError("polynomial division by zero")
    a = poly_rem(ctx, a, m)
    la = len(a)
    cdef i64* x = to_buf(a, lm)
    cdef i64* md = to_buf(m, lm)
    cdef i64* out = to_buf([], lm)
    try:
        lr = c_powmod(ctx, x, la, n, md, lm, out)
        return to_list(out, lr)
    finally:
        free(x)
        free(md)
        free(out)


def poly_monic(Ctx ctx, list a):
    if not a or a[len(a) - 1] == 1:
        return list(a)
    return poly_scale(ctx, a, finv(ctx, a[len(a) - 1]))


cdef Py_ssize_t c_gcd_is_one(Ctx c, i64* a, Py_ssize_t la, i64* b, Py_ssize_t lb) except -1:
    """Destructive Euclid on buffers; returns the degree of gcd (or -1 if zero)."""
    cdef i64* t
    cdef Py_ssize_t lt
    la = trimmed(a, la)
    lb = trimmed(b, lb)
    while lb:
        la = c_rem(c, a, la, b, lb, NULL)
        t = a
        a = b
        b = t
        lt = la
        la = lb
        lb = lt
    return la - 1


def poly_gcd(Ctx ctx, list a, list b):
    a = list(a)
    b = list(b)
    while b and b[len(b) - 1] == 0:
        b.pop()
    while a and a[len(a) - 1] == 0:
        a.pop()
    while b:
        a, b = b, poly_rem(ctx, a, b)
    return poly_monic(ctx, a)


cdef list _prime_divisors(Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(Ctx ctx, list f):
    """Rabin's test on a polynomial of degree >= 1."""
    cdef Py_ssize_t d = len(f) - 1, i, j, lh, lg, ls, lspread
    cdef i64 q = ctx.q, inv
    cdef bint spread
    if d < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if d == 1:
        return True
    if f[0] == 0:
        return False
    f = poly_monic(ctx, f)
    needed = set(d // r for r in _prime_divisors(d))
    spread = q * (d - 1) <= d * d * (<object> q).bit_length()
    lspread = (d - 1) * q + 1 if spread else 2 * d + 2
    cdef i64* fm = to_buf(f, d + 1)
    cdef i64* h = to_buf([0, 1], d + 1)
    cdef i64* s = <i64*> malloc(lspread * sizeof(i64))
    cdef i64* g1 = <i64*> malloc((d + 1) * sizeof(i64))
    cdef i64* g2 = <i64*> malloc((d + 1) * sizeof(i64))
    if s == NULL or g1 == NULL or g2 == NULL:
        free(fm); free(h); free(s); free(g1); free(g2)
        raise MemoryError()
    try:
        lh = 2
        for i in range(1, d + 1):
            if spread:
                memset(s, 0, lspread * sizeof(i64))
                for j in range(lh):
                    s[j * q] = h[j]
                ls = (lh - 1) * q + 1 if lh else 0
                ls = c_rem(ctx, s, ls, fm, d + 1, NULL)
                memset(h, 0, (d + 1) * sizeof(i64))
                memcpy(h, s, ls * sizeof(i64))
                lh = ls
            else:
                lh = c_powmod(ctx, h, lh, q, fm, d + 1, h)
            if i in needed:
                memset(g1, 0, (d + 1) * sizeof(i64))
                memcpy(g1, h, lh * sizeof(i64))
                g1[1] = fsub(ctx, g1[1], 1)
                memcpy(g2, fm, (d + 1) * sizeof(i64))
                lg = c_gcd_is_one(ctx, g2, d + 1, g1, lh if lh > 2 else 2)
                if lg != 0:
                    return False
        return lh == 2 and h[0] == 0 and h[1] == 1
    finally:
        free(fm)
        free(h)
        free(s)
        free(g1)
        free(g2)


# -- series API --------------------------------------------------------------

def series_mul(Ctx ctx, list a, list b, Py_ssize_t n):
    if n <= 0:
        return []
    cdef Py_ssize_t la = min(len(a), n), lb = min(len(b), n)
    cdef i64* x = to_buf(a, la)
    cdef i64* y = to_buf(b, lb)
    cdef i64* out = <i64*> malloc(n * sizeof(i64))
    try:
        c_mul(ctx, x, la, y, lb, out, n)
        return to_list(out, n)
    finally:
        free(x)
        free(y)
        free(out)


def series_div(Ctx ctx, list a, list b, Py_ssize_t n):
    """First n coefficients of a/b; requires b[0] != 0."""
    if not b or b[0] == 0:
        raise ZeroDivisionError("series division by a non-unit")
    if n <= 0:
        return []
    cdef Py_ssize_t lb = min(len(b), n), i, j, jmax
    cdef i64* x = to_buf(a, n)
    cdef i64* y = to_buf(b, lb)
    cdef i64* out = <i64*> malloc(n * sizeof(i64))
    cdef i64 inv = finv(ctx, y[0]), p = ctx.p, acc
    cdef unsigned long long s
    try:
        for i in range(n):
            jmax = lb if lb < i + 1 else i + 1
            if ctx.kind == 0:
                s = 0
                for j in range(1, jmax):
                    s += <unsigned long long> (y[j] * out[i - j])
                acc = (x[i] + p - <i64> (s % <unsigned long long> p)) % p
                out[i] = acc * inv % p
            else:
                acc = x[i]
                for j in range(1, jmax):
                    if y[j] and out[i - j]:
                        acc = fsub(ctx, acc, fmul(ctx, y[j], out[i - j]))
                out[i] = fmul(ctx, acc, inv)
        return to_list(out, n)
    finally:
        free(x)
        free(y)
        free(out)


def series_pow(Ctx ctx, list a, k, Py_ssize_t n):
    """First n coefficients of a^k, k >= 0."""
    if n <= 0:
        return []
    result = [1] + [0] * (n - 1)
    base = list(a[:n]) + [0] * (n - len(a))
    while k:
        if k & 1:
            result = series_mul(ctx, result, base, n)
        k >>= 1
        if k:
            base = series_mul(ctx, base, base, n)
    return result
