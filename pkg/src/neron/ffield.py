"""Finite field towers GF(p^n) with deterministic moduli and embeddings.

Fields are represented in a polynomial basis over the prime field.  The
modulus of GF(p^n) is the lexicographically least monic irreducible of
degree n (minimal integer encoding sum a_i * p^i of the non-leading
coefficients), so every field in a run is pinned deterministically.
Embeddings between tower levels send the small generator to the least
root of its modulus in the big field.

Elements are immutable coefficient tuples; the integer encoding
sum c_i * p^i doubles as a canonical ordering for deterministic output.
"""

import random
from fractions import Fraction

_FIELD_CACHE = {}
_EMBED_CACHE = {}


def _vec_trim(v):
    i = len(v)
    while i > 0 and v[i - 1] == 0:
        i -= 1
    return v[:i]


class FFElem:
    """An element of GF(p^n), a fixed-length coefficient vector mod p."""

    __slots__ = ("field", "vec")

    def __init__(self, field, vec):
        self.field = field
        self.vec = vec

    def encode(self):
        """Canonical integer encoding sum c_i p^i."""
        p = self.field.p
        n = 0
        for c in reversed(self.vec):
            n = n * p + c
        return n

    def is_zero(self):
        return all(c == 0 for c in self.vec)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, FFElem)
            and self.field is other.field
            and self.vec == other.vec
        )

    def __hash__(self):
        return hash((id(self.field), self.vec))

    def __lt__(self, other):
        return self.encode() < other.encode()

    def __add__(self, other):
        return self.field.add(self, other)

    def __sub__(self, other):
        return self.field.sub(self, other)

    def __mul__(self, other):
        return self.field.mul(self, other)

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, k):
        return self.field.power(self, k)

    def inverse(self):
        return self.field.inv(self)

    def __repr__(self):
        return "%s(%d)" % (self.field, self.encode())


class FF:
    """The finite field GF(p^n).  Use ``ffield(p, n)`` to construct."""

    def __init__(self, p, n):
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = _least_irreducible(p, n)
        self.zero = FFElem(self, (0,) * n)
        self.one = FFElem(self, (1,) + (0,) * (n - 1))
        if n > 1:
            self.gen = FFElem(self, (0, 1) + (0,) * (n - 2))
        else:
            self.gen = self.one

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.n) if self.n > 1 else "GF(%d)" % self.p

    def elem(self, vec):
        vec = tuple(c % self.p for c in vec)
        if len(vec) < self.n:
            vec = vec + (0,) * (self.n - len(vec))
        elif len(vec) > self.n:
            vec = tuple(_pp_rem(list(vec), self.modulus, self.p))
            vec = vec + (0,) * (self.n - len(vec))
        return FFElem(self, vec)

    def from_int(self, k):
        """Prime-field constant k mod p."""
        return FFElem(self, (k % self.p,) + (0,) * (self.n - 1))

    def decode(self, code):
        """Inverse of FFElem.encode()."""
        vec = []
        for _ in range(self.n):
            code, r = divmod(code, self.p)
            vec.append(r)
        return FFElem(self, tuple(vec))

    def elements(self):
        """All elements in canonical (encoding) order."""
        for code in range(self.order):
            yield self.decode(code)

    def add(self, a, b):
        p = self.p
        return FFElem(self, tuple((x + y) % p for x, y in zip(a.vec, b.vec)))

    def sub(self, a, b):
        p = self.p
        return FFElem(self, tuple((x - y) % p for x, y in zip(a.vec, b.vec)))

    def neg(self, a):
        p = self.p
        return FFElem(self, tuple((-x) % p for x in a.vec))

    def mul(self, a, b):
        prod = _pp_mulmod(list(a.vec), list(b.vec), self.modulus, self.p)
        return FFElem(self, tuple(prod) + (0,) * (self.n - len(prod)))

    def inv(self, a):
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero in %r" % self)
        inv = _pp_invmod(list(a.vec), self.modulus, self.p)
        return FFElem(self, tuple(inv) + (0,) * (self.n - len(inv)))

    def power(self, a, k):
        if k < 0:
            return self.power(self.inv(a), -k)
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frobenius(self, a, times=1):
        """a^(p^times)."""
        if a.is_zero():
            return a
        return self.power(a, pow(self.p, times, self.order - 1))

    def trace_to_prime(self, a):
        """Trace down to GF(p), returned as an int in [0, p)."""
        acc = a
        frob = a
        for _ in range(self.n - 1):
            frob = self.power(frob, self.p)
            acc = self.add(acc, frob)
        return acc.vec[0]


def ffield(p, n):
    """The field GF(p^n); instances are cached and identity-comparable."""
    key = (p, n)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FF(p, n)
        _FIELD_CACHE[key] = field
    return field


def embed(small, big):
    """The embedding GF(p^a) -> GF(p^b) (a | b) as a callable.

    Deterministic: the small generator goes to the least root (canonical
    encoding order) of the small modulus inside the big field.
    """
    if small is big:
        return lambda x: x
    if small.p != big.p or big.n % small.n != 0:
        raise ValueError("no embedding %r -> %r" % (small, big))
    key = (small.p, small.n, big.n)
    image = _EMBED_CACHE.get(key)
    if image is None:
        if small.n == 1:
            image = big.one
        else:
            mod_in_big = [big.from_int(c) for c in small.modulus]
            rs = roots(big, mod_in_big)
            image = min(rs, key=lambda r: r.encode())
        _EMBED_CACHE[key] = image

    def phi(x, image=image, big=big, small=small):
        acc = big.zero
        for c in reversed(x.vec):
            acc = big.add(big.mul(acc, image), big.from_int(c))
        return acc

    return phi


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over the prime field (int lists, low first)

def _pp_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f

def _pp_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pp_trim(out)

def _pp_rem(f, m, p):
    f = _pp_trim(list(f))
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    while len(f) - 1 >= dm:
        c = (f[-1] * lead_inv) % p
        shift = len(f) - 1 - dm
        for i, mc in enumerate(m):
            f[shift + i] = (f[shift + i] - c * mc) % p
        _pp_trim(f)
    return f

def _pp_mulmod(f, g, m, p):
    return _pp_rem(_pp_mul(f, g, p), m, p)

def _pp_powmod(f, k, m, p):
    result = [1]
    base = _pp_rem(list(f), m, p)
    while k:
        if k & 1:
            result = _pp_mulmod(result, base, m, p)
        base = _pp_mulmod(base, base, m, p)
        k >>= 1
    return result

def _pp_gcd(f, g, p):
    f, g = _pp_trim(list(f)), _pp_trim(list(g))
    while g:
        f, g = g, _pp_rem(f, [(c * pow(g[-1], -1, p)) % p for c in g], p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [(c * inv) % p for c in f]
    return f

def _pp_sub(f, g, p):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return _pp_trim([(a - b) % p for a, b in zip(f, g)])

def _pp_divmod(f, g, p):
    f = _pp_trim(list(f))
    g = _pp_trim(list(g))
    inv = pow(g[-1], -1, p)
    q = [0] * max(0, len(f) - len(g) + 1)
    while len(f) >= len(g) and f:
        c = (f[-1] * inv) % p
        shift = len(f) - len(g)
        q[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _pp_trim(f)
    return _pp_trim(q), f

def _pp_invmod(f, m, p):
    # extended Euclid in GF(p)[x]
    r0, r1 = _pp_trim(list(m)), _pp_trim(list(f))
    t0, t1 = [], [1]
    while r1:
        q, r = _pp_divmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _pp_sub(t0, _pp_mul(q, t1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible")
    inv = pow(r0[0], -1, p)
    return _pp_trim([(c * inv) % p for c in t0])

def _is_irreducible(f, p):
    n = len(f) - 1
    x = [0, 1]
    xq = _pp_powmod(x, p**n, f, p)
    if _pp_trim([(a - b) % p for a, b in zip(xq + [0, 0], x + [0] * len(xq))]):
        return False
    for ell in _prime_divisors(n):
        xe = _pp_powmod(x, p ** (n // ell), f, p)
        diff = _pp_trim([(a - b) % p for a, b in
                         zip(xe + [0, 0], x + [0] * len(xe))])
        if len(_pp_gcd(diff, f, p)) != 1:
            return False
    return True

def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out

def _least_irreducible(p, n):
    """Monic irreducible of degree n over GF(p) with least coefficient encoding."""
    if n == 1:
        return (0, 1)
    for code in range(p**n):
        low = []
        c = code
        for _ in range(n):
            c, r = divmod(c, p)
            low.append(r)
        f = low + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError("no irreducible of degree %d over GF(%d)" % (n, p))


# ---------------------------------------------------------------------------
# dense polynomial algebra over an FF field (lists of FFElem, low first)

def fp_trim(f):
    while f and f[-1].is_zero():
        f.pop()
    return f

def fp_is_zero(f):
    return not fp_trim(list(f))

def fp_degree(f):
    return len(fp_trim(list(f))) - 1

def fp_add(field, f, g):
    n = max(len(f), len(g))
    f = list(f) + [field.zero] * (n - len(f))
    g = list(g) + [field.zero] * (n - len(g))
    return fp_trim([a + b for a, b in zip(f, g)])

def fp_sub(field, f, g):
    n = max(len(f), len(g))
    f = list(f) + [field.zero] * (n - len(f))
    g = list(g) + [field.zero] * (n - len(g))
    return fp_trim([a - b for a, b in zip(f, g)])

def fp_scale(field, f, c):
    return fp_trim([a * c for a in f])

def fp_mul(field, f, g):
    f = fp_trim(list(f))
    g = fp_trim(list(g))
    if not f or not g:
        return []
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a.is_zero():
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    return fp_trim(out)

def fp_divmod(field, f, g):
    f = fp_trim(list(f))
    g = fp_trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = g[-1].inverse()
    q = [field.zero] * max(0, len(f) - len(g) + 1)
    while len(f) >= len(g) and f:
        c = f[-1] * inv
        shift = len(f) - len(g)
        q[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] = f[shift + i] - c * gc
        fp_trim(f)
    return fp_trim(q), f

def fp_rem(field, f, g):
    return fp_divmod(field, f, g)[1]

def fp_gcd(field, f, g):
    f = fp_trim(list(f))
    g = fp_trim(list(g))
    while g:
        f, g = g, fp_rem(field, f, g)
    if f:
        inv = f[-1].inverse()
        f = [c * inv for c in f]
    return f

def fp_monic(field, f):
    f = fp_trim(list(f))
    if not f:
        return f
    inv = f[-1].inverse()
    return [c * inv for c in f]

def fp_deriv(field, f):
    return fp_trim([field.from_int(i) * c for i, c in enumerate(f)][1:])

def fp_eval(field, f, x):
    acc = field.zero
    for c in reversed(f):
        acc = acc * x + c
    return acc

def fp_powmod(field, f, k, m):
    result = [field.one]
    base = fp_rem(field, f, m)
    while k:
        if k & 1:
            result = fp_rem(field, fp_mul(field, result, base), m)
        base = fp_rem(field, fp_mul(field, base, base), m)
        k >>= 1
    return result

def fp_pth_root(field, f):
    """For f with zero derivative, the g with g(x)^p = f(x^p) undone: f = h(x^p) -> h with p-th-rooted coefficients."""
    p = field.p
    out = []
    for i in range(0, len(f), p):
        c = f[i]
        # p-th root in GF(p^n): Frobenius is bijective, inverse is ^(p^(n-1))
        out.append(field.power(c, p ** (field.n - 1)) if c else c)
    return out


def fp_squarefree_part(field, f):
    """Monic squarefree part of f (full radical, char-p aware)."""
    f = fp_monic(field, f)
    if len(f) <= 1:
        return f
    d = fp_deriv(field, f)
    if not d:
        return fp_squarefree_part(field, fp_pth_root(field, f))
    g = fp_gcd(field, f, d)
    part = fp_divmod(field, f, g)[0]
    # g may still hide p-th power content
    if len(g) > 1:
        rad_g = fp_squarefree_part(field, g)
        extra = fp_divmod(field, rad_g, fp_gcd(field, rad_g, part))[0]
        part = fp_mul(field, part, extra)
    return fp_monic(field, part)


def _fp_seed(field, f):
    data = (field.p, field.n) + tuple(c.encode() for c in f)
    return hash(data) & 0x7FFFFFFF


def fp_factor(field, f):
    """Factor monic f over GF(p^n): list of (irreducible, multiplicity).

    Deterministic: the equal-degree stage uses an RNG seeded from the
    input encoding.  Output sorted by (degree, coefficient encodings).
    """
    f = fp_monic(field, f)
    if len(f) <= 1:
        return []
    out = []
    for irr in _fp_factor_squarefree(field, fp_squarefree_part(field, f)):
        mult = 0
        g = f
        while True:
            q, r = fp_divmod(field, g, irr)
            if r:
                break
            g = q
            mult += 1
        out.append((irr, mult))
    out.sort(key=lambda t: (len(t[0]), tuple(c.encode() for c in t[0])))
    return out


def _fp_factor_squarefree(field, f):
    f = fp_monic(field, f)
    if len(f) <= 1:
        return []
    if len(f) == 2:
        return [f]
    q = field.order
    out = []
    # distinct-degree
    h = [field.zero, field.one]
    v = list(f)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = fp_powmod(field, h, q, v)
        g = fp_gcd(field, fp_sub(field, h, [field.zero, field.one]), v)
        if len(g) > 1:
            out.extend(_fp_split_equal_degree(field, g, d))
            v = fp_divmod(field, v, g)[0]
            h = fp_rem(field, h, v)
    if len(v) > 1:
        out.append(fp_monic(field, v))
    return out


def _fp_split_equal_degree(field, f, d):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    f = fp_monic(field, f)
    n = len(f) - 1
    if n == d:
        return [f]
    rng = random.Random(_fp_seed(field, f) ^ d)
    q = field.order
    while True:
        g = [field.decode(rng.randrange(q)) for _ in range(n)]
        g = fp_trim(g)
        if fp_degree(g) < 1:
            continue
        if field.p == 2:
            # trace map over GF(2): sum g^(2^i), i < log2(q^d)
            bits = field.n * d
            t = list(g)
            acc = list(g)
            for _ in range(bits - 1):
                t = fp_rem(field, fp_mul(field, t, t), f)
                acc = fp_add(field, acc, t)
            cand = acc
        else:
            e = (q**d - 1) // 2
            cand = fp_sub(field, fp_powmod(field, g, e, f), [field.one])
        w = fp_gcd(field, cand, f)
        if 0 < fp_degree(w) < n:
            return (_fp_split_equal_degree(field, w, d)
                    + _fp_split_equal_degree(field, fp_divmod(field, f, w)[0], d))


def roots(field, f):
    """All roots of f in the field, in canonical order."""
    f = fp_trim(list(f))
    if not f:
        raise ValueError("zero polynomial")
    out = []
    for irr, _mult in fp_factor(field, f):
        if len(irr) == 2:
            out.append(-irr[0])
    return sorted(out, key=lambda r: r.encode())
