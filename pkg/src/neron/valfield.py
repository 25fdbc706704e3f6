"""Exact arithmetic over complete discretely valued fields.

Supports Q_p and F_q((t)) together with their unramified extensions,
tracked as a tower level d over the base.  Elements are pi-adic digit
expansions with coefficients in the residue field of the current level;
exact elements (finite expansions, e.g. integers) are stored exactly,
inexact results carry a certified relative precision capped at the
working precision N.  Polynomials, Newton polygons and residual
polynomials are built on top; they are the substrate every
specialization computation uses.

p-adic mantissas are integer coefficient vectors in the polynomial
basis of the unramified extension (so addition carries), Laurent
mantissas are residue-field digit tuples (no carries).
"""

from fractions import Fraction

from . import ffield
from .errors import (
    PrecisionExhausted, PrecisionCapReached, TowerTooLarge,
)

INF = float("inf")

TOWER_CAP = 24
PRECISION_CAP = 512
DEFAULT_PRECISION = 32

PADIC = "padic"
LAURENT = "laurent"


class BaseField:
    """A complete discretely valued field configuration.

    kind "padic": Q_p, uniformizer p, residue field GF(p^level).
    kind "laurent": F_q((t)) with q = p^base_deg, uniformizer t,
    residue field GF(q^level).
    """

    __slots__ = ("kind", "p", "base_deg", "level", "precision", "residue",
                 "_modulus_int")

    def __init__(self, kind, p, base_deg=1, level=1, precision=DEFAULT_PRECISION):
        if kind not in (PADIC, LAURENT):
            raise ValueError("unknown base field kind %r" % (kind,))
        if kind == PADIC and base_deg != 1:
            raise ValueError("p-adic base has base_deg 1")
        self.kind = kind
        self.p = p
        self.base_deg = base_deg
        self.level = level
        self.precision = precision
        self.residue = ffield.ffield(p, base_deg * level)
        # integer lift of the residue modulus; O = Z_p[x]/(lift) in the p-adic case
        self._modulus_int = tuple(self.residue.modulus)

    @property
    def q(self):
        return self.p**self.base_deg

    @property
    def uniformizer(self):
        return str(self.p) if self.kind == PADIC else "t"

    def __repr__(self):
        if self.kind == PADIC:
            core = "Q_%d" % self.p
        else:
            core = "F_%d((t))" % self.q
        if self.level > 1:
            core += "^ur%d" % self.level
        return "%s[N=%d]" % (core, self.precision)

    def same_tower(self, other):
        return (self.kind == other.kind and self.p == other.p
                and self.base_deg == other.base_deg)

    # -- element constructors ------------------------------------------------

    def zero(self):
        return Elem(self, INF, None, True, 0)

    def from_int(self, k):
        if self.kind == PADIC:
            if k == 0:
                return self.zero()
            v = 0
            while k % self.p == 0:
                k //= self.p
                v += 1
            return Elem(self, v, (k,) + (0,) * (self.residue.n - 1), True, 0)
        # Laurent: a prime-field constant
        c = self.residue.from_int(k)
        if c.is_zero():
            return self.zero()
        return Elem(self, 0, (c,), True, 0)

    def from_fraction(self, fr):
        fr = Fraction(fr)
        return self.from_int(fr.numerator).divide(self.from_int(fr.denominator))

    def from_t_poly(self, coeffs):
        """Laurent only: sum coeffs[j] * t^j with integer coefficients."""
        assert self.kind == LAURENT
        digits = [self.residue.from_int(c) for c in coeffs]
        return self.from_digits(0, digits, exact=True)

    def from_residue(self, r):
        """Exact digit-lift of a residue element."""
        if r.is_zero():
            return self.zero()
        if self.kind == PADIC:
            return Elem(self, 0, tuple(r.vec), True, 0)
        return Elem(self, 0, (r,), True, 0)

    def from_digits(self, val, digits, exact):
        """Element pi^val * (digits[0] + digits[1] pi + ...), digits FFElems."""
        rel = len(digits)
        if self.kind == PADIC:
            unit = [0] * self.residue.n
            for j, d in enumerate(digits):
                for i, c in enumerate(d.vec):
                    unit[i] += c * self.p**j
            mant = tuple(unit)
        else:
            mant = tuple(digits)
        if not exact and rel == 0:
            return Elem(self, val, None, False, 0)
        return Elem(self, val, mant, exact, 0 if exact else rel)._normalized()

    def pi(self, k=1):
        if self.kind == PADIC:
            return Elem(self, k, (1,) + (0,) * (self.residue.n - 1), True, 0)
        return Elem(self, k, (self.residue.one,), True, 0)

    def bigo(self, bound):
        return Elem(self, bound, None, False, 0)

    def gen(self):
        """Exact lift of the residue-field generator."""
        return self.from_residue(self.residue.gen)


def extend_unramified(field, m):
    """Move to tower level lcm(level, m); existing data re-embeds by digits."""
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    new_level = _lcm(field.level, m)
    if new_level * field.base_deg > TOWER_CAP:
        raise TowerTooLarge(
            "unramified tower level %d exceeds cap %d" % (new_level, TOWER_CAP))
    if new_level == field.level:
        return field
    return BaseField(field.kind, field.p, field.base_deg, new_level,
                     field.precision)


def escalate_precision(field):
    """Double the working precision, up to the hard cap."""
    if field.precision >= PRECISION_CAP:
        raise PrecisionCapReached("precision cap %d reached" % PRECISION_CAP)
    return BaseField(field.kind, field.p, field.base_deg, field.level,
                     min(2 * field.precision, PRECISION_CAP))


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


class Elem:
    """An element of O_K (or K), as pi^val times a unit mantissa.

    States:
      exact zero      val = INF, mant None, exact True
      exact nonzero   val int, mant full-precision unit, exact True
      inexact         val int, mant known to `rel` digits, exact False
      big-O           val = lower bound, mant None, exact False (rel 0)
    """

    __slots__ = ("field", "val", "mant", "exact", "rel")

    def __init__(self, field, val, mant, exact, rel):
        self.field = field
        self.val = val
        self.mant = mant
        self.exact = exact
        self.rel = rel

    # -- predicates ----------------------------------------------------------

    def is_exact_zero(self):
        return self.exact and self.mant is None

    def is_bigo(self):
        return not self.exact and self.mant is None

    def certified_nonzero(self):
        return self.mant is not None

    def valuation(self):
        if self.is_exact_zero():
            return INF
        if self.is_bigo():
            raise PrecisionExhausted(
                "valuation only bounded below by %s" % self.val, bound=self.val)
        return self.val

    def known_prec(self):
        """Absolute precision: the element is known modulo pi^known_prec."""
        if self.exact:
            return INF
        if self.mant is None:
            return self.val
        return self.val + self.rel

    # -- digit access ----------------------------------------------------------

    def digit(self, j):
        """The j-th digit of the unit mantissa as a residue-field element."""
        if self.mant is None:
            raise PrecisionExhausted("no digits available", bound=self.val)
        if not self.exact and j >= self.rel:
            raise PrecisionExhausted(
                "digit %d beyond certified precision %d" % (j, self.rel),
                bound=self.known_prec())
        R = self.field.residue
        if self.field.kind == PADIC:
            p = self.field.p
            vec = tuple(((c % p**(j + 1)) // p**j) for c in self.mant)
            return ffield.FFElem(R, vec)
        if j >= len(self.mant):
            return R.zero
        return self.mant[j]

    def leading_residue(self):
        return self.digit(0)

    def residue_at(self, k):
        """Residue of self * pi^(-k): digit 0 if val == k, 0 if val > k."""
        if self.is_exact_zero():
            return self.field.residue.zero
        if self.is_bigo():
            if self.val > k:
                return self.field.residue.zero
            raise PrecisionExhausted("residue at level %d uncertified" % k,
                                     bound=self.val)
        if self.val > k:
            return self.field.residue.zero
        if self.val == k:
            return self.digit(0)
        raise ValueError("element has valuation below the requested level")

    def truncate_digits(self, k):
        """Exact lift of the first k digits (the center to depth val + k)."""
        digs = [self.digit(j) for j in range(k)]
        return self.field.from_digits(self.val, digs, exact=True)

    # -- normalization ----------------------------------------------------------

    def _normalized(self):
        """Strip pi-content out of the mantissa into the valuation."""
        if self.mant is None:
            return self
        f = self.field
        if f.kind == PADIC:
            mant = self.mant
            if all(c == 0 for c in mant):
                if self.exact:
                    return f.zero()
                return Elem(f, self.val + self.rel, None, False, 0)
            p = f.p
            shift = 0
            while all(c % p == 0 for c in mant):
                mant = tuple(c // p for c in mant)
                shift += 1
            if not self.exact:
                if shift >= self.rel:
                    return Elem(f, self.val + self.rel, None, False, 0)
                rel = self.rel - shift
                mant = tuple(c % p**rel for c in mant)
                return Elem(f, self.val + shift, mant, False, rel)
            return Elem(f, self.val + shift, mant, True, 0)
        # Laurent
        mant = list(self.mant)
        if self.exact:
            while mant and mant[-1].is_zero():
                mant.pop()
        shift = 0
        while shift < len(mant) and mant[shift].is_zero():
            shift += 1
        if shift == len(mant):
            if self.exact:
                return f.zero()
            return Elem(f, self.val + self.rel, None, False, 0)
        mant = mant[shift:]
        if not self.exact:
            rel = self.rel - shift
            mant = mant[:rel]
            mant += [f.residue.zero] * (rel - len(mant))
            return Elem(f, self.val + shift, tuple(mant), False, rel)
        return Elem(f, self.val + shift, tuple(mant), True, 0)

    def _inexactify(self, rel):
        """Mark as known to `rel` digits only (capped at precision N)."""
        f = self.field
        if self.mant is None:
            return self
        rel = min(rel, f.precision)
        if rel <= 0:
            return Elem(f, self.val, None, False, 0)
        if f.kind == PADIC:
            mant = tuple(c % f.p**rel for c in self.mant)
        else:
            mant = tuple(self.mant[:rel]) + (f.residue.zero,) * max(0, rel - len(self.mant))
        return Elem(f, self.val, mant, False, rel)._normalized()

    def with_absprec(self, m):
        """Truncate to absolute precision m (known modulo pi^m)."""
        if m is INF:
            return self
        if self.is_exact_zero():
            return Elem(self.field, m, None, False, 0)
        if self.mant is None:
            return Elem(self.field, min(self.val, m), None, False, 0)
        if self.val >= m:
            return Elem(self.field, m, None, False, 0)
        return self._inexactify(m - self.val)

    # -- ring operations ----------------------------------------------------------

    def __add__(self, other):
        f = self.field
        assert f is other.field, "mixed-field arithmetic"
        if self.is_exact_zero():
            return other
        if other.is_exact_zero():
            return self
        prec = min(self.known_prec(), other.known_prec())
        if self.is_bigo() or other.is_bigo():
            certified = other if self.is_bigo() else self
            if certified.is_bigo():
                return Elem(f, min(self.val, other.val), None, False, 0)
            return certified.with_absprec(prec)
        v = min(self.val, other.val)
        if f.kind == PADIC:
            p = f.p
            a = tuple(c * p**(self.val - v) for c in self.mant)
            b = tuple(c * p**(other.val - v) for c in other.mant)
            mant = tuple(x + y for x, y in zip(a, b))
        else:
            R = f.residue
            n = max(len(self.mant) + self.val - v, len(other.mant) + other.val - v)
            a = [R.zero] * (self.val - v) + list(self.mant)
            b = [R.zero] * (other.val - v) + list(other.mant)
            a += [R.zero] * (n - len(a))
            b += [R.zero] * (n - len(b))
            mant = tuple(x + y for x, y in zip(a, b))
        out = Elem(f, v, mant, prec is INF, 0)
        if prec is not INF:
            out = out._inexactify(prec - v)
        return out._normalized()

    def __neg__(self):
        if self.mant is None:
            return self
        f = self.field
        if f.kind == PADIC:
            mant = tuple(-c for c in self.mant)
        else:
            mant = tuple(-c for c in self.mant)
        out = Elem(f, self.val, mant, self.exact, self.rel)
        if not self.exact:
            out = out._inexactify(self.rel)
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        assert f is other.field, "mixed-field arithmetic"
        if self.is_exact_zero() or other.is_exact_zero():
            return f.zero()
        if self.is_bigo() or other.is_bigo():
            return Elem(f, self.val + other.val, None, False, 0)
        if f.kind == PADIC:
            mant = _zp_mulmod(self.mant, other.mant, f._modulus_int)
        else:
            R = f.residue
            mant = [R.zero] * (len(self.mant) + len(other.mant) - 1)
            for i, a in enumerate(self.mant):
                if not a.is_zero():
                    for j, b in enumerate(other.mant):
                        mant[i + j] = mant[i + j] + a * b
            mant = tuple(mant)
        exact = self.exact and other.exact
        out = Elem(f, self.val + other.val, mant, exact, 0)
        if not exact:
            rel = min(self.rel if not self.exact else INF,
                      other.rel if not other.exact else INF)
            out = out._inexactify(rel)
        return out._normalized()

    def shift(self, k):
        """Multiply by pi^k."""
        if self.is_exact_zero():
            return self
        return Elem(self.field, self.val + k, self.mant, self.exact, self.rel)

    def unit_inverse(self):
        """Inverse of the unit mantissa; result inexact at precision N
        unless the mantissa is the exact unit 1."""
        f = self.field
        if self.mant is None:
            raise ZeroDivisionError("inverse of an uncertified element")
        target = f.precision if self.exact else min(self.rel, f.precision)
        if f.kind == PADIC:
            if self.exact and self.mant == (1,) + (0,) * (f.residue.n - 1):
                return Elem(f, -self.val, self.mant, True, 0)
            inv = _zp_invmod(self.mant, f._modulus_int, f.p, target)
            return Elem(f, -self.val, inv, False, target)._normalized()
        if self.exact and len(self.mant) == 1 and self.mant[0] == f.residue.one:
            return Elem(f, -self.val, self.mant, True, 0)
        inv = _series_inverse(f, self.mant, target)
        return Elem(f, -self.val, inv, False, target)._normalized()

    def divide(self, other):
        return self * other.unit_inverse()

    def _digit_count(self):
        """Number of stored digits; exact p-adic mantissas must be
        non-negative (canonical digit data) for this to terminate."""
        if self.mant is None:
            return 0
        if self.field.kind == PADIC:
            if not self.exact:
                return self.rel
            m = max(self.mant)
            k = 1
            while self.field.p**k <= m:
                k += 1
            return k
        return len(self.mant)

    def reembed_digits(self, new_field):
        """Re-express the element at a higher tower level.

        Exact for prime-field content (a ring map) and for canonical digit
        data (centers, digit-lifts); exact p-adic mantissas with negative
        coefficients and extension content are not re-embeddable this way.
        """
        f = self.field
        if new_field is f:
            return self
        assert new_field.same_tower(f) and new_field.level % f.level == 0
        if self.mant is None:
            return Elem(new_field, self.val, None, self.exact, 0)
        if f.kind == PADIC and all(c == 0 for c in self.mant[1:]):
            # prime-field content embeds exactly at any level
            mant = (self.mant[0],) + (0,) * (new_field.residue.n - 1)
            return Elem(new_field, self.val, mant, self.exact, self.rel)
        if f.kind == PADIC and self.exact and any(c < 0 for c in self.mant):
            raise ValueError("non-canonical p-adic data cannot move levels")
        phi = ffield.embed(f.residue, new_field.residue)
        k = self.rel if not self.exact else self._digit_count()
        digs = [phi(self.digit(j)) for j in range(k)]
        out = new_field.from_digits(self.val, digs, self.exact)
        if not self.exact and not out.is_bigo():
            out = out._inexactify(self.known_prec() - out.val)
        return out

    def __repr__(self):
        if self.is_exact_zero():
            return "0"
        if self.is_bigo():
            return "O(pi^%s)" % self.val
        k = min(self._digit_count(), 6) if self.exact else min(self.rel, 6)
        digs = ",".join(str(self.digit(j).encode()) for j in range(k))
        tail = "" if self.exact and self._digit_count() <= 6 else ",..."
        return "pi^%d*(%s%s)" % (self.val, digs, tail)


# -- p-adic mantissa arithmetic (integer vectors mod the modulus lift) -------

def _zp_mulmod(a, b, modulus):
    n = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    # reduce by the monic integer lift of the residue modulus
    for i in range(len(out) - 1, n - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(n):
                out[i - n + j] -= c * modulus[j]
    return tuple(out[:n]) + (0,) * (n - len(out))


def _zp_invmod(a, modulus, p, prec):
    """Newton inversion of a unit vector mod (modulus, p^prec)."""
    n = len(modulus) - 1
    R = ffield.ffield(p, n)
    a0 = ffield.FFElem(R, tuple(c % p for c in a))
    z = [c % p for c in a0.inverse().vec]
    z = tuple(z) + (0,) * (n - len(z))
    k = 1
    while k < prec:
        k = min(2 * k, prec)
        pk = p**k
        am = tuple(c % pk for c in a)
        az = _zp_mulmod(am, z, modulus)
        two_minus = tuple((-c) % pk for c in az)
        two_minus = (two_minus[0] + 2,) + two_minus[1:]
        z = tuple(c % pk for c in _zp_mulmod(z, two_minus, modulus))
    return z


def _series_inverse(field, digits, prec):
    """Inverse of a Laurent unit digit sequence to `prec` digits."""
    R = field.residue
    d0inv = digits[0].inverse()
    out = [d0inv]
    for k in range(1, prec):
        acc = R.zero
        for j in range(1, k + 1):
            dj = digits[j] if j < len(digits) else R.zero
            acc = acc + dj * out[k - j]
        out.append(-d0inv * acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# polynomials over a BaseField


class Poly:
    """Dense polynomial with Elem coefficients, low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_exact_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(c) for c in ints])

    @classmethod
    def from_t_polys(cls, field, coeff_lists):
        """Laurent: each coefficient is a list of integer t-coefficients."""
        return cls(field, [field.from_t_poly(c) for c in coeff_lists])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def evaluate(self, x):
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        f = self.field
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(c * f.from_int(i))
        return Poly(f, out)

    def recenter(self, a):
        """f(a + y) by in-place Taylor shift; exact when inputs are exact."""
        cs = list(self.coeffs)
        n = len(cs)
        for j in range(n - 1):
            for i in range(n - 2, j - 1, -1):
                cs[i] = cs[i] + a * cs[i + 1]
        return Poly(self.field, cs)

    def scale_arg_pi(self, k):
        """f(pi^k * y)."""
        return Poly(self.field,
                    [c.shift(k * i) for i, c in enumerate(self.coeffs)])

    def reciprocal(self):
        """x^deg * f(1/x)."""
        return Poly(self.field, list(reversed(self.coeffs)))

    def shift_out_pi(self):
        """Divide by the pi-content: returns (primitive poly, content valuation)."""
        vmin = None
        for c in self.coeffs:
            if c.is_exact_zero():
                continue
            v = c.val  # for big-O this is the lower bound: safe as a bound
            vmin = v if vmin is None else min(vmin, v)
        if vmin is None or vmin == 0:
            return self, 0
        return Poly(self.field,
                    [c.shift(-vmin) if not c.is_exact_zero() else c
                     for c in self.coeffs]), vmin

    def mul(self, other):
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly(f, [])
        out = [f.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_exact_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(f, out)

    def add(self, other):
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [f.zero()] * (n - len(self.coeffs))
        b = list(other.coeffs) + [f.zero()] * (n - len(other.coeffs))
        return Poly(f, [x + y for x, y in zip(a, b)])

    def neg(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def monic(self):
        """Divide by the leading coefficient (inexact unless trivial)."""
        inv = self.lc().unit_inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def reembed_digits(self, new_field):
        return Poly(new_field,
                    [c.reembed_digits(new_field) for c in self.coeffs])

    def residue_poly(self):
        """Reduction mod pi of an integral polynomial, as FFElem list."""
        return [c.residue_at(0) for c in self.coeffs]

    def __repr__(self):
        return "Poly(%s)" % (", ".join(repr(c) for c in self.coeffs))


class NewtonPolygon:
    """Lower convex hull of {(i, v(c_i))}: segments (slope, length).

    Slopes ascend left to right; root valuations are the negated slopes
    with multiplicities equal to the lengths.
    """

    __slots__ = ("vertices", "segments", "support_start")

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        segs = []
        for (i0, v0), (i1, v1) in zip(vertices, vertices[1:]):
            segs.append((Fraction(v1 - v0, i1 - i0), i1 - i0))
        self.segments = tuple(segs)
        self.support_start = vertices[0][0]

    def slopes(self):
        return [s for s, _l in self.segments]

    def root_valuations(self):
        """(valuation, multiplicity) pairs, descending valuation."""
        return [(-s, l) for s, l in self.segments]

    def value_at(self, i):
        """Hull ordinate at abscissa i (within the support)."""
        for (i0, v0), (i1, v1) in zip(self.vertices, self.vertices[1:]):
            if i0 <= i <= i1:
                return Fraction(v0) + Fraction(v1 - v0, i1 - i0) * (i - i0)
        raise ValueError("abscissa outside the polygon support")

    def __repr__(self):
        return "NewtonPolygon(%s)" % (list(self.segments),)


def newton_polygon(f):
    """Newton polygon of f with certified coefficient valuations."""
    pts = []
    bigos = []
    for i, c in enumerate(f.coeffs):
        if c.is_exact_zero():
            continue
        if c.is_bigo():
            bigos.append((i, c.val))
        else:
            pts.append((i, c.val))
    if not pts:
        raise PrecisionExhausted("no certified nonzero coefficient")
    if f.coeffs and f.coeffs[-1].is_bigo():
        raise PrecisionExhausted("leading coefficient not certified",
                                 bound=f.coeffs[-1].val)
    hull = _lower_hull(pts)
    np = NewtonPolygon(hull)
    for i, bound in bigos:
        if i < np.support_start:
            raise PrecisionExhausted(
                "trailing coefficient %d uncertified" % i, bound=bound)
        if Fraction(bound) < np.value_at(i):
            raise PrecisionExhausted(
                "coefficient %d needs valuation certified beyond %d" % (i, bound),
                bound=bound)
    return np


def _lower_hull(pts):
    pts = sorted(pts)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # keep strictly convex: drop (x1,y1) if pt is not above the chord
            if (y1 - y0) * (pt[0] - x0) >= (pt[1] - y0) * (x1 - x0):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def residual_polynomial(f, slope):
    """The residue-field polynomial attached to a polygon segment.

    Its roots are the leading residues of the roots of f on that segment;
    degree = segment length / denominator(slope).
    """
    np = newton_polygon(f)
    slope = Fraction(slope)
    for (i0, v0), (i1, v1), (s, _l) in zip(np.vertices, np.vertices[1:], np.segments):
        if s == slope:
            break
    else:
        raise ValueError("%s is not a segment slope of the polygon" % slope)
    e = slope.denominator
    h = int(-slope * e)  # integer drop per e abscissa steps
    out = []
    for j in range((i1 - i0) // e + 1):
        i = i0 + j * e
        line = v0 - j * h
        out.append(f.coeffs[i].residue_at(line))
    return out


# ---------------------------------------------------------------------------
# lifting utilities


def hensel_lift_pair(f, g_res):
    """Lift the coprime residue split f-bar = g_res * (f-bar / g_res).

    f integral with unit leading coefficient and coefficients certified to
    absolute precision >= N; g_res monic and coprime to the cofactor.
    Returns (g, h) with f = g*h mod pi^N and g monic lifting g_res.
    Digit-by-digit linear lifting.
    """
    field = f.field
    R = field.residue
    N = field.precision
    fbar = f.residue_poly()
    hbar = ffield.fp_divmod(R, fbar, g_res)[0]
    _a, b = _fp_bezout(R, g_res, hbar)
    lift = field.from_residue
    gp = Poly(field, [lift(c) for c in g_res])
    hp = Poly(field, [lift(c) for c in hbar])
    for k in range(1, N):
        e = f.add(gp.mul(hp).neg())
        ebark = [c.residue_at(k) for c in e.coeffs]
        if ffield.fp_is_zero(ebark):
            continue
        # solve dg*hbar + dh*g_res = e_k with deg dg < deg g_res
        dg = ffield.fp_rem(R, ffield.fp_mul(R, b, ebark), g_res)
        dh = ffield.fp_divmod(
            R, ffield.fp_sub(R, ebark, ffield.fp_mul(R, dg, hbar)), g_res)[0]
        gp = gp.add(Poly(field, [lift(c).shift(k) for c in dg]))
        hp = hp.add(Poly(field, [lift(c).shift(k) for c in dh]))
    gp = Poly(field, [c.with_absprec(N) for c in gp.coeffs])
    hp = Poly(field, [c.with_absprec(N) for c in hp.coeffs])
    return gp, hp


def _fp_bezout(R, g, h):
    """a, b with a*g + b*h = 1 for coprime g, h over the residue field."""
    r0, r1 = list(g), list(h)
    a0, a1 = [R.one], []
    b0, b1 = [], [R.one]
    while not ffield.fp_is_zero(r1):
        q, r = ffield.fp_divmod(R, r0, r1)
        r0, r1 = r1, r
        a0, a1 = a1, ffield.fp_sub(R, a0, ffield.fp_mul(R, q, a1))
        b0, b1 = b1, ffield.fp_sub(R, b0, ffield.fp_mul(R, q, b1))
    if ffield.fp_degree(r0) != 0:
        raise ValueError("factors not coprime")
    inv = r0[0].inverse()
    return ([c * inv for c in a0], [c * inv for c in b0])


def newton_root(f, x0):
    """Refine a simple-root approximation to the working precision.

    Requires v(f(x0)) > 2 v(f'(x0)) (Hensel's condition).
    """
    field = f.field
    N = field.precision
    df = f.derivative()
    x = x0
    for _ in range(N + 2):
        fx = f.evaluate(x)
        if fx.is_exact_zero():
            return x
        if fx.is_bigo() or fx.val >= N:
            break
        dfx = df.evaluate(x)
        x = x + (-fx).divide(dfx)
    return x


def sqrt_unit(elem):
    """Square root of a unit whose residue is a square (odd residue char)."""
    field = elem.field
    r = elem.leading_residue()
    rts = ffield.roots(field.residue, [-r, field.residue.zero, field.residue.one])
    if not rts:
        raise ValueError("residue is not a square")
    x0 = field.from_residue(rts[0])
    f = Poly(field, [-elem, field.zero(), field.from_int(1)])
    return newton_root(f, x0)
