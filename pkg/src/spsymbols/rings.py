"""Euclidean rings of integers with a multiplicative norm.

Three instances are provided: the rational integers ``ZZ``, the Gaussian
integers ``ZI`` and the Eisenstein integers ``ZW`` (with w = exp(2 pi i/3),
so w^2 = -1 - w).  Rational integers are plain Python ``int`` objects and
their fractions are :class:`fractions.Fraction`; the quadratic rings use
:class:`QuadraticInteger` and :class:`FieldElement`.

Division with remainder always returns the remainder of least norm.  Ties
are broken by comparing the coefficient pair ``(a, b)`` lexicographically,
each coefficient compared by absolute value first and sign last, so that
non-negative coefficients win.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .errors import DivisionByZero, PreconditionError


def _coeff_key(c):
    return (abs(c), c < 0)


class QuadraticInteger:
    """a + b*theta in Z[theta]; concrete subclasses fix theta."""

    __slots__ = ("a", "b")
    ring: "EuclideanRing"

    def __init__(self, a, b=0):
        self.a = a
        self.b = b

    def _lift(self, other):
        if isinstance(other, int):
            return type(self)(other, 0)
        if type(other) is type(self):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return type(self)(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return type(self)(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return type(self)(-self.a, -self.b)

    def __pos__(self):
        return self

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if type(other) is type(self):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((type(self).__name__, self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"{type(self).__name__}({self.a}, {self.b})"

    def pair(self):
        return (self.a, self.b)


class GaussianInteger(QuadraticInteger):
    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInteger(self.a * other, self.b * other)
        if type(other) is not GaussianInteger:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return GaussianInteger(a * c - b * d, a * d + b * c)

    def conjugate(self):
        return GaussianInteger(self.a, -self.b)

    def norm(self):
        return self.a * self.a + self.b * self.b

    def __str__(self):
        return f"{self.a}{self.b:+}i"


class EisensteinInteger(QuadraticInteger):
    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, int):
            return EisensteinInteger(self.a * other, self.b * other)
        if type(other) is not EisensteinInteger:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return EisensteinInteger(a * c - bd, a * d + b * c - bd)

    def conjugate(self):
        # conj(w) = w^2 = -1 - w
        return EisensteinInteger(self.a - self.b, -self.b)

    def norm(self):
        a, b = self.a, self.b
        return a * a - a * b + b * b

    def __str__(self):
        return f"{self.a}{self.b:+}w"


class FieldElement:
    """num/den in the fraction field of a quadratic ring, in lowest terms.

    The denominator is kept in canonical associate form, which makes the
    representation unique.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        ring = num.ring
        if den is None:
            den = ring.one
        if not den:
            raise DivisionByZero("zero denominator")
        if not _reduced:
            if not num:
                den = ring.one
            else:
                g = ring.gcd(num, den)
                if g != ring.one:
                    num = ring.exact_div(num, g)
                    den = ring.exact_div(den, g)
                den, u = ring.canonical(den)
                if u != ring.one:
                    num = num * u
        self.num = num
        self.den = den

    def _lift(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, int):
            return FieldElement(self.num.ring(other), _reduced=True)
        if isinstance(other, QuadraticInteger):
            return FieldElement(other, _reduced=True)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise DivisionByZero("division by zero in fraction field")
        return FieldElement(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == 1:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def norm(self):
        return Fraction(self.num.norm(), self.den.norm())

    def __repr__(self):
        return f"FieldElement({self.num!r}, {self.den!r})"


class EuclideanRing:
    """Common interface; subclasses supply arithmetic on their elements."""

    tag: str
    zero = 0
    one = 1

    def __call__(self, a, b=0):
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.tag}>"

    def __reduce__(self):
        return (ring_from_tag, (self.tag,))

    # -- basic predicates ---------------------------------------------------

    def is_unit(self, x):
        return self.norm(x) == 1

    def divides(self, a, b):
        """True iff a divides b."""
        if not a:
            return not b
        return not self.divmod(b, a)[1]

    def exact_div(self, a, b):
        q, r = self.divmod(a, b)
        if r:
            raise PreconditionError(f"{b!r} does not divide {a!r}")
        return q

    def gcd(self, a, b):
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.canonical(a)[0]

    def xgcd(self, a, b):
        """Return (g, s, t) with s*a + t*b = g and g canonical."""
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while r1:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        g, u = self.canonical(r0)
        return g, s0 * u, t0 * u

    def gcd_many(self, values):
        return reduce(self.gcd, values, self.zero)

    def unit_inverse(self, u):
        for v in self.units:
            if u * v == self.one:
                return v
        raise PreconditionError(f"{u!r} is not a unit")


class Integers(EuclideanRing):
    tag = "Z"
    units = (1, -1)

    def __call__(self, a, b=0):
        if b:
            raise ValueError("rational integers have no second coefficient")
        return int(a)

    def coerce(self, x):
        if isinstance(x, int):
            return x
        raise TypeError(f"cannot coerce {x!r} into Z")

    def norm(self, x):
        return abs(x)

    def is_unit(self, x):
        return x == 1 or x == -1

    def divmod(self, a, b):
        if not b:
            raise DivisionByZero("euclidean division by zero")
        r = a % b
        s = r - b
        if (abs(s), s < 0) < (abs(r), r < 0):
            r = s
        return (a - r) // b, r

    def exact_div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero")
        q, r = divmod(a, b)
        if r:
            raise PreconditionError(f"{b} does not divide {a}")
        return q

    def divides(self, a, b):
        if not a:
            return not b
        return b % a == 0

    def gcd(self, a, b):
        from math import gcd

        return gcd(a, b)

    def canonical(self, x):
        if x < 0:
            return -x, -1
        return x, 1

    def conjugate(self, x):
        return x

    def to_pair(self, x):
        return (x, 0)

    def from_pair(self, pair):
        if isinstance(pair, int):
            return pair
        a, *rest = pair
        if rest and rest[0]:
            raise ValueError(f"nonzero second coefficient {pair!r} for Z")
        return int(a)

    def fraction(self, num, den=1):
        return Fraction(num, den)

    def unit_inverse(self, u):
        return u


class QuadraticRing(EuclideanRing):
    element: type
    zero: QuadraticInteger
    one: QuadraticInteger

    def __init__(self):
        self.zero = self.element(0, 0)
        self.one = self.element(1, 0)
        self.element.ring = self

    def __call__(self, a, b=0):
        return self.element(int(a), int(b))

    def coerce(self, x):
        if isinstance(x, self.element):
            return x
        if isinstance(x, int):
            return self.element(x, 0)
        raise TypeError(f"cannot coerce {x!r} into {self.tag}")

    def norm(self, x):
        if isinstance(x, int):
            return x * x
        return x.norm()

    def conjugate(self, x):
        return self.coerce(x).conjugate()

    def divmod(self, a, b):
        a = self.coerce(a)
        b = self.coerce(b)
        n = b.norm()
        if not n:
            raise DivisionByZero("euclidean division by zero")
        e = a * b.conjugate()
        x0 = (2 * e.a + n) // (2 * n)
        y0 = (2 * e.b + n) // (2 * n)
        best = None
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                q = self.element(x0 + dx, y0 + dy)
                r = a - q * b
                key = (r.norm(), _coeff_key(r.a), _coeff_key(r.b))
                if best is None or key < best[0]:
                    best = (key, q, r)
        return best[1], best[2]

    def canonical(self, x):
        x = self.coerce(x)
        if not x:
            return x, self.one
        for u in self.units:
            y = u * x
            if self._in_cone(y):
                return y, u
        raise AssertionError("no associate in the fundamental cone")

    def to_pair(self, x):
        x = self.coerce(x)
        return (x.a, x.b)

    def from_pair(self, pair):
        if isinstance(pair, int):
            return self.element(pair, 0)
        if isinstance(pair, self.element):
            return pair
        if len(pair) == 1:
            return self.element(int(pair[0]), 0)
        a, b = pair
        return self.element(int(a), int(b))

    def fraction(self, num, den=None):
        num = self.coerce(num)
        return FieldElement(num, None if den is None else self.coerce(den))

    def unit_inverse(self, u):
        u = self.coerce(u)
        if u.norm() != 1:
            raise PreconditionError(f"{u!r} is not a unit")
        return u.conjugate()


class GaussianIntegers(QuadraticRing):
    tag = "Z[i]"
    element = GaussianInteger

    def __init__(self):
        super().__init__()
        i = GaussianInteger(0, 1)
        self.units = (self.one, i, -self.one, -i)

    @staticmethod
    def _in_cone(y):
        return y.a > 0 and y.b >= 0


class EisensteinIntegers(QuadraticRing):
    tag = "Z[w]"
    element = EisensteinInteger

    def __init__(self):
        super().__init__()
        w = EisensteinInteger(0, 1)
        w2 = w * w
        self.units = (self.one, -w2, w, -self.one, w2, -w)

    @staticmethod
    def _in_cone(y):
        # arg in [0, 60 degrees): a - b > 0 and b >= 0 in the basis {1, 1 + w}
        return y.a > y.b >= 0


ZZ = Integers()
ZI = GaussianIntegers()
ZW = EisensteinIntegers()

RINGS = {"Z": ZZ, "Z[i]": ZI, "Z[w]": ZW}


def ring_from_tag(tag):
    try:
        return RINGS[tag]
    except KeyError:
        raise ValueError(f"unknown ring tag {tag!r}; expected one of {sorted(RINGS)}") from None


def field_norm(ring, q):
    """Norm of an element of the fraction field, as a Fraction."""
    if isinstance(q, Fraction):
        return abs(q)
    if isinstance(q, int):
        return Fraction(ring.norm(q))
    if isinstance(q, FieldElement):
        return q.norm()
    return Fraction(ring.norm(q))


def canonical_fraction(ring, q):
    """Normalize a fraction-field element (idempotent)."""
    if isinstance(q, Fraction):
        return Fraction(q.numerator, q.denominator)
    return FieldElement(q.num, q.den)


def norm(x, ring=None):
    """Norm of a ring element; ``ring`` defaults to the element's own ring."""
    if ring is None:
        ring = ZZ if isinstance(x, int) else x.ring
    return ring.norm(x)


def div_rem(a, b, ring=None):
    if ring is None:
        ring = ZZ if isinstance(a, int) and isinstance(b, int) else (a if not isinstance(a, int) else b).ring
    return ring.divmod(a, b)


def gcd(a, b, ring=None):
    if ring is None:
        ring = ZZ if isinstance(a, int) and isinstance(b, int) else (a if not isinstance(a, int) else b).ring
    if not a and not b:
        raise PreconditionError("gcd(0, 0) is undefined")
    return ring.gcd(a, b)


def is_unit(x, ring=None):
    if ring is None:
        ring = ZZ if isinstance(x, int) else x.ring
    return ring.is_unit(x)
