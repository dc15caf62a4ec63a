"""Exact scalar arithmetic in Q(w), w a primitive cube root of unity.

A scalar is stored as (p + q*w)/d with integer p, q and positive integer d,
gcd(p, q, d) = 1.  Multiplication reduces by w**2 = -1 - w.  Keeping a single
shared denominator (instead of two stock Fractions) roughly halves the cost
of the hot linear-algebra loops.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class DivisionByZero(ZeroDivisionError):
    pass


class Scalar:
    """Element of Q(w): (p + q*w)/d in lowest terms, d > 0."""

    __slots__ = ("p", "q", "d")

    def __init__(self, p: int = 0, q: int = 0, d: int = 1):
        if d == 0:
            raise DivisionByZero("zero denominator")
        if d < 0:
            p, q, d = -p, -q, -d
        g = gcd(gcd(p, q), d)
        if g > 1:
            p //= g
            q //= g
            d //= g
        self.p = p
        self.q = q
        self.d = d

    # ---- constructors -------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "Scalar":
        return Scalar(n, 0, 1)

    @staticmethod
    def rational(num: int, den: int = 1) -> "Scalar":
        return Scalar(num, 0, den)

    @staticmethod
    def from_fractions(a: Fraction, b: Fraction = Fraction(0)) -> "Scalar":
        d = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return Scalar(a.numerator * (d // a.denominator),
                      b.numerator * (d // b.denominator), d)

    # ---- views ---------------------------------------------------------

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return Fraction(self.p, self.d)

    @property
    def b(self) -> Fraction:
        """Coefficient of w."""
        return Fraction(self.q, self.d)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q:
            raise ValueError("not a rational scalar: %s" % self)
        return Fraction(self.p, self.d)

    # ---- arithmetic ----------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        d1, d2 = self.d, other.d
        if d1 == d2:
            return Scalar(self.p + other.p, self.q + other.q, d1)
        return Scalar(self.p * d2 + other.p * d1, self.q * d2 + other.q * d1, d1 * d2)

    def __sub__(self, other: "Scalar") -> "Scalar":
        d1, d2 = self.d, other.d
        if d1 == d2:
            return Scalar(self.p - other.p, self.q - other.q, d1)
        return Scalar(self.p * d2 - other.p * d1, self.q * d2 - other.q * d1, d1 * d2)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.p, -self.q, self.d)

    def __mul__(self, other: "Scalar") -> "Scalar":
        p1, q1 = self.p, self.q
        p2, q2 = other.p, other.q
        if q1 == 0 and q2 == 0:
            return Scalar(p1 * p2, 0, self.d * other.d)
        # (p1 + q1 w)(p2 + q2 w), w^2 = -1 - w
        t = q1 * q2
        return Scalar(p1 * p2 - t, p1 * q2 + q1 * p2 - t, self.d * other.d)

    def conj(self) -> "Scalar":
        """Image under w -> w^2."""
        return Scalar(self.p - self.q, -self.q, self.d)

    def field_norm(self) -> Fraction:
        """Norm to Q: x * conj(x) = p^2 - p q + q^2 over d^2."""
        return Fraction(self.p * self.p - self.p * self.q + self.q * self.q,
                        self.d * self.d)

    def inv(self) -> "Scalar":
        n = self.p * self.p - self.p * self.q + self.q * self.q
        if n == 0:
            raise DivisionByZero("inverse of zero")
        return Scalar(self.d * (self.p - self.q), -self.d * self.q, n)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * other.inv()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.p == other.p and self.q == other.q and self.d == other.d

    def __hash__(self):
        return hash((self.p, self.q, self.d))

    def __repr__(self):
        return "Scalar(%r)" % (format_scalar(self),)

    def __str__(self):
        return format_scalar(self)


ZERO = Scalar(0)
ONE = Scalar(1)
TWO = Scalar(2)
HALF = Scalar(1, 0, 2)
MINUS_ONE = Scalar(-1)
OMEGA = Scalar(0, 1)
OMEGA2 = Scalar(-1, -1)  # w^2 = -1 - w


def sc(value) -> Scalar:
    """Coerce an int, Fraction or Scalar to a Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int):
        return Scalar(value)
    if isinstance(value, Fraction):
        return Scalar(value.numerator, 0, value.denominator)
    raise TypeError("cannot coerce %r to Scalar" % (value,))


# ---- text form ---------------------------------------------------------

def _format_rat(num: int, den: int) -> str:
    return "%d" % num if den == 1 else "%d/%d" % (num, den)


def format_scalar(x: Scalar) -> str:
    """Serialize as "a" or "a+b*w" (or "a-b*w"), rationals as "p/q"."""
    a, b = x.a, x.b
    if b == 0:
        return _format_rat(a.numerator, a.denominator)
    bs = _format_rat(abs(b.numerator), b.denominator) + "*w"
    if a == 0:
        return bs if b > 0 else "-" + bs
    head = _format_rat(a.numerator, a.denominator)
    return head + ("+" if b > 0 else "-") + bs


def parse_scalar(text: str) -> Scalar:
    """Inverse of format_scalar; exact round-trip."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    # split off the w-term, if any
    if "w" in s:
        body = s[:-2] if s.endswith("*w") else None
        if body is None:
            raise ValueError("malformed scalar %r" % text)
        # find the sign separating a from b (not the leading sign)
        cut = -1
        depth_start = 1 if body and body[0] in "+-" else 0
        for i in range(depth_start, len(body)):
            if body[i] in "+-":
                cut = i
        if cut == -1:
            return Scalar.from_fractions(Fraction(0), Fraction(body))
        a = Fraction(body[:cut])
        b = Fraction(body[cut + 1:]) if body[cut] == "+" else -Fraction(body[cut + 1:])
        return Scalar.from_fractions(a, b)
    return Scalar.from_fractions(Fraction(s))


# ---- polynomials --------------------------------------------------------

class BothZero(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


class Polynomial:
    """Univariate polynomial over Q(w), coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [sc(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def x(power: int = 1, coeff=1) -> "Polynomial":
        return Polynomial([ZERO] * power + [sc(coeff)])

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial([sc(c)])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return Polynomial(out)

    def scale(self, c) -> "Polynomial":
        c = sc(c)
        return Polynomial([c * ci for ci in self.coeffs])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.leading().inv())

    def divmod(self, other: "Polynomial"):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial([]), self
        quot = [ZERO] * (dq + 1)
        inv_lead = other.leading().inv()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()] * inv_lead
            quot[k] = c
            if not c.is_zero():
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * oc
        return Polynomial(quot), Polynomial(rem)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial([sc(i) * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: Scalar) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a: Scalar) -> "Polynomial":
        """p(a*X) for a scalar a."""
        out, pw = [], ONE
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * a
        return Polynomial(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            if i == 0:
                parts.append(format_scalar(c))
            else:
                xs = "X" if i == 1 else "X^%d" % i
                if c == ONE:
                    parts.append(xs)
                elif c == MINUS_ONE:
                    parts.append("-" + xs)
                else:
                    cs = format_scalar(c)
                    if "+" in cs[1:] or "-" in cs[1:]:
                        cs = "(%s)" % cs
                    parts.append("%s*%s" % (cs, xs))
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    __repr__ = __str__


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm over Q(w)."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd(0, 0) undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial([])
    g = poly_gcd(p, q)
    return (p * q.divmod(g)[0]).monic()


def is_squarefree(p: Polynomial) -> bool:
    """True iff gcd(p, p') is a nonzero constant (characteristic 0)."""
    if p.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    if p.degree() == 0:
        return True
    return poly_gcd(p, p.derivative()).degree() == 0
