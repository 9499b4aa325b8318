"""Exact arithmetic in the coefficient field Q(q,g) and in Q(q,g)[w].

Every symbolic coefficient in this package is a Scalar: a reduced fraction
of polynomials in the two formal parameters q and g (g stands for the
deformation constant gamma) with rational coefficients.  Working over the
full rational-function field keeps q away from roots of unity and g away
from zero generically, so identity checking is decidable by plain
representational equality.  Numeric specializations (for the shift-matrix
oracle) go through :meth:`Scalar.substitute`, which rejects evaluation
points where a denominator vanishes; in particular q0 must avoid roots of
unity that occur in denominators such as 1-q^n.

Normal form convention: numerator and denominator are reduced by their
polynomial GCD and the denominator is monic with respect to the graded
lexicographic monomial order on (q, g).  Two Scalars are equal iff their
stored representations are identical.

UniPoly is a dense univariate polynomial over Scalar (default variable w),
with exact division and an extended Euclidean algorithm; it carries the
Bezout cofactor machinery used by the calculus checks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy.polys.domains import QQ
from sympy.polys.fields import field as _field

_FIELD, _fq, _fg = _field("q,g", QQ, order="grlex")
_RING_Q, _RING_G = _FIELD.ring.gens


class ScalarError(ArithmeticError):
    """Base class for coefficient-field errors."""


class ZeroInverseError(ScalarError):
    """Raised on inversion or division by the zero Scalar."""


class EvaluationError(ScalarError):
    """Raised when a denominator vanishes at a numeric evaluation point."""


def _to_qq(x):
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, int):
        return QQ(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Scalar:
    """An element of Q(q,g), stored as a monic-denominator reduced fraction.

    Immutable; all arithmetic returns new instances.  Supports +, -, *, /,
    ** (integer exponents, negative allowed for nonzero values) against
    other Scalars, ints and Fractions.
    """

    __slots__ = ("_frac",)

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self._frac = value._frac
        elif isinstance(value, (int, Fraction)):
            self._frac = _FIELD.ground_new(_to_qq(value))
        else:
            raise TypeError(f"cannot build Scalar from {type(value).__name__}")

    @classmethod
    def _wrap(cls, frac):
        # monic denominator under grlex; frac is already GCD-reduced
        lc = frac.denom.LC
        if lc != 1:
            frac = _FIELD.raw_new(frac.numer.quo_ground(lc), frac.denom.quo_ground(lc))
        s = object.__new__(cls)
        s._frac = frac
        return s

    @property
    def numer_terms(self):
        return list(self._frac.numer.terms())

    @property
    def denom_terms(self):
        return list(self._frac.denom.terms())

    def is_zero(self) -> bool:
        return not self._frac

    def is_one(self) -> bool:
        return self._frac == _FIELD.one

    def __bool__(self):
        return bool(self._frac)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._frac.numer == other._frac.numer and self._frac.denom == other._frac.denom

    def __hash__(self):
        return hash((self._frac.numer, self._frac.denom))

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._wrap(self._frac + other._frac)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._wrap(self._frac - other._frac)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._wrap(other._frac - self._frac)

    def __neg__(self):
        return Scalar._wrap(-self._frac)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._wrap(self._frac * other._frac)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroInverseError("division by the zero Scalar")
        return Scalar._wrap(self._frac / other._frac)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.is_zero():
            raise ZeroInverseError("negative power of the zero Scalar")
        return Scalar._wrap(self._frac ** n)

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise ZeroInverseError("inverse of the zero Scalar")
        return Scalar._wrap(self._frac ** -1)

    def substitute(self, q0, gamma0) -> Fraction:
        """Exact rational value at q=q0, g=gamma0.

        Raises EvaluationError if the denominator vanishes at the point.
        """
        pts = [(_RING_Q, _to_qq(Fraction(q0))), (_RING_G, _to_qq(Fraction(gamma0)))]
        den = self._frac.denom.evaluate(pts)
        if den == 0:
            raise EvaluationError(
                f"denominator of {self} vanishes at q={q0}, g={gamma0}")
        num = self._frac.numer.evaluate(pts)
        val = num / den
        return Fraction(int(val.numerator), int(val.denominator))

    # -- printing ---------------------------------------------------------

    def __str__(self):
        num, den = self._frac.numer, self._frac.denom
        num_s, num_multi = _poly_str(num)
        if den == _FIELD.ring.one:
            return num_s
        den_s, den_multi = _poly_str(den)
        if num_multi:
            num_s = "(" + num_s + ")"
        if den_multi or "*" in den_s:
            den_s = "(" + den_s + ")"
        return num_s + "/" + den_s

    def __repr__(self):
        return f"Scalar({self})"

    def paren_str(self) -> str:
        """String safe to splice into a product with '*'."""
        s = str(self)
        if _needs_parens(s):
            return "(" + s + ")"
        return s


def _poly_str(p):
    """Render a ring polynomial; returns (string, has_multiple_terms)."""
    terms = sorted(p.terms(), key=lambda t: (sum(t[0]), t[0]))
    if not terms:
        return "0", False
    parts = []
    for monom, coeff in terms:
        c = Fraction(int(coeff.numerator), int(coeff.denominator))
        factors = []
        for name, e in zip(("q", "g"), monom):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(abs(c))
        else:
            body = "*".join(factors)
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += sign + body
    return out, len(parts) > 1


def _needs_parens(s: str) -> bool:
    # binary +/- at top level (a '-' directly after '^' is an exponent sign)
    for i, ch in enumerate(s):
        if ch == "+" and i > 0:
            return True
        if ch == "-" and i > 0 and s[i - 1] != "^":
            return True
    return False


ZERO = Scalar(0)
ONE = Scalar(1)
Q = Scalar._wrap(_fq)
GAMMA = Scalar._wrap(_fg)


@lru_cache(maxsize=None)
def q_pow(n: int) -> Scalar:
    """q**n as a Scalar, any integer n."""
    return Scalar._wrap(_fq ** n)


@lru_cache(maxsize=None)
def q_integer(n: int) -> Scalar:
    """The basic deformed integer (1-q^n)/(1-q); negative n allowed.

    For n >= 0 this is the polynomial 1 + q + ... + q^(n-1).
    """
    if n >= 0:
        acc = _FIELD.ring.zero
        for k in range(n):
            acc += _RING_Q ** k
        return Scalar._wrap(_FIELD.new(acc))
    return Scalar._wrap((1 - _fq ** n) / (1 - _fq))


def substitute(x: Scalar, q0, gamma0) -> Fraction:
    """Module-level alias for :meth:`Scalar.substitute`."""
    return x.substitute(q0, gamma0)


class UniPoly:
    """Dense univariate polynomial over Scalar.

    Coefficients are indexed by degree; the leading coefficient is nonzero
    unless the polynomial is zero (empty coefficient list).
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "w"):
        cs = [c if isinstance(c, Scalar) else Scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs
        self.var = var

    @classmethod
    def const(cls, c, var: str = "w") -> "UniPoly":
        return cls([c], var=var)

    @classmethod
    def variable(cls, var: str = "w") -> "UniPoly":
        return cls([ZERO, ONE], var=var)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ScalarError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return UniPoly([Scalar(other) if not isinstance(other, Scalar) else other],
                           var=self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) + other.coeff(k) for k in range(n)], var=self.var)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) - other.coeff(k) for k in range(n)], var=self.var)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], var=self.var)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly(var=self.var)
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        acc = UniPoly([ONE], var=self.var)
        for _ in range(n):
            acc = acc * self
        return acc

    def scale(self, s: Scalar) -> "UniPoly":
        return UniPoly([c * s for c in self.coeffs], var=self.var)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(self.leading().inv())

    def __divmod__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(var=self.var), self
        quo = [ZERO] * (dq + 1)
        lead_inv = other.leading().inv()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()]
            if c.is_zero():
                continue
            f = c * lead_inv
            quo[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - f * b
        return UniPoly(quo, var=self.var), UniPoly(rem, var=self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly([self.coeffs[k] * k for k in range(1, len(self.coeffs))],
                       var=self.var)

    def eval_scalar(self, x: Scalar) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_in(self, x, one):
        """Horner evaluation in any ring containing the Scalars.

        ``x`` is the evaluation point, ``one`` the ring identity; the ring
        must support addition and Scalar-by-element multiplication.
        """
        if self.is_zero():
            return 0 * one
        acc = self.coeffs[-1] * one
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c * one
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(str(c) if not _needs_parens(str(c)) else "(" + str(c) + ")")
                continue
            mono = self.var if k == 1 else f"{self.var}^{k}"
            if c.is_one():
                parts.append(mono)
            elif c == Scalar(-1):
                parts.append("-" + mono)
            else:
                parts.append(c.paren_str() + "*" + mono)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"UniPoly({self})"


def extended_gcd(p1: UniPoly, p2: UniPoly):
    """Extended Euclidean algorithm over Scalar[w].

    Returns (gc, u, v) with u*p1 + v*p2 = gc and gc monic.  Raises
    ScalarError if both inputs are zero.
    """
    if p1.is_zero() and p2.is_zero():
        raise ScalarError("extended_gcd of two zero polynomials")
    one = UniPoly([ONE], var=p1.var)
    zero = UniPoly(var=p1.var)
    r0, r1 = p1, p2
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    lead_inv = r0.leading().inv()
    return r0.scale(lead_inv), s0.scale(lead_inv), t0.scale(lead_inv)
