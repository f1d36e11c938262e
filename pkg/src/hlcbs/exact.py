"""Exact arithmetic foundation: rationals, polynomials, and the
Q-span of {1, sqrt3, pi, sqrt3*pi}.

Rational numbers are plain :class:`fractions.Fraction` (always reduced,
positive denominator).  Polynomials are stored dense by degree; all degrees
in this project stay small.  :class:`PiExtValue` holds every exact special
value produced by the kit: all of them live in the Q-vector space spanned by
1, sqrt3, pi and sqrt3*pi, and that basis is Q-linearly independent, so the
representation is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .floats import BigFloat, context, to_mpf, ulp_scale

Rational = Fraction


class DomainError(ValueError):
    """An argument lies outside an operation's mathematical domain."""


class MultiplicationOutOfBasis(ArithmeticError):
    """A PiExtValue product would need pi^2, which the basis cannot hold."""


def as_fraction(value) -> Fraction:
    """Coerce int/str/Fraction to Fraction; reject floats (be explicit)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# univariate polynomials over Q


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[d]`` is the coefficient of x^d; trailing zeros are stripped, so
    the zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple

    def __init__(self, coeffs=()):
        cs = tuple(as_fraction(c) for c in coeffs)
        object.__setattr__(self, "coeffs", tuple(_strip(list(cs))))

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((as_fraction(c),))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "UniPoly":
        """Formal d/dx."""
        return UniPoly(tuple(c * d for d, c in enumerate(self.coeffs) if d >= 1))

    def __call__(self, point):
        """Horner evaluation; exact for Fraction points, works for mpf too."""
        if isinstance(point, int):
            point = Fraction(point)
        acc = Fraction(0) if isinstance(point, Fraction) else point * 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def eval_mpf(self, ctx, point):
        """Horner evaluation in an mpmath context (coefficients converted exactly)."""
        acc = ctx.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * point + to_mpf(ctx, c)
        return acc

    def to_text(self, var: str = "x") -> str:
        return format_terms(
            [(c, _power_token(var, d)) for d, c in reversed(list(enumerate(self.coeffs)))]
        )

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str, var: str = "x") -> "UniPoly":
        """Inverse of :meth:`to_text` (also accepts '**' for powers)."""
        coeffs = {}
        for sign, factors in _split_terms(text):
            coeff = Fraction(sign)
            degree = 0
            for f in factors:
                if f == var:
                    degree += 1
                elif f.startswith(var + "^"):
                    degree += int(f[len(var) + 1 :])
                else:
                    coeff *= Fraction(f)
            coeffs[degree] = coeffs.get(degree, Fraction(0)) + coeff
        out = [Fraction(0)] * (max(coeffs, default=0) + 1)
        for d, c in coeffs.items():
            out[d] = c
        return cls(out)


# ---------------------------------------------------------------------------
# polynomials in x whose coefficients are polynomials in the parameter a


@dataclass(frozen=True)
class BiPoly:
    """Polynomial in x with UniPoly-in-a coefficients (``coeffs[d]`` at x^d)."""

    coeffs: tuple

    def __init__(self, coeffs=()):
        cs = []
        for c in coeffs:
            if isinstance(c, (int, Fraction)):
                c = UniPoly.const(c)
            if not isinstance(c, UniPoly):
                raise TypeError("BiPoly coefficients must be UniPoly or rationals")
            cs.append(c)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls((UniPoly.const(c),))

    @classmethod
    def from_x_poly(cls, p: UniPoly) -> "BiPoly":
        """Embed a polynomial in x (constant in a)."""
        return cls(tuple(UniPoly.const(c) for c in p.coeffs))

    @classmethod
    def from_a_poly(cls, p: UniPoly) -> "BiPoly":
        """Embed a polynomial in a (degree 0 in x)."""
        return cls((p,))

    @property
    def degree_x(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if isinstance(other, (int, Fraction, UniPoly)):
            other = BiPoly((other,)) if not isinstance(other, UniPoly) else BiPoly.from_a_poly(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(out)

    def __neg__(self):
        return BiPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, UniPoly)):
            return self + (-(BiPoly.from_a_poly(other) if isinstance(other, UniPoly) else BiPoly.const(other)))
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly(tuple(c * other for c in self.coeffs))
        if isinstance(other, UniPoly):  # scalar in a
            return BiPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPoly()
        out = [UniPoly()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def dx(self) -> "BiPoly":
        """Formal partial derivative in x."""
        return BiPoly(tuple(c * d for d, c in enumerate(self.coeffs) if d >= 1))

    def substitute_a(self, a_value) -> UniPoly:
        """Coefficient-wise substitution of a rational value for a."""
        a_value = as_fraction(a_value)
        return UniPoly(tuple(c(a_value) for c in self.coeffs))

    def to_unipoly(self) -> UniPoly:
        """Round-trip for BiPoly with all a-degrees zero."""
        if any(c.degree > 0 for c in self.coeffs):
            raise DomainError("BiPoly depends on the parameter; cannot drop it")
        return UniPoly(tuple(c(Fraction(0)) for c in self.coeffs))

    def __call__(self, a_value, x_value):
        return self.substitute_a(a_value)(x_value)

    def to_text(self, var: str = "x", coeff_var: str = "a") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for d in range(self.degree_x, -1, -1):
            c = self.coeffs[d]
            if c.is_zero():
                continue
            if c.degree == 0:
                term = format_terms([(c.coeffs[0], _power_token(var, d))])
                if term.startswith("-"):
                    parts.append(("-", term[1:]))
                else:
                    parts.append(("+", term))
            else:
                body = f"({c.to_text(coeff_var)})"
                pw = _power_token(var, d)
                parts.append(("+", body if not pw else f"{body}*{pw}"))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __str__(self) -> str:
        return self.to_text()


# ---------------------------------------------------------------------------
# exact values in Q + Q*sqrt3 + Q*pi + Q*sqrt3*pi


@dataclass(frozen=True)
class PiExtValue:
    """c_one + c_sqrt3*sqrt3 + c_pi*pi + c_sqrt3pi*sqrt3*pi with Fraction c's.

    Closed under addition and under scaling by elements q0 + q1*sqrt3 of
    Q(sqrt3); note pi/sqrt3 = (1/3)*sqrt3*pi, so all values handled by the
    kit embed here.  General multiplication is deliberately unsupported:
    anything needing pi^2 raises :class:`MultiplicationOutOfBasis`.
    """

    c_one: Fraction = Fraction(0)
    c_sqrt3: Fraction = Fraction(0)
    c_pi: Fraction = Fraction(0)
    c_sqrt3pi: Fraction = Fraction(0)

    def __init__(self, c_one=0, c_sqrt3=0, c_pi=0, c_sqrt3pi=0):
        object.__setattr__(self, "c_one", as_fraction(c_one))
        object.__setattr__(self, "c_sqrt3", as_fraction(c_sqrt3))
        object.__setattr__(self, "c_pi", as_fraction(c_pi))
        object.__setattr__(self, "c_sqrt3pi", as_fraction(c_sqrt3pi))

    @classmethod
    def rational(cls, q) -> "PiExtValue":
        return cls(c_one=q)

    @classmethod
    def pi_multiple(cls, q) -> "PiExtValue":
        return cls(c_pi=q)

    @classmethod
    def sqrt3pi_multiple(cls, q) -> "PiExtValue":
        return cls(c_sqrt3pi=q)

    def is_zero(self) -> bool:
        return not (self.c_one or self.c_sqrt3 or self.c_pi or self.c_sqrt3pi)

    def in_q_sqrt3(self) -> bool:
        """True when the value lies in Q(sqrt3) (no pi part)."""
        return self.c_pi == 0 and self.c_sqrt3pi == 0

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PiExtValue.rational(other)
        if not isinstance(other, PiExtValue):
            return NotImplemented
        return PiExtValue(
            self.c_one + other.c_one,
            self.c_sqrt3 + other.c_sqrt3,
            self.c_pi + other.c_pi,
            self.c_sqrt3pi + other.c_sqrt3pi,
        )

    __radd__ = __add__

    def __neg__(self):
        return PiExtValue(-self.c_one, -self.c_sqrt3, -self.c_pi, -self.c_sqrt3pi)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PiExtValue.rational(other)
        if not isinstance(other, PiExtValue):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q0, q1=0) -> "PiExtValue":
        """Multiply by q0 + q1*sqrt3 (exact; uses sqrt3*sqrt3 = 3)."""
        q0 = as_fraction(q0)
        q1 = as_fraction(q1)
        return PiExtValue(
            q0 * self.c_one + 3 * q1 * self.c_sqrt3,
            q0 * self.c_sqrt3 + q1 * self.c_one,
            q0 * self.c_pi + 3 * q1 * self.c_sqrt3pi,
            q0 * self.c_sqrt3pi + q1 * self.c_pi,
        )

    def times_pi(self) -> "PiExtValue":
        """Multiply by pi; only defined on the Q(sqrt3) part of the basis."""
        if not self.in_q_sqrt3():
            raise MultiplicationOutOfBasis("product would require pi^2")
        return PiExtValue(0, 0, self.c_one, self.c_sqrt3)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, PiExtValue):
            if other.in_q_sqrt3():
                return self.scale(other.c_one, other.c_sqrt3)
            if self.in_q_sqrt3():
                return other.scale(self.c_one, self.c_sqrt3)
            raise MultiplicationOutOfBasis("product would require pi^2")
        return NotImplemented

    __rmul__ = __mul__

    def to_text(self) -> str:
        return format_terms(
            [
                (self.c_one, ""),
                (self.c_sqrt3, "sqrt3"),
                (self.c_pi, "pi"),
                (self.c_sqrt3pi, "sqrt3*pi"),
            ]
        )

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str) -> "PiExtValue":
        """Inverse of :meth:`to_text`."""
        comps = {"": Fraction(0), "sqrt3": Fraction(0), "pi": Fraction(0), "sqrt3*pi": Fraction(0)}
        for sign, factors in _split_terms(text):
            coeff = Fraction(sign)
            basis = []
            for f in factors:
                if f in ("sqrt3", "pi"):
                    basis.append(f)
                else:
                    coeff *= Fraction(f)
            key = "*".join(basis)
            if key not in comps:
                raise ValueError(f"unknown basis element {key!r}")
            comps[key] += coeff
        return cls(comps[""], comps["sqrt3"], comps["pi"], comps["sqrt3*pi"])


def piext_to_float(value: PiExtValue, precision_bits: int = 128) -> BigFloat:
    """Numeric image of an exact value, with pi and sqrt3 at guard precision."""
    if precision_bits < 32:
        raise DomainError("precision_bits must be >= 32")
    ctx = context(precision_bits)
    sqrt3 = ctx.sqrt(3)
    terms = (
        to_mpf(ctx, value.c_one),
        to_mpf(ctx, value.c_sqrt3) * sqrt3,
        to_mpf(ctx, value.c_pi) * ctx.pi,
        to_mpf(ctx, value.c_sqrt3pi) * sqrt3 * ctx.pi,
    )
    total = ctx.fsum(terms)
    # each term carries a few ulp of error from the constants and products
    err = 8 * ulp_scale(ctx) * ctx.fsum(abs(t) for t in terms)
    return BigFloat(total, precision_bits, err)


# ---------------------------------------------------------------------------
# canonical text form helpers


def _power_token(var: str, degree: int) -> str:
    if degree == 0:
        return ""
    if degree == 1:
        return var
    return f"{var}^{degree}"


def format_terms(terms) -> str:
    """Join (coefficient, symbolic-part) pairs into canonical text.

    Descending-degree ordering is the caller's responsibility.  Coefficients
    of +/-1 are suppressed next to a symbolic part; an all-zero term list
    renders as "0".
    """
    parts = []
    for coeff, sym in terms:
        if coeff == 0:
            continue
        mag = abs(coeff)
        if sym and mag == 1:
            body = sym
        elif sym:
            body = f"{mag}*{sym}"
        else:
            body = str(mag)
        parts.append(("-" if coeff < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _split_terms(text: str):
    """Yield (sign, [factor, ...]) for each +/- separated term."""
    s = text.replace("**", "^").replace(" ", "")
    if not s:
        raise ValueError("empty expression")
    if s == "0":
        return
    terms = []
    current = ""
    sign = 1
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in "+-" and current:
            terms.append((sign, current))
            sign = 1 if ch == "+" else -1
            current = ""
        elif ch == "-" and not current:
            sign = -sign
        elif ch == "+" and not current:
            pass
        else:
            current += ch
        i += 1
    if current:
        terms.append((sign, current))
    for sign, term in terms:
        yield sign, [f for f in term.split("*") if f]
