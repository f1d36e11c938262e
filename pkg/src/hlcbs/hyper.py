"""Generalized hypergeometric evaluation with rigorous truncation bounds,
plus incomplete beta (numeric and exact at the special parameters) and
real-argument central binomial coefficients.

The pFq evaluator sums the defining series and stops only once a provable
geometric tail bound falls below the target: each ratio factor
(alpha+n)/(beta+n) is monotone in n with limit 1, so past any index N the
term ratio is bounded by |z| * prod_c max(h_c(N), 1).  The returned
:class:`BigFloat` carries that tail bound plus a conservative rounding term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import DomainError, PiExtValue, as_fraction
from .floats import BigFloat, context, to_mpf, ulp_scale


class LowerParamPole(DomainError):
    """A lower pFq parameter is a nonpositive integer."""


class NoConvergence(DomainError):
    """The series argument lies outside the open unit disc."""


class PoleError(DomainError):
    """Central binomial coefficient requested at a gamma pole."""


_MAX_PFQ_TERMS = 200_000


def pochhammer(alpha, n: int) -> Fraction:
    """Shifted factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1)."""
    if n < 0:
        raise DomainError(f"pochhammer needs n >= 0, got {n}")
    alpha = as_fraction(alpha)
    result = Fraction(1)
    for l in range(n):
        result *= alpha + l
    return result


@dataclass(frozen=True)
class PFQParams:
    """Parameters of a (p+1)Fp series: one more upper than lower entry.

    The implicit (1)_n = n! denominator of the series is separate from
    ``lower``.  Lower parameters must avoid nonpositive integers.
    """

    upper: tuple
    lower: tuple
    z: Fraction

    def __init__(self, upper, lower, z):
        upper = tuple(as_fraction(u) for u in upper)
        lower = tuple(as_fraction(l) for l in lower)
        if len(upper) != len(lower) + 1:
            raise DomainError(
                f"need exactly one more upper than lower parameter, got {len(upper)} vs {len(lower)}"
            )
        for l in lower:
            if l.denominator == 1 and l <= 0:
                raise LowerParamPole(f"lower parameter {l} is a nonpositive integer")
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "z", as_fraction(z))


def _ratio_pairs(upper, lower):
    """Pair each upper with a lower (including the implicit 1 from n!)."""
    ups = sorted(upper)
    lows = sorted(lower + (Fraction(1),))
    return list(zip(ups, lows))


def pfq_eval(params: PFQParams, precision_bits: int = 128) -> BigFloat:
    """Sum the pFq series at |z| < 1 with a guaranteed error bound."""
    z = params.z
    if abs(z) >= 1:
        raise NoConvergence(f"pFq series needs |z| < 1, got z = {z}")
    ctx = context(precision_bits)
    zf = to_mpf(ctx, z)
    pairs = _ratio_pairs(params.upper, params.lower)
    # below n_safe a ratio factor may still be negative or non-monotone
    n_safe = 1 + max(
        [0] + [math.ceil(-u) for u, _ in pairs if u < 0] + [math.ceil(-l) for _, l in pairs if l < 0]
    )
    target_rel = ctx.ldexp(1, -(precision_bits + 8))

    term = ctx.mpf(1)
    total = ctx.mpf(1)
    abs_sum = ctx.mpf(1)
    tail_bound = None
    n_used = 0
    for n in range(_MAX_PFQ_TERMS):
        # rigorous tail bound after the term just added: each (u+m)/(l+m) is
        # monotone with limit 1 for m >= n, so it is capped by max(value, 1)
        if n >= n_safe:
            rho = abs(zf)
            for u, l in pairs:
                h = (u + n) / (l + n)
                if h > 1:
                    rho *= to_mpf(ctx, h)
            rho *= 1 + ctx.ldexp(1, -24)  # absorb rounding of the cap itself
            if rho < 1:
                bound = abs(term) * rho / (1 - rho)
                if bound <= target_rel * max(abs(total), ctx.mpf(1)):
                    tail_bound = bound
                    n_used = n
                    break
        ratio = Fraction(1, n + 1)
        for u in params.upper:
            ratio *= u + n
        for l in params.lower:
            ratio /= l + n
        term = term * to_mpf(ctx, ratio) * zf
        total += term
        abs_sum += abs(term)
        if term == 0:
            tail_bound = ctx.mpf(0)
            n_used = n + 1
            break
    if tail_bound is None:
        raise NoConvergence(f"tail bound not reached within {_MAX_PFQ_TERMS} terms")
    rounding = (3 * n_used + 8) * ulp_scale(ctx) * abs_sum
    return BigFloat(total, precision_bits, tail_bound + rounding)


# ---------------------------------------------------------------------------
# incomplete beta function


def incomplete_beta_numeric(z, alpha, beta, precision_bits: int = 128) -> BigFloat:
    """B(z; alpha, beta) = int_0^z x^(alpha-1) (1-x)^(beta-1) dx for z in [0,1).

    Uses B(z;a,b) = (z^a/a) 2F1(a, 1-b; a+1; z), the standard series route,
    which the tests validate against adaptive quadrature of the integral.
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    z = as_fraction(z)
    if alpha <= 0 or beta <= 0:
        raise DomainError(f"incomplete beta needs alpha, beta > 0, got {alpha}, {beta}")
    if not 0 <= z < 1:
        raise DomainError(f"incomplete beta implemented for 0 <= z < 1, got {z}")
    ctx = context(precision_bits)
    if z == 0:
        return BigFloat(ctx.mpf(0), precision_bits, ctx.mpf(0))
    f = pfq_eval(PFQParams((alpha, 1 - beta), (alpha + 1,), z), precision_bits + 16)
    prefactor = ctx.power(to_mpf(ctx, z), to_mpf(ctx, alpha)) / to_mpf(ctx, alpha)
    value = prefactor * f.value
    err = abs(prefactor) * f.error_bound + 8 * ulp_scale(ctx) * abs(value)
    return BigFloat(value, precision_bits, err)


@lru_cache(maxsize=None)
def incomplete_beta_exact(alpha) -> PiExtValue:
    """Exact B(1/4; alpha, 1/2) on the half-integer lattice alpha >= 1/2.

    Anchored at B(1/4;1/2,1/2) = pi/3 and B(1/4;1,1/2) = 2 - sqrt3, climbing
    with B(x;a+1,b) = a/(a+b) B(x;a,b) - x^a (1-x)^b / (a+b); at x = 1/4,
    b = 1/2 the subtracted term is rational * sqrt3, so the half-integer
    chain stays in Q*pi + Q*sqrt3 and the integer chain in Q + Q*sqrt3.
    """
    alpha = as_fraction(alpha)
    if alpha <= 0 or (2 * alpha).denominator != 1:
        raise DomainError(f"exact incomplete beta needs alpha in {{1/2, 1, 3/2, ...}}, got {alpha}")
    if alpha == Fraction(1, 2):
        return PiExtValue(c_pi=Fraction(1, 3))
    if alpha == 1:
        return PiExtValue(c_one=2, c_sqrt3=-1)
    prev = alpha - 1
    # (1/4)^prev is rational for both integer and half-integer prev
    if prev.denominator == 1:
        quarter_pow = Fraction(1, 4) ** int(prev)
    else:
        quarter_pow = Fraction(1, 4) ** int(prev - Fraction(1, 2)) * Fraction(1, 2)
    step = incomplete_beta_exact(prev).scale(prev / (prev + Fraction(1, 2)))
    return step - PiExtValue(c_sqrt3=quarter_pow / 2 / (prev + Fraction(1, 2)))


# ---------------------------------------------------------------------------
# real-argument central binomial coefficients and exact gamma ratios


def _is_half_integer_nonpositive(a: Fraction) -> bool:
    return (2 * a).denominator == 1 and a <= 0


def central_binomial_exact(a: int) -> Fraction:
    """C(2a, a) for integer a >= 1, exactly."""
    if a < 1:
        raise DomainError(f"exact central binomial needs integer a >= 1, got {a}")
    return Fraction(math.comb(2 * a, a))


def real_central_binomial(a, precision_bits: int = 128) -> BigFloat:
    """C(2a, a) = Gamma(2a+1)/Gamma(a+1)^2 for real a outside the poles."""
    a = as_fraction(a)
    if _is_half_integer_nonpositive(a):
        raise PoleError(f"central binomial has a gamma pole at a = {a}")
    ctx = context(precision_bits)
    af = to_mpf(ctx, a)
    value = ctx.gamma(2 * af + 1) / ctx.gamma(af + 1) ** 2
    return BigFloat(value, precision_bits, 16 * ulp_scale(ctx) * abs(value))


def _double_factorial_odd(m: int) -> int:
    """(2m+1)!! = 1 * 3 * ... * (2m+1)."""
    result = 1
    for j in range(1, 2 * m + 2, 2):
        result *= j
    return result


def exact_gamma_ratio(a) -> PiExtValue:
    """Gamma(a+1)^2 / Gamma(2a+1), exact on the half-integer lattice a > 0.

    Rational for integer a (the reciprocal central binomial); a rational
    multiple of pi for half-integer a, via Gamma(m+3/2) = (2m+1)!!/2^(m+1) sqrt(pi).
    """
    a = as_fraction(a)
    if a <= 0 or (2 * a).denominator != 1:
        raise DomainError(f"exact gamma ratio needs a in {{1/2, 1, 3/2, ...}}, got {a}")
    if a.denominator == 1:
        return PiExtValue.rational(Fraction(1, math.comb(2 * a.numerator, a.numerator)))
    m = (a - Fraction(1, 2)).numerator  # a = m + 1/2
    num = Fraction(_double_factorial_odd(m)) ** 2
    den = Fraction(4) ** (m + 1) * math.factorial(2 * m + 1)
    return PiExtValue.pi_multiple(num / den)


def central_binomial_reciprocal_seed(ctx, a: Fraction):
    """Gamma(a+1)^2/Gamma(2a+1) as an mpf, routed through the exact form
    when a sits on the half-integer lattice (no float gamma involved)."""
    if (2 * a).denominator == 1:
        if a > 0:
            g = exact_gamma_ratio(a)
            if g.c_pi:
                return to_mpf(ctx, g.c_pi) * ctx.pi
            return to_mpf(ctx, g.c_one)
        if a.denominator == 2:
            return ctx.mpf(0)  # Gamma(2a+1) pole: the reciprocal vanishes
    af = to_mpf(ctx, a)
    return ctx.gamma(af + 1) ** 2 / ctx.gamma(2 * af + 1)
