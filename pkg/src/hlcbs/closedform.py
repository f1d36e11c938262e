"""Closed-form evaluation of the series at integer first argument.

Numeric paths cover general parameters through hypergeometric
representations; on the integer/half-integer lattice the zeta-type values
are assembled exactly in the {1, sqrt3, pi, sqrt3*pi} basis from the
polynomial ladders, exact gamma ratios and the exact incomplete beta chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, PiExtValue, as_fraction
from .floats import BigFloat, context, to_mpf, ulp_scale
from .hyper import (
    PFQParams,
    central_binomial_reciprocal_seed,
    exact_gamma_ratio,
    incomplete_beta_exact,
    incomplete_beta_numeric,
    pfq_eval,
    pochhammer,
)
from .polyfam import p_a_poly, q_poly


def _validate(a: Fraction, z: Fraction):
    if (2 * a).denominator == 1 and a <= 0:
        raise DomainError(f"a must avoid half-integers <= 0, got {a}")
    if not 0 <= z < 1:
        raise DomainError(f"z must lie in [0, 1), got {z}")


def _prefactor(ctx, a: Fraction, z):
    """4^a * z^(2a) / C(2a, a) as an mpf."""
    zf = to_mpf(ctx, z)
    recip = central_binomial_reciprocal_seed(ctx, a)
    return ctx.power(ctx.mpf(4), to_mpf(ctx, a)) * ctx.power(zf, 2 * to_mpf(ctx, a)) * recip


def phi_pos_hyper(k: int, a, z, precision_bits: int = 128) -> BigFloat:
    """Phi(k, a, z) for k >= 1 via the (k+1)Fk representation.

    Phi(k,a,z) = 4^a/(C(2a,a) a^k) z^(2a)
                 * F(1, a,...,a ; a+1/2, a+1,...,a+1 ; z^2)
    with k upper copies of a and k-1 lower copies of a+1.
    """
    if k < 1:
        raise DomainError(f"phi_pos_hyper needs k >= 1, got {k}")
    a = as_fraction(a)
    z = as_fraction(z)
    _validate(a, z)
    ctx = context(precision_bits)
    if z == 0:
        return BigFloat(ctx.mpf(0), precision_bits, ctx.mpf(0))
    params = PFQParams((Fraction(1),) + (a,) * k, (a + Fraction(1, 2),) + (a + 1,) * (k - 1), z * z)
    f = pfq_eval(params, precision_bits + 16)
    pre = _prefactor(ctx, a, z) / to_mpf(ctx, a**k)
    value = pre * f.value
    err = abs(pre) * f.error_bound + 16 * ulp_scale(ctx) * abs(value)
    return BigFloat(value, precision_bits, err)


def phi_neg_hyper(k: int, a, z, precision_bits: int = 128) -> BigFloat:
    """Phi(1-k, a, z) for k >= 1 via the mirrored (k+1)Fk representation.

    Phi(1-k,a,z) = 4^a a^(k-1)/C(2a,a) z^(2a)
                   * F(1, a+1,...,a+1 ; a+1/2, a,...,a ; z^2),
    the a <-> a+1 mirror of :func:`phi_pos_hyper`.
    """
    if k < 1:
        raise DomainError(f"phi_neg_hyper needs k >= 1, got {k}")
    a = as_fraction(a)
    z = as_fraction(z)
    _validate(a, z)
    ctx = context(precision_bits)
    if z == 0:
        return BigFloat(ctx.mpf(0), precision_bits, ctx.mpf(0))
    params = PFQParams((Fraction(1),) + (a + 1,) * k, (a + Fraction(1, 2),) + (a,) * (k - 1), z * z)
    f = pfq_eval(params, precision_bits + 16)
    pre = _prefactor(ctx, a, z) * to_mpf(ctx, a ** (k - 1))
    value = pre * f.value
    err = abs(pre) * f.error_bound + 16 * ulp_scale(ctx) * abs(value)
    return BigFloat(value, precision_bits, err)


def phi_one_closed(a, z, precision_bits: int = 128) -> BigFloat:
    """Phi(1, a, z) through the Euler-transformed Gauss series.

    Phi(1,a,z) = 4^a/(C(2a,a) a) * z^(2a)/sqrt(1-z^2)
                 * 2F1(1/2, a-1/2; a+1/2; z^2).
    """
    a = as_fraction(a)
    z = as_fraction(z)
    _validate(a, z)
    ctx = context(precision_bits)
    if z == 0:
        return BigFloat(ctx.mpf(0), precision_bits, ctx.mpf(0))
    f = pfq_eval(PFQParams((Fraction(1, 2), a - Fraction(1, 2)), (a + Fraction(1, 2),), z * z), precision_bits + 16)
    zf = to_mpf(ctx, z)
    pre = _prefactor(ctx, a, z) / to_mpf(ctx, a) / ctx.sqrt(1 - zf * zf)
    value = pre * f.value
    err = abs(pre) * f.error_bound + 16 * ulp_scale(ctx) * abs(value)
    return BigFloat(value, precision_bits, err)


def phi_neg_closed(k: int, a, z, precision_bits: int = 128) -> BigFloat:
    """Phi(1-k, a, z) for k >= 0 from the polynomial ladder formula.

    2^(k-1) Phi(1-k,a,z) = 4^a z^(2a) / (2a C(2a,a) (1-z^2)^(k+1/2))
        * ( (2a-1) sqrt(1-z^2) p_{k-1}(a, z^2)
            + 2F1(1/2, a-1/2; a+1/2; z^2) q_{k-1}(z^2) ).
    Reduces to :func:`phi_one_closed` at k = 0 (p_{-1} = 0, q_{-1} = 1).
    """
    if k < 0:
        raise DomainError(f"phi_neg_closed needs k >= 0, got {k}")
    a = as_fraction(a)
    z = as_fraction(z)
    _validate(a, z)
    ctx = context(precision_bits)
    if z == 0:
        return BigFloat(ctx.mpf(0), precision_bits, ctx.mpf(0))
    f = pfq_eval(PFQParams((Fraction(1, 2), a - Fraction(1, 2)), (a + Fraction(1, 2),), z * z), precision_bits + 16)
    zf = to_mpf(ctx, z)
    one_minus = 1 - zf * zf
    p_val = p_a_poly(k - 1).substitute_a(a).eval_mpf(ctx, zf * zf)
    q_val = q_poly(k - 1).eval_mpf(ctx, zf * zf)
    p_term = to_mpf(ctx, 2 * a - 1) * ctx.sqrt(one_minus) * p_val
    q_term = f.value * q_val
    pre = (
        _prefactor(ctx, a, z)
        / (2 * to_mpf(ctx, a))
        / ctx.power(one_minus, to_mpf(ctx, Fraction(2 * k + 1, 2)))
    )
    scale = abs(ctx.ldexp(pre, 1 - k))
    value = ctx.ldexp(pre * (p_term + q_term), 1 - k)  # times 2^(1-k)
    err = scale * abs(q_val) * f.error_bound + 32 * ulp_scale(ctx) * scale * (abs(p_term) + abs(q_term))
    return BigFloat(value, precision_bits, err)


def euler_transform_defect(n: int, a) -> Fraction:
    """Coefficient that must vanish for the Euler-transformed Gauss form.

    Returns, exactly in rational arithmetic,

        sum_{m=0}^{n} (-1/2)_m (1/2-a-n)_m / ((1-a-n)_m m!)
        - (1/2)_n (a-1/2)_n / ((a)_n n!),

    which is identically zero for every n >= 0 and off-lattice a.  (The
    subtracted closed form carries (a)_n, as the inductive evaluation shows.)
    """
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    a = as_fraction(a)
    if (2 * a).denominator == 1:
        raise DomainError("a on the half-integer lattice makes a denominator vanish")
    half = Fraction(1, 2)
    total = Fraction(0)
    for m in range(n + 1):
        total += (
            pochhammer(-half, m)
            * pochhammer(half - a - n, m)
            / (pochhammer(1 - a - n, m) * math.factorial(m))
        )
    closed = pochhammer(half, n) * pochhammer(a - half, n) / (pochhammer(a, n) * math.factorial(n))
    return total - closed


# ---------------------------------------------------------------------------
# exact and structured zeta values


@dataclass(frozen=True)
class ZetaStructured:
    """Exact rational ingredients of zeta(1-k, a) per the ladder formula.

    The value reassembles as
        (2a-1) Gamma(a+1)^2 / (a Gamma(2a+1)) * (2/3)^k
        * ( rational_part + 4^(a-1) * (2/sqrt3) * B(1/4; a-1/2, 1/2) * q_part )
    with rational_part = p_{k-1}(a, 1/4) and q_part = q_{k-1}(1/4).
    """

    k: int
    a: Fraction
    rational_part: Fraction
    q_part: Fraction


def zeta_exact(k: int, a) -> PiExtValue:
    """Exact zeta(1-k, a) on the lattice a in {1/2, 1, 3/2, 2, ...}.

    Integer a lands in Q + Q*sqrt3*pi; half-integer a in Q*pi + Q*sqrt3*pi.
    At a = 1/2 the (2a-1) factor kills the polynomial part and the Gauss
    factor degenerates to 1, leaving (2/3)^k q_{k-1}(1/4) * pi/sqrt3.
    """
    if k < 0:
        raise DomainError(f"zeta_exact needs k >= 0, got {k}")
    a = as_fraction(a)
    if a <= 0 or (2 * a).denominator != 1:
        raise DomainError(f"zeta_exact needs a in {{1/2, 1, 3/2, ...}}, got {a} (use zeta_structured)")
    q_val = q_poly(k - 1)(Fraction(1, 4))
    if a == Fraction(1, 2):
        coeff = Fraction(2, 3) ** k * q_val
        return PiExtValue.sqrt3pi_multiple(coeff / 3)  # pi/sqrt3 = sqrt3*pi/3

    gamma_ratio = exact_gamma_ratio(a)
    p_val = p_a_poly(k - 1).substitute_a(a)(Fraction(1, 4))
    beta = incomplete_beta_exact(a - Fraction(1, 2))
    if a.denominator == 1:
        four_pow = Fraction(4) ** (int(a) - 1)
    else:
        four_pow = Fraction(4) ** int(a - Fraction(3, 2)) * 2  # 4^(a-1) = 2 * 4^(a-3/2)
    # bracket = (2a-1) p + (2/sqrt3) * 4^(a-1) (2a-1) B * q, inside Q(sqrt3) + Q(sqrt3)*pi
    two_a_minus_1 = 2 * a - 1
    bracket = beta.scale(0, Fraction(2, 3)) * (four_pow * two_a_minus_1 * q_val) + PiExtValue.rational(
        two_a_minus_1 * p_val
    )
    scaled = bracket.scale(Fraction(2, 3) ** k / a)
    if a.denominator == 1:
        return scaled.scale(gamma_ratio.c_one)
    return scaled.scale(gamma_ratio.c_pi).times_pi()


def zeta_structured(k: int, a, precision_bits: int = 128):
    """Exact rational skeleton plus numeric value of zeta(1-k, a), a > 1/2.

    Returns ``(ZetaStructured, BigFloat)``.  The incomplete beta factor needs
    a - 1/2 > 0, so a <= 1/2 is rejected (the numeric series path still
    covers those parameters).
    """
    if k < 0:
        raise DomainError(f"zeta_structured needs k >= 0, got {k}")
    a = as_fraction(a)
    if a <= Fraction(1, 2):
        raise DomainError(f"zeta_structured needs a > 1/2, got {a}")
    rational_part = p_a_poly(k - 1).substitute_a(a)(Fraction(1, 4))
    q_part = q_poly(k - 1)(Fraction(1, 4))
    record = ZetaStructured(k=k, a=a, rational_part=rational_part, q_part=q_part)

    ctx = context(precision_bits)
    beta = incomplete_beta_numeric(Fraction(1, 4), a - Fraction(1, 2), Fraction(1, 2), precision_bits + 16)
    af = to_mpf(ctx, a)
    recip = central_binomial_reciprocal_seed(ctx, a)  # Gamma(a+1)^2/Gamma(2a+1)
    pre = to_mpf(ctx, 2 * a - 1) * recip / af * to_mpf(ctx, Fraction(2, 3) ** k)
    beta_weight = ctx.power(ctx.mpf(4), af - 1) * 2 / ctx.sqrt(3)
    value = pre * (to_mpf(ctx, rational_part) + beta_weight * beta.value * to_mpf(ctx, q_part))
    err = abs(pre) * beta_weight * abs(to_mpf(ctx, q_part)) * beta.error_bound + 32 * ulp_scale(ctx) * abs(value)
    return record, BigFloat(value, precision_bits, err)
