"""Direct summation of the Hurwitz-Lerch type central binomial series.

This is the kit's brute-force numeric oracle: every closed form elsewhere is
compared against the sums computed here.  The series is

    Phi(s, a, z) = sum_{n>=0} (2z)^(2(n+a)) / ( C(2(n+a), n+a) (n+a)^s ),

with the real-argument binomial C(x,y) = Gamma(x+1)/(Gamma(y+1) Gamma(x-y+1)).
The reciprocal binomial obeys r(nu+1) = r(nu) (nu+1)/(2(2nu+1)), so each term
costs one rational update; the term ratio tends to z^2, which yields a
provable geometric tail bound (see :func:`phi_numeric`).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, as_fraction
from .floats import BigFloat, context, to_mpf, ulp_scale
from .hyper import central_binomial_reciprocal_seed
from .report import CheckReport, Tally

DEFAULT_MAX_TERMS = 10_000


class BudgetExceeded(RuntimeError):
    """The requested error bound was not met within max_terms."""


def _is_half_integer_nonpositive(a: Fraction) -> bool:
    return (2 * a).denominator == 1 and a <= 0


def _is_integer(x) -> bool:
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


@dataclass(frozen=True)
class SeriesQuery:
    """One evaluation request; z = 1/2 is the zeta-series case."""

    s: object  # real; int/Fraction preferred, float accepted
    a: Fraction
    z: Fraction
    precision_bits: int = 128
    max_terms: int = DEFAULT_MAX_TERMS

    def __init__(self, s, a, z, precision_bits=128, max_terms=DEFAULT_MAX_TERMS):
        a = as_fraction(a)
        z = as_fraction(z) if not isinstance(z, float) else Fraction(z)
        if _is_half_integer_nonpositive(a):
            raise DomainError(f"a must avoid half-integers <= 0, got {a}")
        if not 0 <= z < 1:
            raise DomainError(f"z must lie in [0, 1), got {z}")
        if a < 0 and not _is_integer(s):
            raise DomainError("negative a needs integer s (negative bases in (n+a)^s)")
        if precision_bits < 32:
            raise DomainError("precision_bits must be >= 32")
        if max_terms < 1:
            raise DomainError("max_terms must be positive")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "precision_bits", precision_bits)
        object.__setattr__(self, "max_terms", max_terms)


def _phi_sum(ctx, s, a, z, max_terms, target_scale, allow_shifted=False):
    """Core summation; returns (value, error_bound, terms_used).

    With ``allow_shifted`` the shifted half-integer a <= 0 is admitted: its
    leading terms vanish because the reciprocal binomial sits on gamma poles.
    """
    zf = to_mpf(ctx, z)
    if z == 0:
        return ctx.mpf(0), ctx.mpf(0), 0
    four_z_sq = (2 * zf) ** 2
    s_int = int(s) if _is_integer(s) else None
    sf = None if s_int is not None else to_mpf(ctx, s)

    n_start = 0
    if allow_shifted and a <= 0:
        # reciprocal binomial vanishes while 2(n+a)+1 <= 0
        while 2 * (n_start + a) + 1 <= 0:
            n_start += 1
    recip = central_binomial_reciprocal_seed(ctx, a + n_start)
    power = ctx.power(2 * zf, 2 * to_mpf(ctx, a + n_start))

    total = ctx.mpf(0)
    abs_sum = ctx.mpf(0)
    slack = 1 + ctx.ldexp(1, -24)
    for n in range(n_start, n_start + max_terms):
        nu = a + n
        nuf = to_mpf(ctx, nu)
        if s_int is not None:
            nu_pow = to_mpf(ctx, nu ** (-s_int))
        else:
            nu_pow = ctx.power(nuf, -sf)
        term = power * recip * nu_pow
        total += term
        abs_sum += abs(term)
        # ratio of |T_{m+1}/T_m| for m >= n is capped by
        # z^2 (1 + 1/(2 nu + 1)) max(1, (nu/(nu+1))^s): both factors monotone
        if nu > 0 and n > n_start:
            rho = four_z_sq / 4 * to_mpf(ctx, (4 * nu + 4) / (4 * nu + 2))
            if (s_int is not None and s_int < 0) or (s_int is None and s < 0):
                rho *= ctx.power(nuf / (nuf + 1), to_mpf(ctx, s))
            rho *= slack
            if rho < 1:
                bound = abs(term) * rho / (1 - rho)
                if bound <= target_scale * max(abs(total), ctx.mpf(1)):
                    rounding = (3 * (n - n_start) + 12) * ulp_scale(ctx) * abs_sum
                    return total, bound + rounding, n - n_start + 1
        power *= four_z_sq
        recip *= to_mpf(ctx, (nu + 1) / (2 * (2 * nu + 1)))
    raise BudgetExceeded(f"error bound not met within {max_terms} terms")


def phi_numeric(query: SeriesQuery) -> BigFloat:
    """Brute-force sum of Phi(s, a, z) with a guaranteed error bound."""
    ctx = context(query.precision_bits)
    target = ctx.ldexp(1, -(query.precision_bits + 8))
    value, bound, _ = _phi_sum(ctx, query.s, query.a, query.z, query.max_terms, target)
    return BigFloat(value, query.precision_bits, bound)


def phi_terms(query: SeriesQuery, count: int):
    """First ``count`` series terms as mpf values (diagnostic/monotonicity aid)."""
    ctx = context(query.precision_bits)
    zf = to_mpf(ctx, query.z)
    if query.z == 0:
        return [ctx.mpf(0)] * count
    recip = central_binomial_reciprocal_seed(ctx, query.a)
    power = ctx.power(2 * zf, 2 * to_mpf(ctx, query.a))
    s_int = int(query.s) if _is_integer(query.s) else None
    out = []
    for n in range(count):
        nu = query.a + n
        if s_int is not None:
            nu_pow = to_mpf(ctx, nu ** (-s_int))
        else:
            nu_pow = ctx.power(to_mpf(ctx, nu), -to_mpf(ctx, query.s))
        out.append(power * recip * nu_pow)
        power *= (2 * zf) ** 2
        recip *= to_mpf(ctx, (nu + 1) / (2 * (2 * nu + 1)))
    return out


def zeta_hcb_numeric(s, a, precision_bits: int = 128, max_terms: int = DEFAULT_MAX_TERMS) -> BigFloat:
    """zeta(s, a): the z = 1/2 slice of the series."""
    return phi_numeric(SeriesQuery(s, a, Fraction(1, 2), precision_bits, max_terms))


# ---------------------------------------------------------------------------
# built-in structural checks on the series itself


def half_integer_shift_check(s, m: int, z, precision_bits: int = 128) -> CheckReport:
    """Verify Phi(s, -m + 1/2, z) = Phi(s, 1/2, z) for integer m >= 1.

    The left side is summed from n = 0 with the shifted parameter; its first
    m terms vanish because the reciprocal real binomial hits gamma poles.
    """
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    z = as_fraction(z)
    started = time.perf_counter()
    ctx = context(precision_bits)
    target = ctx.ldexp(1, -(precision_bits + 8))
    shifted, bound_l, _ = _phi_sum(
        ctx, s, Fraction(1 - 2 * m, 2), z, DEFAULT_MAX_TERMS, target, allow_shifted=True
    )
    base, bound_r, _ = _phi_sum(ctx, s, Fraction(1, 2), z, DEFAULT_MAX_TERMS, target)
    tally = Tally()
    tally.numeric(abs(shifted - base), 2 * (bound_l + bound_r))
    return tally.report(
        "half_shift",
        f"s={s}, m={m}, z={z}",
        time.perf_counter() - started,
    )


def euler_operator_check(s, a, z, h=Fraction(1, 2**20), precision_bits: int = 128) -> CheckReport:
    """Check (1/2) z d/dz Phi(s,a,z) = Phi(s-1,a,z) two ways.

    Numerically via central differences at step h (O(h^2) budget estimated by
    Richardson halving), and exactly term by term in rational arithmetic when
    (s, a, z) allow it: applying (1/2) z d/dz to the n-th summand multiplies
    it by (n+a), which is precisely the s -> s-1 term.
    """
    a = as_fraction(a)
    z = as_fraction(z)
    h = as_fraction(h)
    if not (0 <= z - h and z + h < 1):
        raise DomainError("need 0 <= z-h and z+h < 1")
    started = time.perf_counter()
    ctx = context(precision_bits + 64)
    prec = precision_bits + 64
    target = ctx.ldexp(1, -(prec + 8))
    tally = Tally()

    def phi_at(s_val, z_val):
        value, bound, _ = _phi_sum(ctx, s_val, a, z_val, DEFAULT_MAX_TERMS, target)
        return value, bound

    hf = to_mpf(ctx, h)
    zf = to_mpf(ctx, z)
    plus, b1 = phi_at(s, z + h)
    minus, b2 = phi_at(s, z - h)
    lowered, b3 = phi_at(s - 1, z)
    fd = zf / 2 * (plus - minus) / (2 * hf)
    # Richardson estimate of the O(h^2) truncation error from halving h
    plus2, b4 = phi_at(s, z + h / 2)
    minus2, b5 = phi_at(s, z - h / 2)
    fd2 = zf / 2 * (plus2 - minus2) / hf
    richardson = abs(fd - fd2) * 4 / 3
    series_err = zf / 2 * (b1 + b2 + b4 + b5) / hf + b3
    tol = 4 * richardson + 2 * series_err + ctx.ldexp(1, -(precision_bits // 2))
    tally.numeric(abs(fd - lowered), tol)

    # exact term-by-term check (rational cofactors; any pi factor is common)
    exact_done = False
    if _is_integer(s) and (2 * a).denominator == 1 and a > 0:
        s_int = int(s)
        for n in range(21):
            nu = a + n
            lhs = nu * _term_rational_cofactor(n, s_int, a, z)
            rhs = _term_rational_cofactor(n, s_int - 1, a, z)
            tally.exact(lhs == rhs)
        exact_done = True

    grid = f"s={s}, a={a}, z={z}, h={h}" + ("" if exact_done else " (exact part skipped: off-lattice)")
    return tally.report("diff_relation", grid, time.perf_counter() - started)


def _term_rational_cofactor(n: int, s: int, a: Fraction, z: Fraction) -> Fraction:
    """Rational part of the n-th summand for lattice a and integer s.

    For integer a the summand is rational; for half-integer a it is this
    rational times pi (the reciprocal binomial contributes a pi), and the pi
    factor cancels in the identity being tested.
    """
    from .hyper import exact_gamma_ratio

    nu = a + n
    ratio = exact_gamma_ratio(nu)
    recip = ratio.c_one if ratio.c_one else ratio.c_pi
    return (2 * z) ** int(2 * nu) * recip * nu ** (-s)
