"""Arbitrary-precision floating-point plumbing shared by the numeric layers.

Every numeric routine works inside a private mpmath context created at the
requested precision plus guard bits, so nothing mutates global mpmath state.
Results are returned as :class:`BigFloat`, which pairs the value with the
precision it was requested at and an absolute error bound the computation
actually guarantees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

MIN_PRECISION_BITS = 32
GUARD_BITS = 32


def context(precision_bits: int, guard: int = GUARD_BITS) -> mpmath.ctx_mp.MPContext:
    """A fresh mpmath context at ``precision_bits + guard`` bits."""
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}, got {precision_bits}")
    ctx = mpmath.mp.clone()
    ctx.prec = precision_bits + guard
    return ctx


def to_mpf(ctx, value):
    """Convert ``value`` (Fraction, int, float, str, mpf) in ``ctx``."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    return ctx.convert(value)


def ulp_scale(ctx) -> "mpmath.mpf":
    """One unit of relative rounding error at the context's working precision."""
    return ctx.ldexp(1, -ctx.prec + 1)


@dataclass(frozen=True)
class BigFloat:
    """An arbitrary-precision value with a guaranteed absolute error bound.

    ``value`` was computed at ``precision_bits`` plus internal guard bits;
    ``error_bound`` is an absolute bound on ``|value - true value|``.
    """

    value: object  # mpmath.mpf
    precision_bits: int
    error_bound: object  # mpmath.mpf, absolute

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return mpmath.nstr(self.value, max(self.precision_bits // 3, 8))
