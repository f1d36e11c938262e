"""Shared helpers for the test suite."""

from fractions import Fraction

import mpmath
import pytest


@pytest.fixture(scope="session")
def ctx():
    """A 256-bit mpmath context for reference computations in tests."""
    c = mpmath.mp.clone()
    c.prec = 256
    return c


def mpf_lit(ctx, digits: str):
    """Parse a decimal literal at the context's precision."""
    return ctx.mpf(digits)


def brute_force_zeta(ctx, s, a: Fraction, terms: int = 200):
    """Independent direct summation of the zeta-type series at z = 1/2.

    Deliberately written against mpmath's gamma directly, so it shares no
    code with the library paths it is used to check.
    """
    total = ctx.mpf(0)
    for n in range(terms):
        nu = ctx.mpf((a + n).numerator) / (a + n).denominator
        recip = ctx.gamma(nu + 1) ** 2 / ctx.gamma(2 * nu + 1)
        total += recip / nu**s
    return total
