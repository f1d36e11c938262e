"""Registry of named, parameter-swept identity checks.

Each check compares an exact or numeric left side against the corresponding
right side over a grid and yields a :class:`CheckReport`.  Numeric tolerances
default to twice the sum of both sides' reported error bounds, so honest
bounds make every check self-calibrating; rational-arithmetic checks have no
tolerance at all.  Random rational sweeps draw from a seeded generator whose
seed is recorded in the report.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import closedform, polyfam, series
from .exact import PiExtValue, piext_to_float
from .floats import context, to_mpf, ulp_scale
from .hyper import exact_gamma_ratio
from .report import CheckReport, Tally


class UnknownCheck(KeyError):
    """Requested check id is not in the registry."""


@dataclass
class VerifyConfig:
    precision_bits: int = 128
    seed: int = 20240811
    tolerance: object = None  # numeric override; None keeps self-calibration
    grid: dict = field(default_factory=dict)

    def tol(self, computed):
        return computed if self.tolerance is None else self.tolerance

    def grid_get(self, key, default):
        return self.grid.get(key, default)


def _random_rationals(rng, count, lattice_free=True):
    """Random small rationals; optionally excluding the half-integer lattice."""
    out = []
    while len(out) < count:
        a = Fraction(rng.randint(-40, 40), rng.randint(2, 12))
        if lattice_free and (2 * a).denominator == 1:
            continue
        out.append(a)
    return out


def _closed_side_err(ctx, value):
    return 32 * ulp_scale(ctx) * abs(value)


# ---------------------------------------------------------------------------
# individual checks; each returns (grid description, Tally)


def _check_lehmer1(cfg):
    """Series against 2z arcsin(z)/sqrt(1-z^2) at a = 1, s = 1."""
    ctx = context(cfg.precision_bits)
    zs = cfg.grid_get("z", [Fraction(1, 10), Fraction(1, 4), Fraction(2, 5), Fraction(1, 2), Fraction(13, 20), Fraction(4, 5)])
    tally = Tally()
    for z in zs:
        lhs = series.phi_numeric(series.SeriesQuery(1, Fraction(1), z, cfg.precision_bits))
        zf = to_mpf(ctx, z)
        rhs = 2 * zf * ctx.asin(zf) / ctx.sqrt(1 - zf * zf)
        tally.numeric(abs(lhs.value - rhs), cfg.tol(2 * (lhs.error_bound + _closed_side_err(ctx, rhs))))
    return f"z in {{{', '.join(str(z) for z in zs)}}}", tally


def _weighted_series(ctx, k, z, precision_bits):
    """sum_{n>=1} (2n)^(k-1) (2z)^(2n) / C(2n,n), summed directly."""
    zf = to_mpf(ctx, z)
    term = to_mpf(ctx, Fraction(2) ** (k - 1) * Fraction(4, 2)) * zf * zf  # n = 1
    total = term
    abs_sum = abs(term)
    n = 1
    target = ctx.ldexp(1, -(precision_bits + 8))
    while True:
        # ratio factors are monotone with limit 1 (and z^2), as in phi_numeric
        growth = Fraction(n + 1, n) ** (k - 1)
        rho = zf * zf * to_mpf(ctx, Fraction(4 * n + 4, 4 * n + 2) * max(growth, Fraction(1)))
        rho *= 1 + ctx.ldexp(1, -24)
        if rho < 1:
            bound = abs(term) * rho / (1 - rho)
            if bound <= target * max(abs(total), ctx.mpf(1)):
                rounding = (3 * n + 12) * ulp_scale(ctx) * abs_sum
                return total, bound + rounding
        ratio = growth * Fraction(n + 1, 2 * (2 * n + 1))
        term = term * to_mpf(ctx, ratio) * (2 * zf) ** 2
        total += term
        abs_sum += abs(term)
        n += 1
        if n > 100_000:
            raise series.BudgetExceeded("weighted series did not meet its bound")


def _check_lehmer2(cfg):
    """Weighted series against the arcsine polynomial ladder; exact zeta membership."""
    ctx = context(cfg.precision_bits)
    ks = cfg.grid_get("k", [0, 1, 2, 3, 4])
    zs = cfg.grid_get("z", [Fraction(1, 4), Fraction(1, 2), Fraction(3, 5)])
    tally = Tally()
    for k in ks:
        for z in zs:
            lhs, lhs_err = _weighted_series(ctx, k, z, cfg.precision_bits)
            zf = to_mpf(ctx, z)
            zsq = z * z
            p_val = to_mpf(ctx, polyfam.p_poly(k - 1)(zsq))
            q_val = to_mpf(ctx, polyfam.q_poly(k - 1)(zsq))
            rhs = (
                zf
                / ctx.power(1 - zf * zf, to_mpf(ctx, Fraction(2 * k + 1, 2)))
                * (zf * ctx.sqrt(1 - zf * zf) * p_val + ctx.asin(zf) * q_val)
            )
            tally.numeric(abs(lhs - rhs), cfg.tol(2 * (lhs_err + _closed_side_err(ctx, rhs))))
    # zeta_CB(1-k) = (2/3)^k ( p_{k-1}(1/4)/2 + q_{k-1}(1/4) * pi/(3 sqrt3) ), exactly
    for k in range(0, 7):
        expected = PiExtValue(
            c_one=Fraction(2, 3) ** k * polyfam.p_poly(k - 1)(Fraction(1, 4)) / 2,
            c_sqrt3pi=Fraction(2, 3) ** k * polyfam.q_poly(k - 1)(Fraction(1, 4)) / 9,
        )
        tally.exact(closedform.zeta_exact(k, Fraction(1)) == expected)
    return f"k in {ks}, z in {{{', '.join(str(z) for z in zs)}}}; exact membership k <= 6", tally


_PROP1_GRID = dict(k=[1, 2, 3], a=[Fraction(1), Fraction(5, 4), Fraction(3, 2), Fraction(2)], z=[Fraction(1, 5), Fraction(1, 2)])


def _check_prop1_pos(cfg):
    tally = Tally()
    ks = cfg.grid_get("k", _PROP1_GRID["k"])
    az = cfg.grid_get("a", _PROP1_GRID["a"])
    zs = cfg.grid_get("z", _PROP1_GRID["z"])
    for k in ks:
        for a in az:
            for z in zs:
                lhs = closedform.phi_pos_hyper(k, a, z, cfg.precision_bits)
                rhs = series.phi_numeric(series.SeriesQuery(k, a, z, cfg.precision_bits))
                tally.numeric(abs(lhs.value - rhs.value), cfg.tol(2 * (lhs.error_bound + rhs.error_bound)))
    return f"k in {ks}, a in {{{', '.join(str(a) for a in az)}}}, z in {{{', '.join(str(z) for z in zs)}}}", tally


def _check_prop1_neg(cfg):
    tally = Tally()
    ks = cfg.grid_get("k", _PROP1_GRID["k"])
    az = cfg.grid_get("a", _PROP1_GRID["a"])
    zs = cfg.grid_get("z", _PROP1_GRID["z"])
    for k in ks:
        for a in az:
            for z in zs:
                lhs = closedform.phi_neg_hyper(k, a, z, cfg.precision_bits)
                rhs = series.phi_numeric(series.SeriesQuery(1 - k, a, z, cfg.precision_bits))
                tally.numeric(abs(lhs.value - rhs.value), cfg.tol(2 * (lhs.error_bound + rhs.error_bound)))
    return f"k in {ks}, a in {{{', '.join(str(a) for a in az)}}}, z in {{{', '.join(str(z) for z in zs)}}}", tally


def _check_diff_relation(cfg):
    """Euler-operator lowering: finite differences plus exact term-wise form."""
    grid = cfg.grid_get(
        "points",
        [
            (1, Fraction(1), Fraction(1, 4)),
            (0, Fraction(3, 2), Fraction(3, 10)),
            (2, Fraction(5, 4), Fraction(2, 5)),
            (-1, Fraction(2), Fraction(2, 5)),
        ],
    )
    tally = Tally()
    for s, a, z in grid:
        rep = series.euler_operator_check(s, a, z, precision_bits=cfg.precision_bits)
        tally.absorb(rep, override_tol=cfg.tolerance)
    return "; ".join(f"(s={s}, a={a}, z={z})" for s, a, z in grid), tally


def _check_thm31(cfg):
    """Euler-transformed Gauss form vs series; exact coefficient vanishing."""
    tally = Tally()
    az = cfg.grid_get("a", [Fraction(1), Fraction(5, 4), Fraction(3, 2), Fraction(2), Fraction(7, 2)])
    zs = cfg.grid_get("z", [Fraction(1, 5), Fraction(1, 2), Fraction(7, 10)])
    for a in az:
        for z in zs:
            lhs = closedform.phi_one_closed(a, z, cfg.precision_bits)
            rhs = series.phi_numeric(series.SeriesQuery(1, a, z, cfg.precision_bits))
            tally.numeric(abs(lhs.value - rhs.value), cfg.tol(2 * (lhs.error_bound + rhs.error_bound)))
    rng = random.Random(cfg.seed)
    sweep_a = _random_rationals(rng, 10, lattice_free=True)
    n_max = cfg.grid_get("n_max", 30)
    for a in sweep_a:
        for n in range(n_max + 1):
            tally.exact(closedform.euler_transform_defect(n, a) == 0)
    return (
        f"numeric a x z grid ({len(az)}x{len(zs)}); exact sweep n <= {n_max}, "
        f"10 rationals from seed {cfg.seed}"
    ), tally


def _check_ode_phi1(cfg):
    """First-order ODE for the s = 1 slice, via central differences.

    (1-z^2) z Phi'(1,a,z) - Phi(1,a,z) = (2a-1) z^(2a) * 4^a/(a C(2a,a)):
    the prefactor normalizes the plain hypergeometric solution to Phi.
    """
    from .hyper import central_binomial_reciprocal_seed

    tally = Tally()
    az = cfg.grid_get("a", [Fraction(1), Fraction(3, 2), Fraction(2)])
    zs = cfg.grid_get("z", [Fraction(1, 5), Fraction(2, 5)])
    work_bits = cfg.precision_bits + 64
    ctx = context(work_bits)
    h = Fraction(1, 2**20)
    hf = to_mpf(ctx, h)
    for a in az:
        for z in zs:
            def phi1(zz):
                return series.phi_numeric(series.SeriesQuery(1, a, zz, work_bits)).value

            zf = to_mpf(ctx, z)
            d = (phi1(z + h) - phi1(z - h)) / (2 * hf)
            lhs = (1 - zf * zf) * zf * d - phi1(z)
            pref = ctx.power(ctx.mpf(4), to_mpf(ctx, a)) * central_binomial_reciprocal_seed(ctx, a) / to_mpf(ctx, a)
            rhs = to_mpf(ctx, 2 * a - 1) * ctx.power(zf, 2 * to_mpf(ctx, a)) * pref
            tally.numeric(abs(lhs - rhs), cfg.tol(ctx.mpf(10) ** -8))
    return f"a in {{{', '.join(str(a) for a in az)}}}, z in {{{', '.join(str(z) for z in zs)}}}, h = 2^-20", tally


def _check_zenka(cfg):
    """Polynomial-ladder closed form vs series at mixed (k, a, z)."""
    tally = Tally()
    ks = cfg.grid_get("k", [0, 1, 2, 3, 4])
    az = cfg.grid_get("a", [Fraction(1), Fraction(5, 4), Fraction(3, 2), Fraction(2), Fraction(7, 2)])
    zs = cfg.grid_get("z", [Fraction(1, 5), Fraction(1, 2)])
    for k in ks:
        for a in az:
            for z in zs:
                lhs = closedform.phi_neg_closed(k, a, z, cfg.precision_bits)
                rhs = series.phi_numeric(series.SeriesQuery(1 - k, a, z, cfg.precision_bits))
                tally.numeric(abs(lhs.value - rhs.value), cfg.tol(2 * (lhs.error_bound + rhs.error_bound)))
    return f"k in {ks}, a in {{{', '.join(str(a) for a in az)}}}, z in {{{', '.join(str(z) for z in zs)}}}", tally


def _check_ptoE(cfg):
    tally = Tally()
    n_max = cfg.grid_get("n_max", 8)
    for n in range(n_max + 1):
        tally.exact(polyfam.p_from_eulerian(n) == polyfam.p_a_poly(n))
    return f"n <= {n_max}, exact coefficient-wise", tally


def _check_bm_pq(cfg):
    """Eulerian convolution for p_n and the companion q identity, exact."""
    tally = Tally()
    n_max = cfg.grid_get("n_max", 8)
    for n in range(n_max + 1):
        tally.exact(polyfam.bm_p_poly(n) == polyfam.p_poly(n))
    for n in range(n_max + 2):
        tally.exact(polyfam.bm_q_poly(n) == polyfam.q_poly(n - 1))
    return f"p identity n <= {n_max}; q identity n <= {n_max + 1}, exact", tally


def _check_bm1(cfg):
    """(2/3)^n p_n(1/4) = sum_k B_{n-k}^{(-k)}, exact."""
    tally = Tally()
    n_max = cfg.grid_get("n_max", 10)
    for n in range(n_max + 1):
        lhs = Fraction(2, 3) ** n * polyfam.p_poly(n)(Fraction(1, 4))
        rhs = sum(polyfam.poly_bernoulli(n - k, -k) for k in range(n + 1))
        tally.exact(lhs == rhs)
    return f"n <= {n_max}, exact", tally


def _check_p_interp(cfg):
    """p_n(0,x) = q_n(x) and p_n(1,x) = p_n(x), exact."""
    tally = Tally()
    n_max = cfg.grid_get("n_max", 8)
    for n in range(n_max + 1):
        tally.exact(polyfam.p_a_poly(n).substitute_a(0) == polyfam.q_poly(n))
    for n in range(-1, n_max + 1):
        tally.exact(polyfam.p_a_poly(n).substitute_a(1) == polyfam.p_poly(n))
    return f"n <= {n_max} (a=0 from n=0, a=1 from n=-1), exact", tally


def _check_alpha_rec(cfg):
    tally = Tally()
    rng = random.Random(cfg.seed)
    sweep_a = _random_rationals(rng, 10, lattice_free=False)
    n_max = cfg.grid_get("n_max", 8)
    for a in sweep_a:
        for n in range(n_max + 1):
            lhs = polyfam.alpha(n, a)
            rhs = Fraction(2, 3) ** n * polyfam.p_a_poly(n).substitute_a(a)(Fraction(1, 4))
            tally.exact(lhs == rhs)
    return f"n <= {n_max}, 10 rationals from seed {cfg.seed}, exact", tally


def _check_zetatokushu(cfg):
    """Exact/structured zeta values against the series oracle."""
    tally = Tally()
    ks = cfg.grid_get("k", [0, 1, 2, 3, 4, 5])
    lattice = cfg.grid_get(
        "a",
        [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3), Fraction(7, 2), Fraction(4)],
    )
    for k in ks:
        for a in lattice:
            exact_val = piext_to_float(closedform.zeta_exact(k, a), cfg.precision_bits)
            num = series.zeta_hcb_numeric(1 - k, a, cfg.precision_bits)
            tally.numeric(abs(exact_val.value - num.value), cfg.tol(2 * (exact_val.error_bound + num.error_bound)))
    for k in [0, 1, 2]:
        for a in [Fraction(5, 4), Fraction(7, 4)]:
            _, assembled = closedform.zeta_structured(k, a, cfg.precision_bits)
            num = series.zeta_hcb_numeric(1 - k, a, cfg.precision_bits)
            tally.numeric(abs(assembled.value - num.value), cfg.tol(2 * (assembled.error_bound + num.error_bound)))
    return f"exact: k in {ks} x lattice a <= 4; structured: k <= 2, a in {{5/4, 7/4}}", tally


def _check_shift(cfg):
    """zeta(1-k, a+1) = zeta(1-k, a) - a^(k-1)/C(2a,a): exact and numeric."""
    tally = Tally()
    ctx = context(cfg.precision_bits)
    for a in [1, 2, 3]:
        for k in range(0, 6):
            step = Fraction(a) ** (k - 1) * exact_gamma_ratio(Fraction(a)).c_one
            lhs = closedform.zeta_exact(k, Fraction(a + 1))
            rhs = closedform.zeta_exact(k, Fraction(a)) - PiExtValue.rational(step)
            tally.exact(lhs == rhs)
    for a in [Fraction(1), Fraction(3, 2), Fraction(2)]:
        for s in [-2, -1, 0, 1]:
            big = series.zeta_hcb_numeric(s, a, cfg.precision_bits)
            small = series.zeta_hcb_numeric(s, a + 1, cfg.precision_bits)
            ratio = exact_gamma_ratio(a)
            recip = to_mpf(ctx, ratio.c_one) if ratio.c_one else to_mpf(ctx, ratio.c_pi) * ctx.pi
            step_f = recip / ctx.power(to_mpf(ctx, a), to_mpf(ctx, s))
            tally.numeric(
                abs(small.value - (big.value - step_f)),
                cfg.tol(2 * (big.error_bound + small.error_bound) + _closed_side_err(ctx, step_f)),
            )
    return "exact: integer a in {1,2,3}, k <= 5; numeric: a in {1, 3/2, 2}, s in -2..1", tally


def _check_half_shift(cfg):
    tally = Tally()
    grid = cfg.grid_get("points", [(1, 1, Fraction(2, 5)), (0, 2, Fraction(1, 4)), (2, 3, Fraction(1, 2))])
    for s, m, z in grid:
        rep = series.half_integer_shift_check(s, m, z, cfg.precision_bits)
        tally.absorb(rep, override_tol=cfg.tolerance)
    return "; ".join(f"(s={s}, m={m}, z={z})" for s, m, z in grid), tally


def _check_examples(cfg):
    """The four worked special values, exact and numeric."""
    expected = [
        (0, Fraction(1), PiExtValue(c_sqrt3pi=Fraction(1, 9))),
        (4, Fraction(2), PiExtValue(c_one=Fraction(17, 6), c_sqrt3pi=Fraction(74, 243))),
        (0, Fraction(3, 2), PiExtValue(c_pi=Fraction(-1, 2), c_sqrt3pi=Fraction(1, 3))),
        (3, Fraction(7, 2), PiExtValue(c_pi=Fraction(-935, 2048), c_sqrt3pi=Fraction(10, 27))),
    ]
    tally = Tally()
    for k, a, value in expected:
        got = closedform.zeta_exact(k, a)
        tally.exact(got == value)
        num = series.zeta_hcb_numeric(1 - k, a, cfg.precision_bits)
        approx = piext_to_float(value, cfg.precision_bits)
        tally.numeric(abs(approx.value - num.value), cfg.tol(2 * (approx.error_bound + num.error_bound)))
    return "zeta(1,1), zeta(-3,2), zeta(1,3/2), zeta(-2,7/2)", tally


# ---------------------------------------------------------------------------
# registry

_REGISTRY = [
    ("lehmer1", _check_lehmer1),
    ("lehmer2", _check_lehmer2),
    ("prop1_pos", _check_prop1_pos),
    ("prop1_neg", _check_prop1_neg),
    ("diff_relation", _check_diff_relation),
    ("thm31", _check_thm31),
    ("ode_phi1", _check_ode_phi1),
    ("zenka", _check_zenka),
    ("ptoE", _check_ptoE),
    ("bm_pq", _check_bm_pq),
    ("bm1", _check_bm1),
    ("p_interp", _check_p_interp),
    ("alpha_rec", _check_alpha_rec),
    ("zetatokushu", _check_zetatokushu),
    ("shift", _check_shift),
    ("half_shift", _check_half_shift),
    ("examples", _check_examples),
]

_CHECKS = dict(_REGISTRY)

# alternate names for the merged pair-checks
ALIASES = {
    "bm_p": "bm_pq",
    "bm_q": "bm_pq",
    "p0_is_q": "p_interp",
    "p1_is_p": "p_interp",
}


def check_ids():
    return [check_id for check_id, _ in _REGISTRY]


def resolve_check_id(check_id: str) -> str:
    check_id = ALIASES.get(check_id, check_id)
    if check_id not in _CHECKS:
        raise UnknownCheck(f"unknown check id {check_id!r}; known: {', '.join(check_ids())}")
    return check_id


def run_check(check_id: str, config: VerifyConfig | None = None) -> CheckReport:
    """Run one registered check; deterministic for a fixed config."""
    config = config or VerifyConfig()
    check_id = resolve_check_id(check_id)
    started = time.perf_counter()
    grid, tally = _CHECKS[check_id](config)
    return tally.report(check_id, grid, time.perf_counter() - started)


def run_all(config: VerifyConfig | None = None, ids=None) -> list:
    """Run every registered check (or the given subset), in registry order."""
    config = config or VerifyConfig()
    if ids is None:
        selected = check_ids()
    else:
        selected = [resolve_check_id(i) for i in ids]
        selected = [cid for cid in check_ids() if cid in set(selected)]
    return [run_check(cid, config) for cid in selected]


def summarize(reports) -> str:
    lines = []
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        dev = rep.max_abs_deviation
        dev_text = dev if isinstance(dev, str) else f"max dev {float(dev):.3e}"
        lines.append(f"{rep.check_id:<14} {status}  [{rep.comparisons} comparisons, {dev_text}, {rep.elapsed_seconds * 1000:.0f} ms]")
    total = len(reports)
    passed = sum(1 for r in reports if r.passed)
    lines.append(f"{passed}/{total} checks passed")
    return "\n".join(lines)
