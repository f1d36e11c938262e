"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines; every criterion carries its stated tolerance and runtime budget.
"""

import random
import time
from fractions import Fraction as F

import mpmath

from hlcbs.closedform import (
    phi_neg_closed,
    phi_neg_hyper,
    phi_pos_hyper,
    euler_transform_defect,
    zeta_exact,
)
from hlcbs.exact import BiPoly, PiExtValue, UniPoly
from hlcbs.polyfam import (
    alpha,
    bm_p_poly,
    bm_q_poly,
    eulerian,
    p_a_poly,
    p_from_eulerian,
    p_poly,
    poly_bernoulli,
    q_poly,
)
from hlcbs.series import SeriesQuery, phi_numeric
from hlcbs.verify import VerifyConfig, run_all


class _Criterion:
    """Times a criterion and prints one pass/fail line when it closes."""

    def __init__(self, name, budget_seconds):
        self.name = name
        self.budget = budget_seconds

    def __enter__(self):
        self.started = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.started
        status = "PASS" if exc_type is None and elapsed < self.budget else "FAIL"
        print(f"[{status}] {self.name} ({elapsed:.2f}s, budget {self.budget}s)")
        if exc_type is None:
            assert elapsed < self.budget, f"{self.name} exceeded {self.budget}s ({elapsed:.2f}s)"
        return False


def test_criterion_1_exact_special_values():
    expected = [
        (0, F(1), PiExtValue(c_sqrt3pi=F(1, 9))),  # value pi/(3 sqrt3)
        (4, F(2), PiExtValue(c_one=F(17, 6), c_sqrt3pi=F(74, 243))),
        (0, F(3, 2), PiExtValue(c_pi=F(-1, 2), c_sqrt3pi=F(1, 3))),
        (3, F(7, 2), PiExtValue(c_pi=F(-935, 2048), c_sqrt3pi=F(10, 27))),
    ]
    with _Criterion("criterion 1: exact special-value reproduction", 1.0):
        for k, a, value in expected:
            got = zeta_exact(k, a)
            assert got == value, (k, a, got.to_text())


def test_criterion_2_table_reproduction():
    reference_grid = [
        [1, 1, 1, 1, 1],
        [1, 2, 4, 8, 16],
        [1, 4, 14, 46, 146],
        [1, 8, 46, 230, 1066],
        [1, 16, 146, 1066, 6902],
    ]
    q_rows = {
        -1: UniPoly((1,)),
        0: UniPoly((1,)),
        1: UniPoly((1, 2)),
        2: UniPoly((1, 10, 4)),
        3: UniPoly((1, 36, 60, 8)),
    }
    p_rows = {-1: UniPoly(), 0: UniPoly((1,)), 1: UniPoly((3,)), 2: UniPoly((7, 8)), 3: UniPoly((15, 70, 20))}
    pa_rows = {
        -1: BiPoly(),
        0: BiPoly.const(1),
        1: BiPoly((UniPoly((1, 2)), UniPoly((2, -2)))),
        2: BiPoly((UniPoly((1, 2, 4)), UniPoly((10, 6, -8)), UniPoly((4, -8, 4)))),
        3: BiPoly(
            (
                UniPoly((1, 2, 4, 8)),
                UniPoly((36, 42, 16, -24)),
                UniPoly((60, -20, -44, 24)),
                UniPoly((8, -24, 24, -8)),
            )
        ),
    }
    with _Criterion("criterion 2: reference tables reproduced exactly", 1.0):
        for k in range(5):
            for n in range(5):
                assert poly_bernoulli(n, -k) == reference_grid[k][n], (n, k)
        for k, row in q_rows.items():
            assert q_poly(k) == row, ("q", k)
        for k, row in p_rows.items():
            assert p_poly(k) == row, ("p", k)
        for k, row in pa_rows.items():
            assert p_a_poly(k) == row, ("pa", k)


def test_criterion_3_weighted_diagonal_identity():
    with _Criterion("criterion 3: (2/3)^n p_n(1/4) = poly-Bernoulli antidiagonal, n <= 10", 1.0):
        for n in range(11):
            lhs = F(2, 3) ** n * p_poly(n)(F(1, 4))
            rhs = sum(poly_bernoulli(n - k, -k) for k in range(n + 1))
            assert lhs == rhs, n
        assert F(2, 3) ** 3 * p_poly(3)(F(1, 4)) == 10


def test_criterion_4_oracle_equivalence():
    tolerance = mpmath.mpf(10) ** -20
    ks = [0, 1, 2, 3, 4]
    a_grid = [F(1, 2), F(1), F(5, 4), F(3, 2), F(2), F(7, 2)]
    z_grid = [F(1, 5), F(1, 2)]
    worst = mpmath.mpf(0)
    with _Criterion("criterion 4: closed forms vs series oracle at 1e-20, 128-bit", 30.0):
        for k in ks:
            for a in a_grid:
                for z in z_grid:
                    neg_oracle = phi_numeric(SeriesQuery(1 - k, a, z, 128))
                    dev = abs(phi_neg_closed(k, a, z, 128).value - neg_oracle.value)
                    worst = max(worst, dev)
                    assert dev < tolerance, ("neg_closed", k, a, z, dev)
                    if k >= 1:
                        pos_oracle = phi_numeric(SeriesQuery(k, a, z, 128))
                        dev = abs(phi_pos_hyper(k, a, z, 128).value - pos_oracle.value)
                        worst = max(worst, dev)
                        assert dev < tolerance, ("pos_hyper", k, a, z, dev)
                        dev = abs(phi_neg_hyper(k, a, z, 128).value - neg_oracle.value)
                        worst = max(worst, dev)
                        assert dev < tolerance, ("neg_hyper", k, a, z, dev)
        print(f"    worst deviation over the grid: {mpmath.nstr(worst, 4)}")


def test_criterion_5_exact_vanishing_sweep():
    rng = random.Random(20240811)
    sweep = []
    while len(sweep) < 10:
        a = F(rng.randint(-40, 40), rng.randint(2, 12))
        if (2 * a).denominator != 1:
            sweep.append(a)
    with _Criterion("criterion 5: exact coefficient-vanishing sweep, n <= 30, 10 seeded a", 10.0):
        for a in sweep:
            for n in range(31):
                assert euler_transform_defect(n, a) == 0, (n, a)


def test_criterion_6_structural_identities():
    rng = random.Random(987654321)
    random_a = [F(rng.randint(-30, 30), rng.randint(1, 10)) for _ in range(10)]
    with _Criterion("criterion 6: structural identities exact for n <= 8", 5.0):
        for n in range(9):
            assert p_from_eulerian(n) == p_a_poly(n), ("ptoE", n)
            assert p_a_poly(n).substitute_a(0) == q_poly(n), ("a=0", n)
            assert p_a_poly(n).substitute_a(1) == p_poly(n), ("a=1", n)
            assert bm_q_poly(n) == q_poly(n - 1), ("qE", n)
            assert bm_p_poly(n) == p_poly(n), ("bm_p", n)
            for a in random_a:
                assert alpha(n, a) == F(2, 3) ** n * p_a_poly(n).substitute_a(a)(F(1, 4)), ("alpha", n, a)
        # the q identity restated through the Eulerian polynomial itself
        for n in range(9):
            assert eulerian(n).substitute_a(F(1, 2)) * F(2) ** n == q_poly(n - 1)


def test_criterion_7_full_verification_suite():
    config = VerifyConfig()
    with _Criterion("criterion 7: full verify suite 17/17, deterministic", 60.0):
        reports = run_all(config)
        assert len(reports) == 17
        failed = [r.check_id for r in reports if not r.passed]
        assert not failed, f"failed checks: {failed}"
        # determinism: identical verdicts and deviations on a second run
        second = run_all(VerifyConfig())
        first_keys = [(r.check_id, r.passed, str(r.max_abs_deviation), r.comparisons) for r in reports]
        second_keys = [(r.check_id, r.passed, str(r.max_abs_deviation), r.comparisons) for r in second]
        assert first_keys == second_keys
        print("    17/17 checks passed, deterministic across runs")
