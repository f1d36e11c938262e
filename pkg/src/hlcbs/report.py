"""Outcome record for a named identity verification."""

from __future__ import annotations

from dataclasses import dataclass, field

EXACT = "exact"


@dataclass
class CheckReport:
    """Result of one named check: parameters swept, worst deviation, verdict.

    ``max_abs_deviation`` and ``tolerance`` are mpf values for numeric checks
    and the string ``"exact"`` for checks decided in rational arithmetic.
    ``passed`` holds iff every comparison met its tolerance (or held exactly).
    """

    check_id: str
    parameter_grid: str
    comparisons: int
    max_abs_deviation: object
    tolerance: object
    passed: bool
    elapsed_seconds: float = 0.0
    details: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        dev = self.max_abs_deviation
        tol = self.tolerance
        return {
            "check_id": self.check_id,
            "passed": self.passed,
            "max_abs_deviation": dev if isinstance(dev, str) else f"{float(dev):.6e}",
            "tolerance": tol if isinstance(tol, str) else f"{float(tol):.6e}",
            "comparisons": self.comparisons,
            "parameter_grid": self.parameter_grid,
            "elapsed_ms": round(self.elapsed_seconds * 1000.0, 3),
        }


class Tally:
    """Accumulates comparisons for one check."""

    def __init__(self):
        self.comparisons = 0
        self.max_dev = None  # mpf, None while only exact comparisons seen
        self.max_tol = None
        self.numeric_failures = 0
        self.exact_failures = 0
        self.saw_numeric = False

    def exact(self, ok: bool, note: str = ""):
        self.comparisons += 1
        if not ok:
            self.exact_failures += 1

    def numeric(self, dev, tol):
        self.comparisons += 1
        self.saw_numeric = True
        if self.max_dev is None or dev > self.max_dev:
            self.max_dev = dev
        if self.max_tol is None or tol > self.max_tol:
            self.max_tol = tol
        if not dev <= tol:
            self.numeric_failures += 1

    def absorb(self, rep: "CheckReport", override_tol=None):
        """Fold a sub-check's report into this tally.

        ``override_tol`` re-judges the numeric side against a fixed tolerance;
        a sub-report failure not explained by its numeric deviation is counted
        as an exact failure.
        """
        self.comparisons += rep.comparisons
        dev = rep.max_abs_deviation
        numeric_ok = True
        if not isinstance(dev, str):
            self.saw_numeric = True
            tol = rep.tolerance if override_tol is None else override_tol
            if self.max_dev is None or dev > self.max_dev:
                self.max_dev = dev
            if self.max_tol is None or tol > self.max_tol:
                self.max_tol = tol
            numeric_ok = dev <= tol
            if not numeric_ok:
                self.numeric_failures += 1
        if not rep.passed and numeric_ok:
            self.exact_failures += 1

    @property
    def passed(self) -> bool:
        return self.exact_failures == 0 and self.numeric_failures == 0

    def report(self, check_id: str, grid: str, elapsed: float) -> CheckReport:
        dev = self.max_dev if self.saw_numeric else EXACT
        tol = self.max_tol if self.saw_numeric else EXACT
        if not self.passed and not self.saw_numeric:
            dev = f"{self.exact_failures} exact comparisons failed"
        return CheckReport(
            check_id=check_id,
            parameter_grid=grid,
            comparisons=self.comparisons,
            max_abs_deviation=dev,
            tolerance=tol,
            passed=self.passed,
            elapsed_seconds=elapsed,
        )
