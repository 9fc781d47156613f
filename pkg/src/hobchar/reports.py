"""Pass/fail reports for the built-in consistency checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    check: str
    n: int
    passed: bool
    first_mismatch: dict | None = None
    note: str | None = None  # human context for the pretty line; not serialized

    def to_dict(self) -> dict:
        out = {"check": self.check, "n": self.n, "pass": self.passed}
        if self.first_mismatch is not None:
            out["first_mismatch"] = dict(self.first_mismatch)
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} {self.check} n={self.n}"
        if self.note:
            msg += f" ({self.note})"
        if self.first_mismatch:
            mm = self.first_mismatch
            msg += (
                f" first mismatch at ({mm['row_label']}, {mm['col_label']}):"
                f" {mm['lhs']} != {mm['rhs']}"
            )
        return msg


def compare_matrices(check, n, row_labels, col_labels, lhs, rhs, note=None) -> CheckReport:
    """Entrywise comparison; the first differing entry is reported."""
    for i, row_label in enumerate(row_labels):
        for j, col_label in enumerate(col_labels):
            if lhs[i][j] != rhs[i][j]:
                return CheckReport(
                    check=check,
                    n=n,
                    passed=False,
                    first_mismatch={
                        "row_label": str(row_label),
                        "col_label": str(col_label),
                        "lhs": lhs[i][j],
                        "rhs": rhs[i][j],
                    },
                    note=note,
                )
    return CheckReport(check=check, n=n, passed=True, note=note)
