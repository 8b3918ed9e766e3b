"""
Verification reports

Every descent check produces a CheckReport {check, indices, verdict,
witness}. Verdicts say whether the checked identity holds; the witness
carries the computed defect data as canonical text, including whether the
defect is trivial.
"""

from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class CheckReport:
    """Result of one triple, quadruple or quintuple check."""

    check: str
    indices: tuple[str, ...]
    verdict: Verdict
    witness: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    @property
    def trivial(self) -> bool:
        return self.passed and self.witness.get("trivial", "true") == "true"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "indices": list(self.indices),
            "verdict": self.verdict.value,
            "witness": dict(self.witness),
        }


def flag(value: bool) -> str:
    return "true" if value else "false"


@dataclass(frozen=True)
class VerificationSummary:
    """Reports of a whole run, merged in index order."""

    reports: tuple[CheckReport, ...]

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def trivial(self) -> bool:
        return all(report.trivial for report in self.reports)

    @property
    def headline(self) -> str:
        if not self.passed:
            failed = sum(1 for report in self.reports if not report.passed)
            return f"verification failed: {failed} of {len(self.reports)} checks"
        if self.trivial:
            return "all defects trivial"
        nontrivial = sum(1 for report in self.reports if not report.trivial)
        return f"all checks passed; {nontrivial} non-trivial central defects"

    def to_dict(self) -> dict:
        return {
            "summary": self.headline,
            "passed": self.passed,
            "reports": [report.to_dict() for report in self.reports],
        }
