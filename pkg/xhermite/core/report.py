# xhermite/core/report.py
"""Check results and verification reports (JSON-serialisable)."""
import logging
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


class CheckResult(BaseModel):
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)
    status: CheckStatus
    witness: Optional[str] = None  # nonzero residual or message, verbatim

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS


class VerificationReport(BaseModel):
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: CheckResult) -> "VerificationReport":
        self.checks.append(check)
        return self

    def merge(self, *others: "VerificationReport") -> "VerificationReport":
        for other in others:
            self.checks.extend(other.checks)
        return self

    def summary(self) -> Dict[str, int]:
        counts = {s.value: 0 for s in CheckStatus}
        for c in self.checks:
            counts[c.status.value] += 1
        counts["total"] = len(self.checks)
        return counts

    def to_json(self) -> dict:
        return {"passed": self.passed, "summary": self.summary(), "checks": [c.model_dump(mode="json") for c in self.checks]}


def check_zero(name: str, params: Dict[str, Any], residual) -> CheckResult:
    """Pass iff ``residual`` (a Polynomial or RationalFunction) is identically zero."""
    if residual.is_zero:
        return CheckResult(name=name, params=params, status=CheckStatus.PASS)
    return CheckResult(name=name, params=params, status=CheckStatus.FAIL, witness=str(residual))


def check_true(name: str, params: Dict[str, Any], ok: bool, witness: Optional[str] = None) -> CheckResult:
    status = CheckStatus.PASS if ok else CheckStatus.FAIL
    return CheckResult(name=name, params=params, status=status, witness=None if ok else witness)


def run_check(name: str, params: Dict[str, Any], fn: Callable[[], CheckResult]) -> CheckResult:
    """Run ``fn``; an exception becomes an ``error`` result carrying the message."""
    try:
        return fn()
    except Exception as e:
        logger.exception("check %s failed with an exception (%s)", name, params)
        return CheckResult(name=name, params=params, status=CheckStatus.ERROR, witness=f"{type(e).__name__}: {e}")


def report_of(checks: Iterable[CheckResult]) -> VerificationReport:
    return VerificationReport(checks=list(checks))
