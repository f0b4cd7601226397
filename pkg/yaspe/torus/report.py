import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .poly import LaurentPolynomial

logger = logging.getLogger(__name__)

__all__ = ["VerificationReport", "compare"]


@dataclass(frozen=True, kw_only=True)
class VerificationReport:
    """A frozen record of one identity checked on one shape.

    Failed reports carry both sides of the identity and, where the failure
    is tied to a single path, a minimal `witness`.
    """

    check: str
    """Name of the check, eg ``"full_twist"``."""

    m: int
    """Shape parameter m."""

    n: int
    """Shape parameter n."""

    passed: bool
    """Whether the identity held."""

    lhs: Optional[LaurentPolynomial] = field(default=None, repr=False)
    """Left hand side, when the check compares polynomials."""

    rhs: Optional[LaurentPolynomial] = field(default=None, repr=False)
    """Right hand side, when the check compares polynomials."""

    witness: Optional[Dict[str, Any]] = None
    """Minimal failing data, eg the path and the disagreeing statistics."""

    detail: str = ""
    """Short human readable description."""

    def __bool__(self):
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "m": self.m,
            "n": self.n,
            "check": self.check,
            "pass": self.passed,
        }
        if self.lhs is not None:
            record["lhs"] = self.lhs.to_records()
        if self.rhs is not None:
            record["rhs"] = self.rhs.to_records()
        if self.witness is not None:
            record["witness"] = self.witness
        if self.detail:
            record["detail"] = self.detail
        return record


def compare(
    check: str, m: int, n: int, lhs: LaurentPolynomial, rhs: LaurentPolynomial
) -> VerificationReport:
    """Report for the exact equality ``lhs == rhs``."""
    passed = lhs == rhs
    if not passed:
        logger.warning(f"{check} failed for ({m}, {n}): {lhs} != {rhs}")
    return VerificationReport(check=check, m=m, n=n, passed=passed, lhs=lhs, rhs=rhs)
