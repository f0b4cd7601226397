from .check import CHECKS, DEFAULT_CHECKS, Check, get_check
from .runner import Report, SweepRunner, SweepSpec, default_jobs

__all__ = [
    "CHECKS",
    "DEFAULT_CHECKS",
    "Check",
    "get_check",
    "Report",
    "SweepRunner",
    "SweepSpec",
    "default_jobs",
]
