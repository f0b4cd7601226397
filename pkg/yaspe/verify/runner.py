import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import pandas as pd

from yaspe.torus.report import VerificationReport
from yaspe.torus.shape import TorusShape, coprime_shapes

from .check import CHECKS, DEFAULT_CHECKS, get_check

logger = logging.getLogger(__name__)

__all__ = ["SweepSpec", "SweepRunner", "Report", "default_jobs"]

JOBS_ENV = "YASPE_JOBS"


def default_jobs() -> int:
    """Worker count from the ``YASPE_JOBS`` environment variable, else 1."""
    value = os.environ.get(JOBS_ENV, "").strip()
    if not value:
        return 1
    try:
        jobs = int(value)
    except ValueError:
        raise ValueError(f"{JOBS_ENV} must be a positive integer, got {value!r}")
    if jobs < 1:
        raise ValueError(f"{JOBS_ENV} must be a positive integer, got {jobs}")
    return jobs


@dataclass(kw_only=True)
class SweepSpec:
    """Which checks to run over which shapes."""

    max_sum: int
    """Largest m + n visited."""

    checks: List[str] = field(default_factory=lambda: list(DEFAULT_CHECKS))
    """Names of registered checks, run in this order per shape."""

    min_sum: int = 2
    """Smallest m + n visited."""

    def __post_init__(self):
        if self.max_sum < 3:
            raise ValueError(f"max_sum must be at least 3, got {self.max_sum}")
        if not self.checks:
            raise ValueError("at least one check is required")
        # repeated names run once, first occurrence wins
        self.checks = list(dict.fromkeys(get_check(name).name for name in self.checks))

    @classmethod
    def parse(cls, max_sum: int, checks: Optional[str] = None) -> "SweepSpec":
        """From the comma separated command line form."""
        if checks is None:
            return cls(max_sum=max_sum)
        return cls(
            max_sum=max_sum, checks=[c for c in checks.split(",") if c.strip()]
        )

    def shapes(self) -> List[TorusShape]:
        return list(coprime_shapes(self.max_sum, self.min_sum))


def _run_shape(item: Tuple[int, int, Tuple[str, ...]]) -> List[VerificationReport]:
    """Run the named checks on one shape, module level so worker processes
    can unpickle it."""
    m, n, names = item
    shape = TorusShape(m=m, n=n)
    reports = []
    for name in names:
        cls = CHECKS[name]
        if not cls.applies_to(shape):
            continue
        check = cls(shape=shape)
        try:
            reports.append(check.run())
        except Exception as exc:
            logger.exception(f"{name} raised for {shape}")
            reports.append(check.failed(detail=str(exc), error=type(exc).__name__))
    return reports


@dataclass(kw_only=True)
class Report:
    """Outcome of a sweep: every report in shape then check order, plus
    timing."""

    spec: SweepSpec
    """Sweep that produced the results."""

    results: List[VerificationReport] = field(default_factory=list)
    """Per shape and check results."""

    wall_time: float = 0.0
    """Elapsed seconds."""

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[VerificationReport]:
        return [r for r in self.results if not r.passed]

    @property
    def frame(self) -> pd.DataFrame:
        """One row per result with columns m, n, check, pass and detail."""
        return pd.DataFrame(
            [(r.m, r.n, r.check, r.passed, r.detail) for r in self.results],
            columns=["m", "n", "check", "pass", "detail"],
        )

    @property
    def summary(self) -> pd.DataFrame:
        """Shapes, passes and failures per check, in sweep check order."""
        df = self.frame
        summary = (
            df.assign(fail=~df["pass"].astype(bool))
            .groupby("check", sort=False)
            .agg(shapes=("m", "size"), passed=("pass", "sum"), failed=("fail", "sum"))
            .reindex([c for c in self.spec.checks if c in set(df["check"])])
        )
        return summary.astype("int64")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "maxSum": self.spec.max_sum,
            "checks": list(self.spec.checks),
            "pass": self.passed,
            "results": [r.to_dict() for r in self.results],
            "summary": {
                check: {k: int(v) for k, v in row.items()}
                for check, row in self.summary.to_dict(orient="index").items()
            },
            "wallTime": round(self.wall_time, 3),
        }


@dataclass(kw_only=True)
class SweepRunner:
    """Runs a :py:class:`SweepSpec` shape by shape.

    With more than one job, shapes are dispatched to a process pool;
    results are still collected and streamed to `on_result` in sweep order.
    """

    spec: SweepSpec
    """Sweep to run."""

    jobs: int = field(default_factory=default_jobs)
    """Worker processes, defaults to ``YASPE_JOBS`` or 1."""

    on_result: Optional[Callable[[VerificationReport], None]] = None
    """Called with each result as soon as its shape completes."""

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive, got {self.jobs}")

    def _iter_shape_results(
        self, shapes: List[TorusShape]
    ) -> Iterator[Tuple[TorusShape, List[VerificationReport]]]:
        items = [(s.m, s.n, tuple(self.spec.checks)) for s in shapes]
        if self.jobs == 1:
            for shape, item in zip(shapes, items):
                yield shape, _run_shape(item)
        else:
            with ProcessPoolExecutor(max_workers=self.jobs) as executor:
                # map yields in submission order
                yield from zip(shapes, executor.map(_run_shape, items))

    def run(self) -> Report:
        """Execute every selected check on every shape."""
        shapes = self.spec.shapes()
        report = Report(spec=self.spec)
        start = time.perf_counter()
        logger.info(
            f"Sweeping {len(shapes)} shapes with m + n <= {self.spec.max_sum} "
            f"on {self.jobs} job(s)"
        )

        for shape, results in self._iter_shape_results(shapes):
            logger.info(f"Processing shape {shape}")
            for result in results:
                report.results.append(result)
                if self.on_result is not None:
                    self.on_result(result)

        report.wall_time = time.perf_counter() - start
        logger.info(
            f"Sweep finished in {report.wall_time:.2f}s, "
            f"{len(report.failures)} failure(s)"
        )
        return report
