import logging
from dataclasses import dataclass, replace
from typing import Any, ClassVar, Dict, List, Optional, Type

from yaspe.torus.dyck import (
    DyckPath,
    PairBucket,
    area,
    area_via_lemma1,
    classify_pair,
    enumerate_paths,
    enumerate_rugged,
    geometric_H,
    h_pairs,
    h_statistic,
    is_rugged,
    outer_vertices,
    pairs_O,
    star,
    star_index_map,
    unstar,
)
from yaspe.torus.poly import Variable, alpha_coefficient, qt_terms, swap_qt
from yaspe.torus.report import VerificationReport, compare
from yaspe.torus.shape import TorusShape
from yaspe.torus.superpoly import (
    kalman_check,
    mellit_superpolynomial,
    p_minus,
    p_plus,
    path_statistics,
    qt_catalan,
    verify_full_twist,
)
from yaspe.utilities.oracle import check_alexander, two_strand_homfly

logger = logging.getLogger(__name__)

__all__ = ["Check", "CHECKS", "DEFAULT_CHECKS", "get_check"]


@dataclass(kw_only=True)
class Check:
    """Verification check base class.

    This class should be derived from and will be instantiated once per
    shape by :py:class:`yaspe.verify.runner.SweepRunner`. Subclasses set
    `name` and implement :py:meth:`run`.
    """

    name: ClassVar[str] = ""
    """Name used on the command line and in reports."""

    shape: TorusShape
    """Shape under test."""

    @classmethod
    def applies_to(cls, shape: TorusShape) -> bool:
        """Whether the check has anything to say about `shape`."""
        return True

    @property
    def m(self) -> int:
        return self.shape.m

    @property
    def n(self) -> int:
        return self.shape.n

    def run(self) -> VerificationReport:
        raise NotImplementedError

    def passed(self, detail: str = "") -> VerificationReport:
        return VerificationReport(
            check=self.name, m=self.m, n=self.n, passed=True, detail=detail
        )

    def failed(
        self, path: Optional[DyckPath] = None, detail: str = "", **witness: Any
    ) -> VerificationReport:
        """Failure report whose witness holds the shape, the offending path if
        any and the disagreeing quantities."""
        record: Dict[str, Any] = {"shape": [self.m, self.n]}
        if path is not None:
            record["path"] = path.steps
        record.update(witness)
        logger.warning(f"{self.name} failed for {self.shape}: {detail} {record}")
        return VerificationReport(
            check=self.name,
            m=self.m,
            n=self.n,
            passed=False,
            witness=record,
            detail=detail,
        )

    def _with_shape_witness(self, report: VerificationReport) -> VerificationReport:
        # polynomial comparisons already carry both sides
        if report.passed or report.witness is not None:
            return report
        return replace(report, witness={"shape": [self.m, self.n]})


class FullTwistCheck(Check):
    name = "full_twist"

    def run(self) -> VerificationReport:
        return self._with_shape_witness(verify_full_twist(self.m, self.n))


class KalmanCheck(Check):
    name = "kalman"

    def run(self) -> VerificationReport:
        return self._with_shape_witness(kalman_check(self.m, self.n))


class AlexanderCheck(Check):
    name = "alexander"

    def run(self) -> VerificationReport:
        return self._with_shape_witness(check_alexander(self.m, self.n))


class Lemma1Check(Check):
    """Geometric area against the inversion count of every path."""

    name = "lemma1"

    def run(self) -> VerificationReport:
        for path in enumerate_paths(self.shape):
            geometric, counted = area(path), area_via_lemma1(path)
            if geometric != counted:
                return self.failed(
                    path, "area mismatch", area=geometric, lemma=counted
                )
        return self.passed()


def _line_meets(path: DyckPath, point, step) -> bool:
    lo, hi = path.interval(step)
    return lo <= path.level(point) <= hi


class Lemma2Check(Check):
    """Arithmetic pair buckets against the line geometry, plus consistency
    of the outer vertex line counts."""

    name = "lemma2"

    def run(self) -> VerificationReport:
        for path in enumerate_paths(self.shape):
            for pair in pairs_O(path):
                r_h, r_v = pair
                try:
                    cls = classify_pair(self.shape, pair)
                except RuntimeError as exc:
                    return self.failed(
                        path, str(exc), pair=[r_h.index, r_v.index]
                    )

                a, b = r_h.end
                a_, b_ = r_v.start
                in_h1 = _line_meets(path, (a - 1, b), r_v)
                in_h2 = _line_meets(path, (a_, b_ + 1), r_h)
                expected = (
                    PairBucket.H1
                    if in_h1
                    else PairBucket.H2
                    if in_h2
                    else PairBucket.NONE
                )
                if (
                    (in_h1 and in_h2)
                    or cls.bucket != expected
                    or geometric_H(path, pair) != (cls.bucket != PairBucket.NONE)
                ):
                    return self.failed(
                        path,
                        "bucket disagrees with geometry",
                        pair=[r_h.index, r_v.index],
                        D=cls.D,
                        bucket=cls.bucket.name,
                        h1=in_h1,
                        h2=in_h2,
                    )

            try:
                _, vs = outer_vertices(path)
            except RuntimeError as exc:
                return self.failed(path, str(exc))
            if any(v.k != v.k1 + v.k2 for v in vs):
                return self.failed(path, "k differs from k1 + k2")
        return self.passed()


class BijectionCheck(Check):
    """The star map from :math:`D_{m,n}` onto :math:`D^*_{m+n,n}` and the
    identities transported along it."""

    name = "bijection"

    def run(self) -> VerificationReport:
        paths = enumerate_paths(self.shape)
        rugged = enumerate_rugged(self.shape.twisted())
        images = [star(p) for p in paths]

        if len({g.steps for g in images}) != len(paths):
            return self.failed(detail="star is not injective")
        if len(rugged) != len(paths):
            return self.failed(
                detail="rugged count mismatch", paths=len(paths), rugged=len(rugged)
            )
        if {g.steps for g in images} != {r.steps for r in rugged}:
            return self.failed(detail="star image is not the rugged set")
        for r in rugged:
            if star(unstar(r)) != r:
                return self.failed(r, "star(unstar) is not the identity")

        for path, image in zip(paths, images):
            report = self._check_pair(path, image)
            if report is not None:
                return report
        return self.passed(detail=f"{len(paths)} paths")

    def _check_pair(
        self, path: DyckPath, image: DyckPath
    ) -> Optional[VerificationReport]:
        if unstar(image) != path:
            return self.failed(path, "unstar(star) is not the identity")
        if not is_rugged(image):
            return self.failed(path, "image is not rugged", image=image.steps)

        # area is preserved
        if area(path) != area(image):
            return self.failed(
                path, "area not preserved", area=area(path), image_area=area(image)
            )

        # h drops by the line counts of the image, split into k1 and k2
        _, vs = outer_vertices(image)
        ks = sum(v.k for v in vs)
        k1 = sum(v.k1 for v in vs)
        k2 = sum(v.k2 for v in vs)
        h, h_image = h_statistic(path), h_statistic(image)
        if h != h_image - ks:
            return self.failed(
                path, "h not transported", h=h, image_h=h_image, k=ks
            )

        index = star_index_map(path)
        embedded = {(index[r_h.index], index[r_v.index]) for r_h, r_v in pairs_O(path)}
        groups = h_pairs(image)
        h1 = {(r_h.index, r_v.index) for r_h, r_v in groups[PairBucket.H1]}
        h2 = groups[PairBucket.H2]
        if k1 != len(h1 - embedded) or k2 != len(h2):
            return self.failed(
                path,
                "k1/k2 split mismatch",
                k1=k1,
                k2=k2,
                h1_outside=len(h1 - embedded),
                h2=len(h2),
            )

        own = h_pairs(path)
        transported = {
            (index[r_h.index], index[r_v.index])
            for bucket in (PairBucket.H1, PairBucket.H2)
            for r_h, r_v in own[bucket]
        }
        if transported != h1 & embedded:
            return self.failed(path, "H does not map onto H1 of the image")
        return None


class ExtractionCheck(Check):
    """Closed forms of the extreme coefficients against extraction from the
    full sum."""

    name = "extraction"

    def run(self) -> VerificationReport:
        poly = mellit_superpolynomial(self.shape).poly
        minus = compare(
            self.name,
            self.m,
            self.n,
            p_minus(self.shape),
            alpha_coefficient(poly, self.shape.alpha_min),
        )
        if not minus:
            return self._with_shape_witness(replace(minus, detail="minus"))
        plus = compare(
            self.name,
            self.m,
            self.n,
            p_plus(self.shape),
            alpha_coefficient(poly, self.shape.alpha_max),
        )
        if not plus:
            return self._with_shape_witness(replace(plus, detail="plus"))
        return self.passed()


class MFWCheck(Check):
    """The alpha degrees lie within the Morton-Franks-Williams bounds, the
    lower one attained and the upper one attained iff rugged paths exist."""

    name = "mfw"

    def run(self) -> VerificationReport:
        result = mellit_superpolynomial(self.shape)
        lo, hi = result.poly.degree_range(Variable.ALPHA)
        bounds = (self.shape.alpha_min, self.shape.alpha_max)
        witness = dict(alpha_range=[lo, hi], bounds=list(bounds))
        if lo != bounds[0] or hi > bounds[1]:
            return self.failed(detail="alpha degrees out of bounds", **witness)
        if (hi == bounds[1]) != (result.rugged_count > 0):
            return self.failed(
                detail="upper bound attainment disagrees with rugged paths",
                rugged=result.rugged_count,
                **witness,
            )
        return self.passed()


class CountCheck(Check):
    """Path counts, rugged filtering and coefficient positivity."""

    name = "count"

    def run(self) -> VerificationReport:
        paths = enumerate_paths(self.shape)
        if len(paths) != self.shape.path_count:
            return self.failed(
                detail="path count differs from the rational Catalan number",
                count=len(paths),
                catalan=self.shape.path_count,
            )

        filtered = [p.steps for p in paths if is_rugged(p)]
        pruned = [p.steps for p in enumerate_rugged(self.shape)]
        if filtered != pruned:
            return self.failed(
                detail="rugged enumeration disagrees with filtering",
                filtered=len(filtered),
                pruned=len(pruned),
            )
        for p in paths:
            if is_rugged(p) == ("VV" in p.steps):
                return self.failed(p, "rugged predicate disagrees with steps")

        poly = mellit_superpolynomial(self.shape).poly
        negative = [c for _, c in poly.terms if c < 0]
        if negative:
            return self.failed(detail="negative coefficient", coefficient=negative[0])
        total = sum(c for _, c in poly.terms)
        expected = sum(2 ** len(s.ks) for s in path_statistics(self.shape))
        if total != expected:
            return self.failed(
                detail="coefficient sum mismatch", total=total, expected=expected
            )
        return self.passed(detail=f"{len(paths)} paths")


class SkeinCheck(Check):
    """The HOMFLY shadow of the shapes (k, 2) against the two-strand skein
    recursion."""

    name = "skein"

    @classmethod
    def applies_to(cls, shape: TorusShape) -> bool:
        return shape.n == 2

    def run(self) -> VerificationReport:
        lhs = mellit_superpolynomial(self.shape).poly.specialize({Variable.T: -1})
        return self._with_shape_witness(
            compare(self.name, self.m, self.n, lhs, two_strand_homfly(self.m))
        )


class SymmetryCheck(Check):
    """Empirical symmetries: transposing the shape and swapping q with t."""

    name = "symmetry"

    def run(self) -> VerificationReport:
        poly = mellit_superpolynomial(self.shape).poly
        transposed = mellit_superpolynomial(self.shape.transposed()).poly
        if poly != transposed:
            return self._with_shape_witness(
                replace(
                    compare(self.name, self.m, self.n, poly, transposed),
                    detail="transpose",
                )
            )
        catalan = qt_catalan(self.shape)
        swapped = swap_qt(catalan)
        if swapped != catalan:
            return self.failed(
                detail="q,t swap",
                terms={f"{a},{b}": c for (a, b), c in qt_terms(catalan).items()},
            )
        return self.passed()


CHECKS: Dict[str, Type[Check]] = {
    cls.name: cls
    for cls in (
        FullTwistCheck,
        KalmanCheck,
        Lemma1Check,
        Lemma2Check,
        BijectionCheck,
        AlexanderCheck,
        ExtractionCheck,
        MFWCheck,
        CountCheck,
        SkeinCheck,
        SymmetryCheck,
    )
}
"""Registered checks by name."""

DEFAULT_CHECKS: List[str] = [
    "full_twist",
    "kalman",
    "lemma1",
    "lemma2",
    "bijection",
    "alexander",
    "extraction",
    "mfw",
    "count",
]


def get_check(name: str) -> Type[Check]:
    try:
        return CHECKS[name.strip()]
    except KeyError:
        raise ValueError(
            f"unknown check {name!r}, choose from {', '.join(CHECKS)}"
        ) from None
