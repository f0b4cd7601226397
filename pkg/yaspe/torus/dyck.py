r"""Rational Dyck paths and their statistics.

An :math:`(m,n)`-Dyck path is a lattice path from :math:`(0,0)` to
:math:`(m,n)` made of `m` horizontal steps :math:`(1,0)` and `n` vertical steps
:math:`(0,1)` that never goes below the diagonal :math:`y = (n/m)x`. All
geometry is done exactly with the integer level function

.. math::

   f(x, y) = n x - m y,

which is :math:`\le 0` on or above the diagonal. Lines parallel to the
diagonal are level sets of :math:`f`, so "a parallel line meets a step"
becomes "a level lies in the closed :math:`f`-interval of the step". Since
:math:`\gcd(m,n) = 1`, no two lattice points of the grid other than
:math:`(0,0)` and :math:`(m,n)` share a level.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .shape import TorusShape

logger = logging.getLogger(__name__)

__all__ = [
    "Step",
    "StepRef",
    "DyckPath",
    "PairBucket",
    "PairClassification",
    "OuterVertex",
    "iter_paths",
    "enumerate_paths",
    "enumerate_rugged",
    "area",
    "area_via_lemma1",
    "pairs_O",
    "classify_pair",
    "h_pairs",
    "h_statistic",
    "geometric_H",
    "outer_points",
    "outer_vertices",
    "k_counts",
    "is_rugged",
    "star",
    "unstar",
    "star_index_map",
]

Point = Tuple[int, int]
StepPair = Tuple["StepRef", "StepRef"]


class Step(Enum):
    """Lattice path step kinds."""

    V = "V"
    """Vertical step (0, 1)."""

    H = "H"
    """Horizontal step (1, 0)."""


@dataclass(frozen=True, kw_only=True)
class StepRef:
    """A step of a particular path together with its position."""

    index: int
    """Position in the step sequence."""

    kind: Step
    """Vertical or horizontal."""

    start: Point
    """Lattice point the step leaves."""

    end: Point
    """Lattice point the step reaches."""


@dataclass(frozen=True, kw_only=True)
class DyckPath:
    """An :math:`(m,n)`-Dyck path stored as a string over ``V`` and ``H``.

    The constructor validates step counts and the diagonal condition.
    """

    shape: TorusShape
    """Shape of the grid."""

    steps: str
    """Step sequence, eg ``"VVHVHHVHH"``."""

    def __post_init__(self):
        m, n = self.shape.m, self.shape.n
        if set(self.steps) - {"V", "H"}:
            raise ValueError(f"steps {self.steps!r} must only contain V and H")
        if self.steps.count("V") != n or self.steps.count("H") != m:
            raise ValueError(
                f"steps {self.steps!r} need {n} vertical and {m} horizontal steps"
            )
        for x, y in self.points:
            if n * x - m * y > 0:
                raise ValueError(
                    f"steps {self.steps!r} pass below the diagonal at ({x}, {y})"
                )

    @classmethod
    def parse(cls, m: int, n: int, steps: str) -> "DyckPath":
        return cls(shape=TorusShape(m=m, n=n), steps=steps)

    def level(self, point: Point) -> int:
        """Exact level :math:`f(x, y) = nx - my` of `point`."""
        return self.shape.n * point[0] - self.shape.m * point[1]

    @cached_property
    def points(self) -> Tuple[Point, ...]:
        """All visited lattice points, starting at the origin."""
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == "V":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return tuple(pts)

    @cached_property
    def step_refs(self) -> Tuple[StepRef, ...]:
        pts = self.points
        return tuple(
            StepRef(index=i, kind=Step(s), start=pts[i], end=pts[i + 1])
            for i, s in enumerate(self.steps)
        )

    def interval(self, step: StepRef) -> Tuple[int, int]:
        """Closed level interval swept by `step`."""
        lo, hi = sorted((self.level(step.start), self.level(step.end)))
        return lo, hi

    def to_dict(self, stats: bool = True) -> Dict:
        """Record in the documented path JSON format."""
        record: Dict = {"m": self.shape.m, "n": self.shape.n, "steps": self.steps}
        if stats:
            p0, vs = outer_vertices(self)
            record.update(
                area=area(self),
                h=h_statistic(self),
                p0=list(p0.point),
                V=[{"p": list(v.point), "k": v.k} for v in vs],
                rugged=len(vs) == self.shape.n - 1,
            )
        return record

    def __str__(self):
        return self.steps


@dataclass(frozen=True, kw_only=True)
class OuterVertex:
    """A lattice point just after a vertical and just before a horizontal
    step, with its line-crossing counts."""

    point: Point
    """Lattice point."""

    k: int
    """Non-incident steps met by the parallel line through `point`."""

    k1: int
    """Vertical steps after `point` met by the line."""

    k2: int
    """Horizontal steps before `point` met by the line."""

    diag_key: int
    """Distance from the diagonal, :math:`my - nx`."""


class PairBucket(Enum):
    """Membership of a (horizontal, vertical) step pair."""

    H1 = 1
    """The parallel line through the point left of the horizontal step's end
    meets the vertical step."""

    H2 = 2
    """The parallel line through the point above the vertical step's start
    meets the horizontal step."""

    NONE = 3
    """No parallel line meets both steps."""


@dataclass(frozen=True, kw_only=True)
class PairClassification:
    """Arithmetic classification of a pair in :math:`O(\\gamma)`."""

    D: int
    """Discriminant :math:`n(a'-a) - m(b'-b)`."""

    bucket: PairBucket
    """Bucket determined by `D`."""


# enumeration


def iter_paths(shape: TorusShape, rugged: bool = False) -> Iterator[DyckPath]:
    """Depth first enumeration, vertical before horizontal, pruned by the
    diagonal test.

    With `rugged` set a vertical step must be followed by a horizontal one,
    which yields exactly the rugged paths in the same order.
    """
    m, n = shape.m, shape.n

    def _walk(prefix: List[str], x: int, y: int) -> Iterator[str]:
        if x == m and y == n:
            yield "".join(prefix)
            return
        must_turn = rugged and prefix and prefix[-1] == "V"
        if y < n and not must_turn:
            prefix.append("V")
            yield from _walk(prefix, x, y + 1)
            prefix.pop()
        if x < m and n * (x + 1) - m * y <= 0:
            prefix.append("H")
            yield from _walk(prefix, x + 1, y)
            prefix.pop()

    for steps in _walk([], 0, 0):
        yield DyckPath(shape=shape, steps=steps)


def enumerate_paths(shape: TorusShape) -> List[DyckPath]:
    """All paths of :math:`D_{m,n}` in canonical order."""
    paths = list(iter_paths(shape))
    logger.debug(f"Enumerated {len(paths)} paths for shape {shape}")
    return paths


def enumerate_rugged(shape: TorusShape) -> List[DyckPath]:
    """All rugged paths :math:`D^*_{m,n}`, in the order of
    :py:func:`enumerate_paths`."""
    return list(iter_paths(shape, rugged=True))


# area


def area(path: DyckPath) -> int:
    """Number of complete unit squares between the path and the diagonal.

    The square with lower left corner :math:`(x, y)` counts when its lower
    right corner is weakly above the diagonal and its top edge weakly below
    the path.
    """
    m, n = path.shape.m, path.shape.n
    total = 0
    for ref in path.step_refs:
        if ref.kind == Step.H:
            x, height = ref.start
            lowest = -(-n * (x + 1) // m)  # ceil
            total += max(0, height - lowest)
    return total


def area_via_lemma1(path: DyckPath) -> int:
    """Area as :math:`(m-1)(n-1)/2 - |O(\\gamma)|`."""
    inversions = 0
    seen_h = 0
    for s in path.steps:
        if s == "H":
            seen_h += 1
        else:
            inversions += seen_h
    return path.shape.max_area - inversions


# step pairs


def pairs_O(path: DyckPath) -> List[StepPair]:
    """Pairs (horizontal step, later vertical step)."""
    refs = path.step_refs
    return [
        (h, v)
        for h in refs
        if h.kind == Step.H
        for v in refs[h.index + 1 :]
        if v.kind == Step.V
    ]


def classify_pair(shape: TorusShape, pair: StepPair) -> PairClassification:
    """Bucket a pair of :math:`O(\\gamma)` by its discriminant.

    The boundary values :math:`D \\in \\{-n, m-n, m\\}` cannot occur for a
    pair of a path weakly above the diagonal and raise `RuntimeError`.
    """
    m, n = shape.m, shape.n
    r_h, r_v = pair
    a, b = r_h.end
    a_, b_ = r_v.start
    D = n * (a_ - a) - m * (b_ - b)

    if D in (-n, m - n, m):
        raise RuntimeError(
            f"pair ({r_h.index}, {r_v.index}) has boundary discriminant {D} for shape {shape}"
        )

    if -n < D < m - n:
        bucket = PairBucket.H1
    elif m - n < D < m:
        bucket = PairBucket.H2
    else:
        bucket = PairBucket.NONE
    return PairClassification(D=D, bucket=bucket)


def h_pairs(path: DyckPath) -> Dict[PairBucket, List[StepPair]]:
    """Pairs of :math:`O(\\gamma)` grouped by bucket."""
    groups: Dict[PairBucket, List[StepPair]] = {b: [] for b in PairBucket}
    for pair in pairs_O(path):
        groups[classify_pair(path.shape, pair).bucket].append(pair)
    return groups


def h_statistic(path: DyckPath) -> int:
    """:math:`h(\\gamma) = |H_1| + |H_2|`."""
    groups = h_pairs(path)
    return len(groups[PairBucket.H1]) + len(groups[PairBucket.H2])


def geometric_H(path: DyckPath, pair: StepPair) -> bool:
    """Whether some parallel line meets both steps, ie whether their closed
    level intervals overlap."""
    lo1, hi1 = path.interval(pair[0])
    lo2, hi2 = path.interval(pair[1])
    return max(lo1, lo2) <= min(hi1, hi2)


# outer vertices


def outer_points(path: DyckPath) -> List[Tuple[int, Point]]:
    """``(index, point)`` of each outer vertex, where `index` is the position
    of the vertical step arriving at it."""
    pts = path.points
    return [
        (i, pts[i + 1])
        for i in range(len(path.steps) - 1)
        if path.steps[i] == "V" and path.steps[i + 1] == "H"
    ]


def k_counts(path: DyckPath, p: Point | OuterVertex) -> Tuple[int, int, int]:
    """Return ``(k, k1, k2)`` for the outer vertex `p`.

    `k` counts horizontal steps whose level interval contains the level of
    `p`, ignoring the two steps incident at `p`. The same count over vertical
    steps must agree.
    """
    point = p.point if isinstance(p, OuterVertex) else tuple(p)
    arrivals = [i for i, q in outer_points(path) if q == point]
    if not arrivals:
        raise ValueError(f"{point} is not an outer vertex of {path.steps}")
    i_v = arrivals[0]
    i_h = i_v + 1
    lvl = path.level(point)

    horizontal = vertical = k1 = k2 = 0
    for ref in path.step_refs:
        if ref.index in (i_v, i_h):
            continue
        lo, hi = path.interval(ref)
        if not lo <= lvl <= hi:
            continue
        if ref.kind == Step.H:
            horizontal += 1
            if ref.index < i_v:
                k2 += 1
        else:
            vertical += 1
            if ref.index > i_h:
                k1 += 1

    if horizontal != vertical or horizontal != k1 + k2:
        raise RuntimeError(
            f"inconsistent line counts at {point} on {path.steps}: "
            f"{horizontal} horizontal, {vertical} vertical, k1={k1}, k2={k2}"
        )
    return horizontal, k1, k2


def outer_vertices(path: DyckPath) -> Tuple[OuterVertex, List[OuterVertex]]:
    """Return the outer vertex :math:`p_0` most distant from the diagonal and
    the list :math:`V(\\gamma)` of the others, in path order."""
    m, n = path.shape.m, path.shape.n
    vertices = []
    for _, point in outer_points(path):
        k, k1, k2 = k_counts(path, point)
        vertices.append(
            OuterVertex(
                point=point, k=k, k1=k1, k2=k2, diag_key=m * point[1] - n * point[0]
            )
        )

    p0 = max(vertices, key=lambda v: v.diag_key)
    if sum(v.diag_key == p0.diag_key for v in vertices) != 1:
        raise RuntimeError(f"most distant outer vertex of {path.steps} is not unique")
    if p0.k != 0:
        raise RuntimeError(f"most distant outer vertex {p0.point} has k={p0.k}")
    return p0, [v for v in vertices if v is not p0]


def is_rugged(path: DyckPath) -> bool:
    """:math:`|V(\\gamma)| = n - 1`, ie every vertical step is followed by a
    horizontal one."""
    return len(outer_points(path)) == path.shape.n


# star bijection


def star(path: DyckPath) -> DyckPath:
    """Insert a horizontal step after each vertical step, mapping
    :math:`D_{m,n}` to :math:`D^*_{m+n,n}`."""
    return DyckPath(shape=path.shape.twisted(), steps=path.steps.replace("V", "VH"))


def unstar(path: DyckPath) -> DyckPath:
    """Inverse of :py:func:`star`, deleting the horizontal step after each
    vertical step."""
    m, n = path.shape.m, path.shape.n
    if path.steps.count("VH") != n or m <= n:
        raise ValueError(
            f"{path.steps} in D({m}, {n}) is not the image of a path under star"
        )
    return DyckPath(shape=TorusShape(m=m - n, n=n), steps=path.steps.replace("VH", "V"))


def star_index_map(path: DyckPath) -> List[int]:
    """Position in ``star(path)`` of each step of `path`."""
    out = []
    verticals = 0
    for i, s in enumerate(path.steps):
        out.append(i + verticals)
        if s == "V":
            verticals += 1
    return out
