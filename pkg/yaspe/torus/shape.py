import logging
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Tuple

from scipy.special import comb

__all__ = ["TorusShape", "ShapeError", "coprime_shapes"]

logger = logging.getLogger(__name__)


class ShapeError(ValueError):
    """Raised for (m, n) pairs that do not describe a torus knot."""


@dataclass(frozen=True, kw_only=True)
class TorusShape:
    """A coprime pair of positive integers describing the torus knot
    :math:`T_{m,n}`, the closure of the toric braid
    :math:`\\tau_{m,n} = (\\sigma_1 \\cdots \\sigma_{n-1})^m` on `n` strands.

    All exponent bookkeeping of the braid lives here.
    """

    m: int
    """Horizontal extent of Dyck paths (number of twists)."""

    n: int
    """Vertical extent of Dyck paths and number of strands."""

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise ShapeError(f"shape must be integers, got ({self.m!r}, {self.n!r})")
        if self.m < 1 or self.n < 1:
            raise ShapeError(f"shape ({self.m}, {self.n}) must be positive")
        if gcd(self.m, self.n) != 1:
            raise ShapeError(
                f"shape ({self.m}, {self.n}) is not coprime, torus links unsupported"
            )

    @property
    def strands(self) -> int:
        return self.n

    @property
    def exponent_sum(self) -> int:
        """Exponent sum :math:`e = m(n-1)` of the toric braid."""
        return self.m * (self.n - 1)

    @property
    def alpha_min(self) -> int:
        """Lower Morton-Franks-Williams bound :math:`e - n + 1 = (m-1)(n-1)`."""
        return self.exponent_sum - self.n + 1

    @property
    def alpha_max(self) -> int:
        """Upper Morton-Franks-Williams bound :math:`e + n - 1 = (m+1)(n-1)`."""
        return self.exponent_sum + self.n - 1

    @property
    def max_area(self) -> int:
        """Area of the path with all vertical steps first,
        :math:`(m-1)(n-1)/2`."""
        return (self.m - 1) * (self.n - 1) // 2

    @property
    def path_count(self) -> int:
        """Rational Catalan number :math:`\\binom{m+n}{n} / (m+n)`."""
        return comb(self.m + self.n, self.n, exact=True) // (self.m + self.n)

    def twisted(self) -> "TorusShape":
        """Shape of :math:`\\tau_{m,n}\\Delta_n^2 = \\tau_{m+n,n}`."""
        return TorusShape(m=self.m + self.n, n=self.n)

    def transposed(self) -> "TorusShape":
        return TorusShape(m=self.n, n=self.m)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.m, self.n)

    def __str__(self):
        return f"({self.m}, {self.n})"


def coprime_shapes(max_sum: int, min_sum: int = 2) -> Iterator[TorusShape]:
    """Yield all coprime shapes with ``min_sum <= m + n <= max_sum`` in
    lexicographic ``(m + n, n)`` order."""
    for s in range(max(min_sum, 2), max_sum + 1):
        for n in range(1, s):
            if gcd(s - n, n) == 1:
                yield TorusShape(m=s - n, n=n)
