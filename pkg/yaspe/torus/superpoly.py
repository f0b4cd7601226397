r"""Superpolynomials of positive torus knots from the Dyck path formula.

For coprime :math:`(m, n)`,

.. math::

   \mathcal{P}(T_{m,n}) = (T^{-1}\alpha)^{(m-1)(n-1)}
   \sum_{\gamma \in D_{m,n}} q^{\mathrm{area}(\gamma)} t^{h(\gamma)}
   \prod_{p \in V(\gamma)} \left(1 + T^{-1}\alpha^2 t^{-k(p)}\right),

with :math:`q = Q^2` and :math:`t = T^2 Q^{-2}`. The extreme
:math:`\alpha`-coefficients at the Morton-Franks-Williams bounds are

.. math::

   \mathcal{P}_-(\tau_{m,n}) &= T^{-(m-1)(n-1)}
   \sum_{\gamma \in D_{m,n}} q^{\mathrm{area}(\gamma)} t^{h(\gamma)} \\
   \mathcal{P}_+(\tau_{m,n}) &= T^{-m(n-1)}
   \sum_{\gamma \in D^*_{m,n}} q^{\mathrm{area}(\gamma)}
   t^{h(\gamma) - \sum_{p \in V(\gamma)} k(p)}

and adding a full twist relates them,
:math:`\mathcal{P}_-(\tau_{m,n}) = T^{n^2-1}\mathcal{P}_+(\tau_{m+n,n})`.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from ._helpers import sign_power
from .dyck import (
    DyckPath,
    area,
    h_statistic,
    is_rugged,
    iter_paths,
    outer_vertices,
)
from .poly import (
    LaurentPolynomial,
    Monomial,
    Variable,
    inject_q,
    inject_t,
    monomial,
)
from .report import VerificationReport, compare
from .shape import TorusShape

logger = logging.getLogger(__name__)

__all__ = [
    "SuperpolyResult",
    "PathStatistics",
    "PrimedPolynomial",
    "path_statistics",
    "term_of_path",
    "mellit_superpolynomial",
    "p_minus",
    "p_plus",
    "qt_catalan",
    "verify_full_twist",
    "kalman_check",
    "convert_convention",
    "revert_convention",
]

# T^-1 alpha^2
_U = monomial(dAlpha=2, dT=-1)


@dataclass(frozen=True, kw_only=True)
class PathStatistics:
    """Statistics of one Dyck path entering the formula."""

    steps: str
    """Step sequence."""

    area: int
    """Complete squares between path and diagonal."""

    h: int
    """Size of :math:`H(\\gamma)`."""

    ks: Tuple[int, ...]
    """:math:`k(p)` for each :math:`p \\in V(\\gamma)`, in path order."""

    rugged: bool
    """Whether :math:`|V(\\gamma)| = n - 1`."""


@lru_cache(maxsize=128)
def path_statistics(
    shape: TorusShape, rugged_only: bool = False
) -> Tuple[PathStatistics, ...]:
    """Statistics of every path of `shape` (or every rugged path), cached per
    shape since sweeps revisit shapes."""
    stats = []
    for path in iter_paths(shape, rugged=rugged_only):
        _, vs = outer_vertices(path)
        stats.append(
            PathStatistics(
                steps=path.steps,
                area=area(path),
                h=h_statistic(path),
                ks=tuple(v.k for v in vs),
                rugged=len(vs) == shape.n - 1,
            )
        )
    logger.debug(f"Computed statistics of {len(stats)} paths for shape {shape}")
    return tuple(stats)


def _term(stats: PathStatistics) -> LaurentPolynomial:
    term = inject_q(stats.area) * inject_t(stats.h)
    for k in stats.ks:
        term = term * (1 + _U * inject_t(-k))
    return term


def term_of_path(path: DyckPath) -> LaurentPolynomial:
    """:math:`q^{area} t^{h} \\prod_{p \\in V} (1 + T^{-1}\\alpha^2 t^{-k(p)})`."""
    _, vs = outer_vertices(path)
    return _term(
        PathStatistics(
            steps=path.steps,
            area=area(path),
            h=h_statistic(path),
            ks=tuple(v.k for v in vs),
            rugged=is_rugged(path),
        )
    )


@dataclass(frozen=True, kw_only=True)
class SuperpolyResult:
    """Superpolynomial of :math:`T_{m,n}` with enumeration metadata."""

    shape: TorusShape
    """Torus knot shape."""

    poly: LaurentPolynomial
    """The superpolynomial in Q, alpha and T."""

    path_count: int
    """:math:`|D_{m,n}|`."""

    rugged_count: int
    """:math:`|D^*_{m,n}|`."""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.shape.m,
            "n": self.shape.n,
            "pathCount": self.path_count,
            "ruggedCount": self.rugged_count,
            "terms": self.poly.to_records(),
        }


def mellit_superpolynomial(shape: TorusShape) -> SuperpolyResult:
    """Evaluate the Dyck path formula for the superpolynomial of
    :math:`T_{m,n}`."""
    stats = path_statistics(shape)
    total = LaurentPolynomial.zero()
    for s in stats:
        total = total + _term(s)
    d = shape.alpha_min
    poly = monomial(dAlpha=d, dT=-d) * total
    logger.info(f"Superpolynomial of {shape}: {len(stats)} paths, {len(poly.terms)} terms")
    return SuperpolyResult(
        shape=shape,
        poly=poly,
        path_count=len(stats),
        rugged_count=sum(s.rugged for s in stats),
    )


def qt_catalan(shape: TorusShape) -> LaurentPolynomial:
    """The bare sum :math:`\\sum_{\\gamma} q^{area} t^{h}` (read its q,t
    exponents with :py:func:`yaspe.torus.poly.qt_terms`)."""
    total = LaurentPolynomial.zero()
    for s in path_statistics(shape):
        total = total + inject_q(s.area) * inject_t(s.h)
    return total


def p_minus(shape: TorusShape) -> LaurentPolynomial:
    """Coefficient of :math:`\\alpha^{(m-1)(n-1)}`, from the closed form."""
    return monomial(dT=-shape.alpha_min) * qt_catalan(shape)


def p_plus(shape: TorusShape) -> LaurentPolynomial:
    """Coefficient of :math:`\\alpha^{(m+1)(n-1)}`, from the closed form over
    rugged paths; zero when there are none."""
    total = LaurentPolynomial.zero()
    for s in path_statistics(shape, rugged_only=True):
        total = total + inject_q(s.area) * inject_t(s.h - sum(s.ks))
    return monomial(dT=-shape.exponent_sum) * total


def verify_full_twist(m: int, n: int) -> VerificationReport:
    """Check :math:`\\mathcal{P}_-(\\tau_{m,n}) = T^{n^2-1}
    \\mathcal{P}_+(\\tau_{m+n,n})` exactly."""
    shape = TorusShape(m=m, n=n)
    lhs = p_minus(shape)
    rhs = monomial(dT=n * n - 1) * p_plus(shape.twisted())
    return compare("full_twist", m, n, lhs, rhs)


def kalman_check(m: int, n: int) -> VerificationReport:
    """Check the HOMFLY shadow :math:`P_-(\\beta) = (-1)^{n-1}
    P_+(\\beta\\Delta_n^2)` at :math:`T = -1`."""
    shape = TorusShape(m=m, n=n)
    lhs = p_minus(shape).specialize({Variable.T: -1})
    rhs = sign_power(n - 1) * p_plus(shape.twisted()).specialize({Variable.T: -1})
    return compare("kalman", m, n, lhs, rhs)


# conversion to the (q', a', t') variables


@dataclass(frozen=True)
class PrimedPolynomial:
    """Polynomial in the variables :math:`q' = t`, :math:`a' = -T^{-1}\\alpha^2`
    and :math:`t' = q`.

    `terms` holds ``((dq', da', dt'), coefficient)`` pairs in ascending
    exponent order.
    """

    terms: Tuple[Tuple[Tuple[int, int, int], int], ...] = ()
    """Canonically ordered terms, no zeros."""

    def __post_init__(self):
        acc: Dict[Tuple[int, int, int], int] = {}
        items = self.terms.items() if isinstance(self.terms, dict) else self.terms
        for exps, c in items:
            acc[tuple(exps)] = acc.get(tuple(exps), 0) + c
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        )

    def as_dict(self) -> Dict[Tuple[int, int, int], int]:
        return dict(self.terms)

    def to_records(self) -> List[Dict[str, int]]:
        return [{"dq": e[0], "da": e[1], "dt": e[2], "c": c} for e, c in self.terms]

    def fmt(self) -> str:
        if not self.terms:
            return "0"
        parts: List[str] = []
        for (dq, da, dt), c in self.terms:
            factors = [
                s if e == 1 else f"{s}^{e}"
                for s, e in (("q'", dq), ("a'", da), ("t'", dt))
                if e != 0
            ]
            mag = abs(c)
            term = "*".join(factors) if factors else str(mag)
            if factors and mag != 1:
                term = f"{mag}*{term}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts)

    def __str__(self):
        return self.fmt()


def convert_convention(
    p: LaurentPolynomial, prefactor_degree: int = 0
) -> PrimedPolynomial:
    """Rewrite `p` in the primed variables after stripping the prefactor
    :math:`(T^{-1}\\alpha)^{prefactor\\_degree}`.

    Raises `ValueError` for a monomial outside the algebra generated by
    :math:`q^{\\pm 1}`, :math:`t^{\\pm 1}` and :math:`T^{-1}\\alpha^2`.
    """
    stripped = p * monomial(dAlpha=-prefactor_degree, dT=prefactor_degree)
    acc: Dict[Tuple[int, int, int], int] = {}
    for mono, c in stripped.terms:
        if mono.dAlpha % 2 or mono.dQ % 2:
            raise ValueError(f"{LaurentPolynomial({mono: c})} is not convertible")
        u = mono.dAlpha // 2
        if (mono.dT + u) % 2:
            raise ValueError(f"{LaurentPolynomial({mono: c})} is not convertible")
        t_exp = (mono.dT + u) // 2
        q_exp = mono.dQ // 2 + t_exp
        acc[(t_exp, u, q_exp)] = c * sign_power(u)
    return PrimedPolynomial(acc)


def revert_convention(
    primed: PrimedPolynomial, prefactor_degree: int = 0
) -> LaurentPolynomial:
    """Inverse of :py:func:`convert_convention`."""
    total = LaurentPolynomial(
        [
            (Monomial(2 * tq - 2 * qt, 2 * u, 2 * qt - u), c * sign_power(u))
            for (qt, u, tq), c in primed.terms
        ]
    )
    return total * monomial(dAlpha=prefactor_degree, dT=-prefactor_degree)
