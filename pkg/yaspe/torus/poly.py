r"""Exact sparse Laurent polynomials in :math:`Q`, :math:`\alpha` and :math:`T`.

Every quantity produced by the engine is a finite integer combination of
monomials :math:`Q^i \alpha^j T^k` with integer exponents. The two derived
variables used by the Dyck path formula expand to integer exponents too,

.. math::

   q = Q^2, \qquad t = T^2 Q^{-2},

so no fractional exponent machinery is needed anywhere.
"""

from __future__ import annotations

import logging
import re
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

import pandas as pd

from ._helpers import ensure_enum, sign_power

logger = logging.getLogger(__name__)

__all__ = [
    "Variable",
    "Monomial",
    "LaurentPolynomial",
    "SpecializationError",
    "add",
    "mul",
    "monomial",
    "inject_q",
    "inject_t",
    "alpha_coefficient",
    "specialize",
    "degree_range",
    "parse_specialization",
    "from_qt",
    "qt_terms",
    "swap_qt",
]

_INT64_MAX = 2**63 - 1


class SpecializationError(ValueError):
    """Raised for malformed specializations or substitutions that would leave
    the ring of integer Laurent polynomials."""


class Variable(Enum):
    """Polynomial variables."""

    Q = "Q"
    """Quantum grading variable."""

    ALPHA = "a"
    """The :math:`\\alpha` variable (printed `a`)."""

    T = "T"
    """Homological grading variable."""


@dataclass(frozen=True)
class Monomial:
    """Exponent vector of :math:`Q^{dQ} \\alpha^{dAlpha} T^{dT}`."""

    dQ: int = 0
    """Exponent of Q."""

    dAlpha: int = 0
    """Exponent of alpha."""

    dT: int = 0
    """Exponent of T."""

    def exponent(self, variable: Variable | str) -> int:
        variable = ensure_enum(variable, Variable)
        if variable == Variable.Q:
            return self.dQ
        elif variable == Variable.ALPHA:
            return self.dAlpha
        return self.dT

    @property
    def canonical_key(self) -> Tuple[int, int, int]:
        """Sort key of the canonical term order (dAlpha, dQ, dT)."""
        return (self.dAlpha, self.dQ, self.dT)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(
            self.dQ + other.dQ, self.dAlpha + other.dAlpha, self.dT + other.dT
        )

    def __pow__(self, e: int) -> Monomial:
        return Monomial(self.dQ * e, self.dAlpha * e, self.dT * e)


PolyLike = Union["LaurentPolynomial", Monomial, int]


def _pretty_key(m: Monomial) -> Tuple[int, int, int]:
    return (m.dAlpha, -m.dQ, -m.dT)


def _collect(terms: Any) -> Dict[Monomial, int]:
    if isinstance(terms, LaurentPolynomial):
        return dict(terms.terms)
    items = terms.items() if isinstance(terms, Mapping) else terms
    acc: Dict[Monomial, int] = defaultdict(int)
    for mono, c in items:
        if not isinstance(mono, Monomial):
            mono = Monomial(*mono)
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"coefficients must be integers, got {c!r}")
        acc[mono] += c
    return acc


@dataclass(frozen=True)
class LaurentPolynomial:
    """An immutable Laurent polynomial with integer coefficients.

    `terms` may be supplied as a mapping or as an iterable of
    ``(monomial, coefficient)`` pairs; repeated monomials are merged, zero
    coefficients dropped and the result stored as a tuple in canonical order.
    Two polynomials are equal iff their term tuples are equal.

    >>> LaurentPolynomial({Monomial(2, 0, 0): 1, Monomial(0, 0, 1): 2})
    LaurentPolynomial('Q^2 + 2*T')
    """

    terms: Tuple[Tuple[Monomial, int], ...] = ()
    """Canonically ordered ``(monomial, coefficient)`` pairs, no zeros."""

    def __post_init__(self):
        # since frozen we need to use obj method to canonicalise terms
        acc = _collect(self.terms)
        object.__setattr__(
            self,
            "terms",
            tuple(
                sorted(
                    ((m, c) for m, c in acc.items() if c != 0),
                    key=lambda mc: mc[0].canonical_key,
                )
            ),
        )

    # constructors

    @classmethod
    def zero(cls) -> LaurentPolynomial:
        return cls()

    @classmethod
    def one(cls) -> LaurentPolynomial:
        return cls.constant(1)

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({Monomial(): c})

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, int]]) -> LaurentPolynomial:
        """Build from the JSON term list form ``{"dQ", "dAlpha", "dT", "c"}``."""
        return cls(
            [
                (Monomial(int(r["dQ"]), int(r["dAlpha"]), int(r["dT"])), r["c"])
                for r in records
            ]
        )

    # inspection

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    def coefficient(self, mono: Monomial) -> int:
        return self.as_dict().get(mono, 0)

    def constant_value(self) -> int:
        """Value of a constant polynomial; raises if any variable remains."""
        if self.is_zero():
            return 0
        if len(self.terms) == 1 and self.terms[0][0] == Monomial():
            return self.terms[0][1]
        raise ValueError(f"{self} is not a constant")

    def degree_range(self, variable: Variable | str) -> Optional[Tuple[int, int]]:
        """Lowest and highest exponent of `variable`, `None` for zero."""
        if self.is_zero():
            return None
        exps = [m.exponent(variable) for m, _ in self.terms]
        return min(exps), max(exps)

    def alpha_coefficient(self, d: int) -> LaurentPolynomial:
        """The polynomial in Q and T multiplying :math:`\\alpha^d`."""
        return LaurentPolynomial(
            [(Monomial(m.dQ, 0, m.dT), c) for m, c in self.terms if m.dAlpha == d]
        )

    # arithmetic

    @staticmethod
    def _coerce(other: Any) -> Optional[LaurentPolynomial]:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, Monomial):
            return LaurentPolynomial({other: 1})
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPolynomial.constant(other)
        return None

    def __add__(self, other: PolyLike) -> LaurentPolynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = self.as_dict()
        for m, c in rhs.terms:
            acc[m] = acc.get(m, 0) + c
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial([(m, -c) for m, c in self.terms])

    def __sub__(self, other: PolyLike) -> LaurentPolynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: PolyLike) -> LaurentPolynomial:
        return -self + other

    def __mul__(self, other: PolyLike) -> LaurentPolynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: Dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self.terms:
            for m2, c2 in rhs.terms:
                acc[m1 * m2] += c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPolynomial:
        if e < 0:
            # only units, ie +/- a monomial, are invertible
            if len(self.terms) != 1 or self.terms[0][1] not in (1, -1):
                raise ValueError(f"cannot invert {self}")
            m, c = self.terms[0]
            return LaurentPolynomial({m**e: sign_power(e) if c == -1 else 1})
        result = LaurentPolynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # substitution

    def specialize(self, assignment: Mapping[Any, Any]) -> LaurentPolynomial:
        """Substitute variables simultaneously.

        Each variable maps to an integer value or to a :py:class:`Monomial`.
        A value of ``-1`` flips signs by the parity of the exponent; other
        integer values are only accepted where they keep coefficients
        integral.
        """
        subs = {ensure_enum(v, Variable): val for v, val in assignment.items()}
        if not subs:
            return self
        for var, val in subs.items():
            if isinstance(val, bool) or not isinstance(val, (int, Monomial)):
                raise SpecializationError(
                    f"cannot substitute {val!r} for {var.value}: expected an integer "
                    "or a monomial"
                )

        acc: Dict[Monomial, int] = defaultdict(int)
        for m, c in self.terms:
            exps = {v: (0 if v in subs else m.exponent(v)) for v in Variable}
            for var, val in subs.items():
                e = m.exponent(var)
                if isinstance(val, Monomial):
                    for v in Variable:
                        exps[v] += e * val.exponent(v)
                elif val in (1, -1):
                    c *= sign_power(e) if val == -1 else 1
                elif e >= 0:
                    c *= val**e
                else:
                    raise SpecializationError(
                        f"{var.value}={val} on {var.value}^{e} gives a non-integer "
                        "coefficient"
                    )
            acc[Monomial(exps[Variable.Q], exps[Variable.ALPHA], exps[Variable.T])] += c
        return LaurentPolynomial(acc)

    # serialisation

    def to_records(self) -> List[Dict[str, int]]:
        """JSON term list in canonical order."""
        return [
            {"dQ": m.dQ, "dAlpha": m.dAlpha, "dT": m.dT, "c": c} for m, c in self.terms
        ]

    def to_frame(self) -> pd.DataFrame:
        """Dataframe of terms with columns dQ, dAlpha, dT and c."""
        df = pd.DataFrame(
            [(m.dQ, m.dAlpha, m.dT) for m, _ in self.terms],
            columns=["dQ", "dAlpha", "dT"],
            dtype="int64",
        )
        coeffs = [c for _, c in self.terms]
        if any(abs(c) > _INT64_MAX for c in coeffs):
            logger.warning("coefficients exceed int64, using object column")
            df["c"] = pd.Series(coeffs, dtype=object)
        else:
            df["c"] = pd.Series(coeffs, dtype="int64")
        return df

    def fmt(self, mode: Optional[str] = None) -> str:
        """Pretty form, `mode` is `None` for plain text or ``"latex"``."""
        if self.is_zero():
            return "0"

        latex = mode == "latex"
        parts: List[str] = []
        alpha = "\\alpha" if latex else "a"
        # highest Q first within each alpha degree
        for m, c in sorted(self.terms, key=lambda mc: _pretty_key(mc[0])):
            factors = []
            for symbol, e in (("Q", m.dQ), ("T", m.dT), (alpha, m.dAlpha)):
                if e == 0:
                    continue
                if e == 1:
                    factors.append(symbol)
                else:
                    factors.append(f"{symbol}^{{{e}}}" if latex else f"{symbol}^{e}")
            body = ("" if latex else "*").join(factors)
            mag = abs(c)
            if not factors:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}{body}" if latex else f"{mag}*{body}"

            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts)

    def _repr_latex_(self):
        return f"${self.fmt(mode='latex')}$"

    def __str__(self):
        return self.fmt()

    def __repr__(self):
        return f"LaurentPolynomial('{self.fmt()}')"


def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p + q


def mul(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p * q


def monomial(dQ: int = 0, dAlpha: int = 0, dT: int = 0, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial({Monomial(dQ, dAlpha, dT): c})


def inject_q(e: int) -> LaurentPolynomial:
    """:math:`q^e = Q^{2e}`."""
    return monomial(dQ=2 * e)


def inject_t(e: int) -> LaurentPolynomial:
    """:math:`t^e = T^{2e} Q^{-2e}`, `e` may be negative."""
    return monomial(dQ=-2 * e, dT=2 * e)


def alpha_coefficient(p: LaurentPolynomial, d: int) -> LaurentPolynomial:
    return p.alpha_coefficient(d)


def specialize(p: LaurentPolynomial, assignment: Mapping[Any, Any]) -> LaurentPolynomial:
    return p.specialize(assignment)


def degree_range(
    p: LaurentPolynomial, variable: Variable | str
) -> Optional[Tuple[int, int]]:
    return p.degree_range(variable)


# specialization text, eg "T=-1,a=1" or "T=-1,a=Q^2"

_VARIABLE_NAMES = {
    "Q": Variable.Q,
    "a": Variable.ALPHA,
    "alpha": Variable.ALPHA,
    "T": Variable.T,
}
_FACTOR_RE = re.compile(r"^(Q|a|alpha|T)(?:\^(.+))?$")


def _parse_exponent(text: str) -> int:
    text = text.strip("()")
    try:
        return int(text)
    except ValueError:
        if "/" in text or "." in text:
            raise SpecializationError(f"fractional exponent {text!r} not supported")
        raise SpecializationError(f"malformed exponent {text!r}")


def _parse_value(text: str) -> int | Monomial:
    text = text.strip()
    if re.fullmatch(r"[+-]?\d+", text):
        return int(text)
    mono = Monomial()
    for factor in text.split("*"):
        match = _FACTOR_RE.match(factor.strip())
        if match is None:
            raise SpecializationError(f"malformed substitution {text!r}")
        var = _VARIABLE_NAMES[match.group(1)]
        e = 1 if match.group(2) is None else _parse_exponent(match.group(2))
        mono = mono * Monomial(
            e if var == Variable.Q else 0,
            e if var == Variable.ALPHA else 0,
            e if var == Variable.T else 0,
        )
    return mono


def parse_specialization(text: str) -> Dict[Variable, int | Monomial]:
    """Parse ``"T=-1,a=1"`` style assignments.

    Values are integers or products of ``Q``, ``a`` and ``T`` powers, eg
    ``a=Q^2`` for the sl(2) view.
    """
    assignment: Dict[Variable, int | Monomial] = {}
    if not text.strip():
        return assignment
    for item in text.split(","):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in _VARIABLE_NAMES:
            raise SpecializationError(f"malformed assignment {item!r}")
        var = _VARIABLE_NAMES[name]
        if var in assignment:
            raise SpecializationError(f"variable {name} assigned twice")
        assignment[var] = _parse_value(value)
    return assignment


# q,t view


def from_qt(terms: Mapping[Tuple[int, int], int]) -> LaurentPolynomial:
    """Build :math:`\\sum c\\, q^a t^b` from ``{(a, b): c}``."""
    return LaurentPolynomial(
        [(Monomial(2 * a - 2 * b, 0, 2 * b), c) for (a, b), c in terms.items()]
    )


def qt_terms(p: LaurentPolynomial) -> Dict[Tuple[int, int], int]:
    """Read a polynomial in Q and T back as ``{(a, b): c}`` in q and t."""
    out = {}
    for m, c in p.terms:
        if m.dAlpha != 0 or m.dT % 2 or m.dQ % 2:
            raise ValueError(f"term {LaurentPolynomial({m: c})} is not in q and t")
        b = m.dT // 2
        out[(m.dQ // 2 + b, b)] = c
    return out


def swap_qt(p: LaurentPolynomial) -> LaurentPolynomial:
    return from_qt({(b, a): c for (a, b), c in qt_terms(p).items()})
