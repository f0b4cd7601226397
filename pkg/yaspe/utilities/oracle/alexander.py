r"""Alexander polynomial of torus knots by its closed form.

For coprime :math:`(m, n)`,

.. math::

   \Delta_{m,n}(s) = s^{-(m-1)(n-1)/2}
   \frac{(s^{mn} - 1)(s - 1)}{(s^m - 1)(s^n - 1)},

normalised to be symmetric under :math:`s \leftrightarrow s^{-1}`. The
quotient is taken with sympy over the integers and must be exact. The
HOMFLY polynomial recovers it as :math:`P(Q, \alpha = 1) = \Delta(Q^2)`.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import sympy as sp

from yaspe.torus.poly import LaurentPolynomial, Monomial, Variable
from yaspe.torus.report import VerificationReport, compare
from yaspe.torus.shape import TorusShape
from yaspe.torus.superpoly import mellit_superpolynomial

logger = logging.getLogger(__name__)

__all__ = ["AlexanderPolynomial", "alexander_torus", "check_alexander"]

_s = sp.Symbol("s")


@dataclass(frozen=True, kw_only=True)
class AlexanderPolynomial:
    """Laurent polynomial in one variable `s`, stored as a valuation and a
    dense tuple of coefficients from the valuation upwards."""

    valuation: int
    """Lowest exponent of s."""

    coeffs: Tuple[int, ...]
    """Coefficients of :math:`s^{v}, s^{v+1}, \\dots` where `v` is the
    valuation."""

    def __post_init__(self):
        coeffs = list(self.coeffs)
        val = self.valuation
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "valuation", val if coeffs else 0)

    def degree(self) -> int:
        return self.valuation + len(self.coeffs) - 1

    def is_palindromic(self) -> bool:
        """Symmetric under :math:`s \\leftrightarrow s^{-1}`."""
        return self.coeffs == self.coeffs[::-1] and self.valuation == -self.degree()

    def at_one(self) -> int:
        return sum(self.coeffs)

    def to_laurent(self) -> LaurentPolynomial:
        """As a polynomial in Q under :math:`s = Q^2`."""
        return LaurentPolynomial(
            [
                (Monomial(2 * (self.valuation + i), 0, 0), c)
                for i, c in enumerate(self.coeffs)
            ]
        )

    def fmt(self) -> str:
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for i in reversed(range(len(self.coeffs))):
            c, e = self.coeffs[i], self.valuation + i
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                power = "s" if e == 1 else f"s^{e}"
                term = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts)

    def __str__(self):
        return self.fmt()


def _divide_exact(num: Sequence[int], den: Sequence[int]) -> List[int]:
    """Quotient of dense integer polynomials given lowest degree first.

    The division runs in the integer ring so a divisor that does not go
    exactly raises `RuntimeError`.
    """
    q, r = sp.Poly(list(reversed(num)), _s, domain="ZZ").div(
        sp.Poly(list(reversed(den)), _s, domain="ZZ"), auto=False
    )
    if not r.is_zero:
        raise RuntimeError(f"division left remainder {r.as_expr()}")
    return [int(c) for c in reversed(q.all_coeffs())]


def alexander_torus(m: int, n: int) -> AlexanderPolynomial:
    """Symmetric Alexander polynomial of :math:`T_{m,n}`."""
    shape = TorusShape(m=m, n=n)
    num = sp.Poly((_s ** (m * n) - 1) * (_s - 1), _s)
    den = sp.Poly((_s**m - 1) * (_s**n - 1), _s)
    quot = _divide_exact(num.all_coeffs()[::-1], den.all_coeffs()[::-1])
    result = AlexanderPolynomial(valuation=-shape.max_area, coeffs=tuple(quot))
    logger.debug(f"Alexander polynomial of {shape}: {result}")
    return result


def check_alexander(m: int, n: int) -> VerificationReport:
    """Compare the superpolynomial at :math:`T = -1, \\alpha = 1` with the
    closed form under :math:`s = Q^2`."""
    poly = mellit_superpolynomial(TorusShape(m=m, n=n)).poly
    lhs = poly.specialize({Variable.T: -1, Variable.ALPHA: 1})
    rhs = alexander_torus(m, n).to_laurent()
    return compare("alexander", m, n, lhs, rhs)
