r"""HOMFLY polynomial of two-strand torus links by the skein relation.

The HOMFLY polynomial is fixed by :math:`P(\text{unknot}) = 1` and

.. math::

   \alpha^{-1} P(L_+) - \alpha P(L_-) = (Q^{-1} - Q) P(L_0).

Resolving one crossing of the closure of :math:`\sigma_1^k` gives

.. math::

   P_k = \alpha^2 P_{k-2} + \alpha (Q^{-1} - Q) P_{k-1},
   \qquad P_1 = 1, \qquad P_0 = \frac{\alpha^{-1} - \alpha}{Q^{-1} - Q}.

Writing :math:`z = Q^{-1} - Q` and :math:`P_k = X_k + Y_k / z`, the
recursion splits into :math:`Y_k = \alpha^2 Y_{k-2}` and
:math:`X_k = \alpha^2 X_{k-2} + \alpha z X_{k-1} + \alpha Y_{k-1}`, so the
two-component unlink is never divided out. :math:`Y_k` vanishes for odd `k`
(knots) and the value is then a Laurent polynomial.
"""

import logging
from dataclasses import dataclass
from typing import List

from yaspe.torus.poly import LaurentPolynomial, monomial

logger = logging.getLogger(__name__)

__all__ = ["SkeinState", "two_strand_states", "two_strand_homfly"]

_Z = monomial(dQ=-1) - monomial(dQ=1)
_ALPHA = monomial(dAlpha=1)
_ALPHA2 = monomial(dAlpha=2)


@dataclass(frozen=True, kw_only=True)
class SkeinState:
    """Value of :math:`P_k` as a polynomial part plus a numerator over
    :math:`Q^{-1} - Q`."""

    k: int
    """Number of crossings of :math:`\\sigma_1^k`."""

    value: LaurentPolynomial
    """Polynomial part :math:`X_k`."""

    residue: LaurentPolynomial
    """Numerator :math:`Y_k` of the part over :math:`Q^{-1} - Q`."""

    def is_polynomial(self) -> bool:
        return self.residue.is_zero()

    def numerator(self) -> LaurentPolynomial:
        """:math:`(Q^{-1} - Q) P_k`, always a Laurent polynomial."""
        return _Z * self.value + self.residue


def two_strand_states(k: int) -> List[SkeinState]:
    """States :math:`P_0, \\dots, P_k`."""
    if k < 0:
        raise ValueError(f"crossing count must be non-negative, got {k}")

    states = [
        SkeinState(
            k=0,
            value=LaurentPolynomial.zero(),
            residue=monomial(dAlpha=-1) - monomial(dAlpha=1),
        ),
        SkeinState(k=1, value=LaurentPolynomial.one(), residue=LaurentPolynomial.zero()),
    ]
    for j in range(2, k + 1):
        prev2, prev1 = states[j - 2], states[j - 1]
        states.append(
            SkeinState(
                k=j,
                value=_ALPHA2 * prev2.value
                + _ALPHA * _Z * prev1.value
                + _ALPHA * prev1.residue,
                residue=_ALPHA2 * prev2.residue,
            )
        )
    return states[: k + 1]


def two_strand_homfly(k: int) -> LaurentPolynomial:
    """HOMFLY polynomial of the closure of :math:`\\sigma_1^k` for odd `k`.

    Even `k` closes up to a two-component link whose value has a
    :math:`1/(Q^{-1}-Q)` part; use :py:func:`two_strand_states` for those.
    """
    if k < 0:
        raise ValueError(f"crossing count must be non-negative, got {k}")
    if k % 2 == 0:
        raise ValueError(
            f"closure of sigma_1^{k} is a link, its HOMFLY value is not a Laurent polynomial"
        )
    state = two_strand_states(k)[-1]
    if not state.is_polynomial():
        raise RuntimeError(f"skein recursion left a remainder {state.residue} at k={k}")
    return state.value
