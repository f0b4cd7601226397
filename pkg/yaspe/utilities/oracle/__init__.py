from .alexander import AlexanderPolynomial, alexander_torus, check_alexander
from .skein import SkeinState, two_strand_homfly, two_strand_states

__all__ = [
    "AlexanderPolynomial",
    "alexander_torus",
    "check_alexander",
    "SkeinState",
    "two_strand_homfly",
    "two_strand_states",
]
