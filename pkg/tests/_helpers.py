import io
from contextlib import redirect_stderr, redirect_stdout
from typing import Tuple

from hypothesis import strategies as st

from yaspe.cli import main
from yaspe.torus import LaurentPolynomial, Monomial, TorusShape, coprime_shapes

# worked example on the (5, 4) grid and its image under star
FIGURE_PATH = "VVHVHHVHH"
FIGURE_STAR = "VHVHHVHHHVHHH"

TREFOIL = LaurentPolynomial(
    {Monomial(2, 2, -2): 1, Monomial(-2, 2, 0): 1, Monomial(0, 4, -3): 1}
)

exponents = st.integers(min_value=-3, max_value=3)
monomials = st.builds(Monomial, exponents, exponents, exponents)
polynomials = st.dictionaries(
    monomials, st.integers(min_value=-5, max_value=5), max_size=4
).map(LaurentPolynomial)


def shapes_upto(max_sum: int, max_part: int = 0):
    """Coprime shapes with m + n <= `max_sum`, optionally m, n <= `max_part`."""
    return [
        s
        for s in coprime_shapes(max_sum)
        if not max_part or (s.m <= max_part and s.n <= max_part)
    ]


def run_cli(*argv: str) -> Tuple[int, str]:
    """Run the command line entry point, returning exit code and stdout."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()
