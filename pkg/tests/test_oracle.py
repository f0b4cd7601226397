import unittest

from tests._helpers import shapes_upto
from yaspe.torus import TorusShape, Variable, mellit_superpolynomial, monomial
from yaspe.utilities.oracle import (
    AlexanderPolynomial,
    alexander_torus,
    check_alexander,
    two_strand_homfly,
    two_strand_states,
)
from yaspe.utilities.oracle.alexander import _divide_exact


class SkeinTestCase(unittest.TestCase):
    def test_small(self):
        self.assertEqual(two_strand_homfly(1), monomial())
        self.assertEqual(
            two_strand_homfly(3),
            monomial(dAlpha=4, c=-1) + monomial(dQ=2, dAlpha=2) + monomial(dQ=-2, dAlpha=2),
        )

    def test_states(self):
        states = two_strand_states(4)
        self.assertEqual([s.k for s in states], [0, 1, 2, 3, 4])
        self.assertEqual(
            [s.is_polynomial() for s in states], [False, True, False, True, False]
        )
        # two component unlink
        self.assertEqual(states[0].numerator(), monomial(dAlpha=-1) - monomial(dAlpha=1))
        self.assertEqual(states[2].residue, monomial(dAlpha=1) - monomial(dAlpha=3))

    def test_errors(self):
        for k in [-1, 0, 2, 6]:
            with self.subTest(k=k):
                with self.assertRaises(ValueError):
                    two_strand_homfly(k)
        with self.assertRaises(ValueError):
            two_strand_states(-2)

    def test_alpha_degrees(self):
        for k in range(3, 13, 2):
            with self.subTest(k=k):
                self.assertEqual(
                    two_strand_homfly(k).degree_range(Variable.ALPHA), (k - 1, k + 1)
                )

    def test_engine_agreement(self):
        for k in range(1, 13, 2):
            with self.subTest(k=k):
                poly = mellit_superpolynomial(TorusShape(m=k, n=2)).poly
                self.assertEqual(poly.specialize({Variable.T: -1}), two_strand_homfly(k))

    def test_alexander_agreement(self):
        for k in range(1, 13, 2):
            with self.subTest(k=k):
                self.assertEqual(
                    two_strand_homfly(k).specialize({Variable.ALPHA: 1}),
                    alexander_torus(k, 2).to_laurent(),
                )


class AlexanderTestCase(unittest.TestCase):
    def test_small(self):
        trefoil = alexander_torus(3, 2)
        self.assertEqual(trefoil.valuation, -1)
        self.assertEqual(trefoil.coeffs, (1, -1, 1))
        self.assertEqual(trefoil.fmt(), "s - 1 + s^-1")
        self.assertEqual(trefoil.to_laurent().fmt(), "Q^2 - 1 + Q^-2")

        cinquefoil = alexander_torus(5, 2)
        self.assertEqual(cinquefoil.valuation, -2)
        self.assertEqual(cinquefoil.coeffs, (1, -1, 1, -1, 1))
        self.assertEqual(cinquefoil.degree(), 2)

        self.assertEqual(alexander_torus(1, 1).fmt(), "1")

    def test_trimming(self):
        p = AlexanderPolynomial(valuation=-3, coeffs=(0, 0, 2, 0, 0))
        self.assertEqual((p.valuation, p.coeffs), (-1, (2,)))
        self.assertEqual(p.fmt(), "2*s^-1")
        self.assertEqual(AlexanderPolynomial(valuation=4, coeffs=(0,)).fmt(), "0")

    def test_properties(self):
        for shape in shapes_upto(16, max_part=8):
            with self.subTest(shape=shape):
                delta = alexander_torus(shape.m, shape.n)
                self.assertEqual(delta, alexander_torus(shape.n, shape.m))
                self.assertTrue(delta.is_palindromic())
                self.assertEqual(abs(delta.at_one()), 1)
                self.assertEqual(delta.degree(), shape.max_area)

    def test_check_alexander(self):
        for shape in shapes_upto(16, max_part=8):
            with self.subTest(shape=shape):
                report = check_alexander(shape.m, shape.n)
                self.assertTrue(report.passed)
                self.assertEqual(report.check, "alexander")

    def test_inexact_division(self):
        with self.assertRaises(RuntimeError):
            _divide_exact([1, 0, 1], [1, 1])
        self.assertEqual(_divide_exact([-1, 0, 1], [1, 1]), [-1, 1])


if __name__ == "__main__":
    unittest.main()
