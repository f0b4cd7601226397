import unittest

from tests._helpers import TREFOIL, shapes_upto
from yaspe.torus import (
    DyckPath,
    LaurentPolynomial,
    Monomial,
    PrimedPolynomial,
    TorusShape,
    Variable,
    alpha_coefficient,
    convert_convention,
    inject_q,
    inject_t,
    kalman_check,
    mellit_superpolynomial,
    monomial,
    p_minus,
    p_plus,
    path_statistics,
    qt_catalan,
    qt_terms,
    revert_convention,
    term_of_path,
    verify_full_twist,
)


class SuperpolynomialTestCase(unittest.TestCase):
    def test_trefoil(self):
        result = mellit_superpolynomial(TorusShape(m=3, n=2))
        self.assertEqual(result.poly, TREFOIL)
        self.assertEqual(result.poly.fmt(), "Q^2*T^-2*a^2 + Q^-2*a^2 + T^-3*a^4")
        self.assertEqual(result.path_count, 2)
        self.assertEqual(result.rugged_count, 1)
        self.assertEqual(
            result.to_dict(),
            {"m": 3, "n": 2, "pathCount": 2, "ruggedCount": 1, "terms": TREFOIL.to_records()},
        )

    def test_transposed_trefoil(self):
        result = mellit_superpolynomial(TorusShape(m=2, n=3))
        self.assertEqual(result.poly, TREFOIL)
        self.assertEqual(result.rugged_count, 0)

    def test_unknots(self):
        for m, n in [(1, 1), (1, 2), (2, 1), (7, 1), (1, 5)]:
            with self.subTest(shape=(m, n)):
                poly = mellit_superpolynomial(TorusShape(m=m, n=n)).poly
                self.assertEqual(poly, LaurentPolynomial.one())

    def test_terms_of_paths(self):
        self.assertEqual(term_of_path(DyckPath.parse(3, 2, "VVHHH")), monomial(dQ=2))
        self.assertEqual(
            term_of_path(DyckPath.parse(3, 2, "VHVHH")),
            monomial(dQ=-2, dT=2) + monomial(dAlpha=2, dT=-1),
        )

    def test_path_statistics_cached(self):
        shape = TorusShape(m=5, n=3)
        self.assertIs(path_statistics(shape), path_statistics(TorusShape(m=5, n=3)))
        stats = path_statistics(shape, rugged_only=True)
        self.assertTrue(all(s.rugged for s in stats))

    def test_nonnegative_and_bounded(self):
        for shape in shapes_upto(14):
            with self.subTest(shape=shape):
                result = mellit_superpolynomial(shape)
                self.assertTrue(all(c > 0 for _, c in result.poly.terms))
                lo, hi = result.poly.degree_range(Variable.ALPHA)
                self.assertEqual(lo, shape.alpha_min)
                self.assertLessEqual(hi, shape.alpha_max)
                self.assertEqual(hi == shape.alpha_max, result.rugged_count > 0)


class ExtremeCoefficientsTestCase(unittest.TestCase):
    def test_trefoil(self):
        shape = TorusShape(m=3, n=2)
        self.assertEqual(p_minus(shape), monomial(dQ=2, dT=-2) + monomial(dQ=-2))
        self.assertEqual(p_plus(shape), monomial(dT=-3))
        self.assertTrue(p_plus(TorusShape(m=2, n=3)).is_zero())

    def test_qt_catalan_value(self):
        self.assertEqual(qt_terms(qt_catalan(TorusShape(m=3, n=2))), {(1, 0): 1, (0, 1): 1})
        self.assertEqual(qt_catalan(TorusShape(m=1, n=4)), LaurentPolynomial.one())
        total = qt_catalan(TorusShape(m=5, n=4))
        self.assertEqual(total.specialize({Variable.Q: 1, Variable.T: 1}).constant_value(), 14)

    def test_extraction(self):
        for shape in shapes_upto(16, max_part=8):
            with self.subTest(shape=shape):
                poly = mellit_superpolynomial(shape).poly
                self.assertEqual(p_minus(shape), alpha_coefficient(poly, shape.alpha_min))
                self.assertEqual(p_plus(shape), alpha_coefficient(poly, shape.alpha_max))

    def test_full_twist(self):
        report = verify_full_twist(3, 2)
        self.assertTrue(report)
        self.assertEqual(report.lhs, monomial(dQ=2, dT=-2) + monomial(dQ=-2))
        self.assertEqual(report.to_dict()["check"], "full_twist")
        self.assertTrue(report.to_dict()["pass"])

        shapes = shapes_upto(16)
        self.assertGreaterEqual(len(shapes), 60)
        for shape in shapes:
            with self.subTest(shape=shape):
                self.assertTrue(verify_full_twist(shape.m, shape.n).passed)

    def test_kalman(self):
        for shape in shapes_upto(16):
            with self.subTest(shape=shape):
                self.assertTrue(kalman_check(shape.m, shape.n).passed)


class ConventionTestCase(unittest.TestCase):
    def test_trefoil(self):
        primed = convert_convention(TREFOIL, prefactor_degree=2)
        self.assertEqual(primed.as_dict(), {(0, 0, 1): 1, (1, 0, 0): 1, (0, 1, 0): -1})
        self.assertEqual(primed.fmt(), "t' - a' + q'")
        self.assertEqual(
            primed.to_records()[0], {"dq": 0, "da": 0, "dt": 1, "c": 1}
        )
        self.assertEqual(revert_convention(primed, prefactor_degree=2), TREFOIL)

    def test_round_trip(self):
        for shape in shapes_upto(10):
            with self.subTest(shape=shape):
                poly = mellit_superpolynomial(shape).poly
                primed = convert_convention(poly, shape.alpha_min)
                self.assertEqual(revert_convention(primed, shape.alpha_min), poly)

    def test_variables(self):
        self.assertEqual(convert_convention(inject_q(1)).as_dict(), {(0, 0, 1): 1})
        self.assertEqual(convert_convention(inject_t(1)).as_dict(), {(1, 0, 0): 1})
        self.assertEqual(
            convert_convention(monomial(dAlpha=2, dT=-1, c=-1)).as_dict(), {(0, 1, 0): 1}
        )

    def test_not_convertible(self):
        with self.assertRaises(ValueError):
            convert_convention(monomial(dQ=1))
        with self.assertRaises(ValueError):
            convert_convention(monomial(dAlpha=2))
        self.assertEqual(PrimedPolynomial().fmt(), "0")
        self.assertEqual(
            convert_convention(LaurentPolynomial({Monomial(0, 2, -1): 3})).as_dict(),
            {(0, 1, 0): -3},
        )


if __name__ == "__main__":
    unittest.main()
