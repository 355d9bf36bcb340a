"""!
\file test_shiftops.py Tests of the cocycle, the shift action and its germs
"""
import unittest

from pylcm.errors import UnsupportedInstance, ZeroElement
from pylcm.isg.isgf.tripleops import TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mmodel.gridmonoid import GridMonoid
from pylcm.shift.shiftf.shiftops import ShiftAnalyzer, ShiftOps, require_free
from pylcm.shift.stype.bipoint import BiPoint
from pylcm.shift.stype.germ import Germ


class ShiftOpsTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.M = FreeMonoid(2)
        self.pt = BiPoint.from_text("[1].0[1]")

    def test_cocycle(self):
        self.assertEqual(ShiftOps.cocycle_h(TripleOps.top(self.M)), 0)
        self.assertEqual(ShiftOps.cocycle_h(TripleOps.generator(self.M, "01")), -2)
        self.assertEqual(ShiftOps.cocycle_h(TripleOps.generator_adjoint(self.M, "0")), 1)
        with self.assertRaises(ZeroElement):
            ShiftOps.cocycle_h(Triple.zero(self.M))

    def test_theta(self):
        s = Triple(self.M, "", "0", "")
        self.assertEqual(str(ShiftOps.theta_apply(s, self.pt)), "[1]0.[1]")
        t = Triple(self.M, "", "1", "")
        self.assertIsNone(ShiftOps.theta_apply(t, self.pt))

    def test_generator_domain(self):
        v = TripleOps.generator(self.M, "1")
        self.assertTrue(ShiftOps.in_domain(v, self.pt))
        self.assertEqual(ShiftOps.theta_apply(v, self.pt), self.pt.shift(-1))
        self.assertFalse(ShiftOps.in_domain(TripleOps.generator(self.M, "0"), self.pt))

    def test_germ(self):
        with self.assertRaises(ValueError):
            ShiftOps.germ(Triple(self.M, "", "1", ""), self.pt)
        g = ShiftOps.germ(TripleOps.top(self.M), self.pt)
        self.assertEqual(ShiftOps.phi_map(g), (0, self.pt))

    def test_germ_eq(self):
        top = Germ(TripleOps.top(self.M), self.pt)
        e = Germ(TripleOps.idempotent(self.M, "0", ""), self.pt)
        v = Germ(TripleOps.generator(self.M, "1"), self.pt)
        self.assertTrue(ShiftOps.germ_eq(top, e))
        self.assertTrue(ShiftOps.germ_eq_bruteforce(top, e))
        self.assertFalse(ShiftOps.germ_eq(top, v))
        self.assertFalse(ShiftOps.germ_eq_bruteforce(top, v))

    def test_compose(self):
        s = Triple(self.M, "", "0", "")
        g1 = Germ(s, self.pt)
        g2 = Germ(TripleOps.generator(self.M, "0"), self.pt.shift(1))
        g = ShiftOps.compose_germs(g2, g1)
        self.assertIsNotNone(g)
        self.assertEqual(ShiftOps.phi_map(g), (0, self.pt))
        self.assertIsNone(ShiftOps.compose_germs(g1, g1))

    def test_surjectivity_witness(self):
        for n in (-2, -1, 0, 1, 2):
            g = ShiftOps.surjectivity_witness(self.M, n, self.pt)
            self.assertEqual(ShiftOps.phi_map(g), (n, self.pt))
            self.assertTrue(ShiftOps.in_domain(g.s, self.pt))

    def test_points(self):
        self.assertEqual(len(ShiftOps.enumerate_points("01", 1, 1)), 16)
        self.assertEqual(len(ShiftOps.enumerate_points("01", 1, 2)), 64)
        self.assertEqual(len(ShiftOps.enumerate_points("01", 0, 1)), 4)
        self.assertEqual(len(ShiftOps.enumerate_points("01", 2, 2)), 256)

    def test_points_with_longer_preperiod(self):
        pt = BiPoint.from_text("[1]01.01[0]")
        self.assertEqual(pt.key(), BiPoint("10", "1", "01", "0").key())
        self.assertIn(pt, ShiftOps.enumerate_points("01", 2, 2))
        self.assertNotIn(pt, ShiftOps.enumerate_points("01", 1, 2))

    def test_unit_germs(self):
        points = ShiftOps.enumerate_points("01", 0, 1)
        germs = ShiftOps.enumerate_germs(self.M, 0, points)
        self.assertEqual(len(germs), 4)
        self.assertTrue(all(ShiftOps.cocycle_h(g.s) == 0 for g in germs))

    def test_require_free(self):
        self.assertIs(require_free(self.M), self.M)
        with self.assertRaises(UnsupportedInstance):
            ShiftOps.enumerate_germs(GridMonoid(2), 1, [self.pt])


class ShiftAnalyzerTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.M = FreeMonoid(2)
        self.points = ShiftOps.enumerate_points("01", 1, 1)

    def test_cocycle(self):
        res = ShiftAnalyzer.check_cocycle(TripleOps.enumerate_triples(self.M, 2))
        self.assertTrue(res.ok, str(res.counterexamples))

    def test_theta(self):
        res = ShiftAnalyzer.check_theta(TripleOps.enumerate_triples(self.M, 1), self.points)
        self.assertTrue(res.ok, str(res.counterexamples))

    def test_phi(self):
        germs = ShiftOps.enumerate_germs(self.M, 1, self.points)
        res = ShiftAnalyzer.check_phi(germs, self.points, 1)
        self.assertTrue(res.ok, str(res.counterexamples))

    def test_germ_eq(self):
        germs = ShiftOps.enumerate_germs(self.M, 1, self.points)
        res = ShiftAnalyzer.check_germ_eq(germs)
        self.assertTrue(res.ok, str(res.counterexamples))
        self.assertGreater(res.passed, 0)

    def test_preperiod_two(self):
        points = ShiftOps.enumerate_points("01", 2, 2)
        pt = BiPoint.from_text("[1]01.01[0]")
        triples = TripleOps.enumerate_triples(self.M, 1)
        res = ShiftAnalyzer.check_theta(triples, points)
        self.assertTrue(res.ok, str(res.counterexamples))
        self.assertEqual(res.passed, len(triples) ** 2 * 256)
        germs = ShiftOps.enumerate_germs(self.M, 1, points)
        self.assertTrue(any(g.point == pt for g in germs))
        res = ShiftAnalyzer.check_germ_eq(germs)
        self.assertTrue(res.ok, str(res.counterexamples))
        res = ShiftAnalyzer.check_phi(germs, points, 1)
        self.assertTrue(res.ok, str(res.counterexamples))


if __name__ == "__main__":
    unittest.main()
