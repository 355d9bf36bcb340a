"""!
\file test_zappaszep.py Tests of the Zappa–Szép product X*⋈Z of the odometer
"""
import unittest

from pylcm.action.actionops.actionops import ActionOps
from pylcm.action.amodel.odometer import Odometer
from pylcm.config import DEFAULT_SETTINGS
from pylcm.monoid.mmodel.zappaszep import SelfSimilarElement, ZappaSzepMonoid
from pylcm.monoid.monoidops.monoidops import MonoidOps
from pylcm.monoid.mtype.abstractmonoid import LcmWitness, Side


class ZappaSzepMonoidTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.M = ZappaSzepMonoid(
            Odometer(), DEFAULT_SETTINGS.replace(group_bound=2)
        )
        self.el = SelfSimilarElement

    def test_name(self):
        self.assertEqual(self.M.name(), "odometer")

    def test_mul(self):
        # (1, a)(1, e) = (1 (a·1), a|_1) = (10, a)
        self.assertEqual(self.M.mul(self.el("1", 1), self.el("1", 0)), self.el("10", 1))
        self.assertEqual(self.M.mul(self.el("", 1), self.el("0", 0)), self.el("1", 0))

    def test_units(self):
        self.assertTrue(self.M.is_unit(self.el("", 3)))
        self.assertFalse(self.M.is_unit(self.el("0", 0)))

    def test_right_lcm(self):
        w = self.M.right_lcm(self.el("0", 1), self.el("01", 0))
        self.assertEqual(w.r, self.el("01", 0))
        self.assertEqual(self.M.mul(self.el("0", 1), w.w1), self.el("01", 0))
        self.assertIsNone(self.M.right_lcm(self.el("0", 0), self.el("1", 0)))

    def test_left_lcm_longer_word(self):
        w = self.M.left_lcm(self.el("0", 0), self.el("11", 1))
        self.assertEqual(
            w,
            LcmWitness(r=self.el("11", 1), w1=self.el("1", 3), w2=self.el("", 0)),
        )

    def test_left_lcm_always_exists(self):
        w = self.M.left_lcm(self.el("0", 0), self.el("1", 0))
        self.assertIsNotNone(w)
        self.assertEqual(self.M.mul(w.w1, self.el("0", 0)), w.r)
        self.assertEqual(self.M.mul(w.w2, self.el("1", 0)), w.r)

    def test_divide(self):
        x = self.M.divide(Side.LEFT, self.el("0", 1), self.el("01", 0))
        self.assertEqual(self.M.mul(self.el("0", 1), x), self.el("01", 0))
        y = self.M.divide(Side.RIGHT, self.el("0", 0), self.el("11", 1))
        self.assertEqual(self.M.mul(y, self.el("0", 0)), self.el("11", 1))

    def test_right_normalize(self):
        self.assertEqual(
            self.M.right_normalize(self.el("0", 2)), (self.el("0", 0), self.el("", -2))
        )

    def test_left_normalize(self):
        rep, v = self.M.left_normalize(self.el("1", 0))
        self.assertEqual(rep, self.el("0", 0))
        self.assertEqual(v, self.el("", -1))
        self.assertEqual(self.M.mul(v, self.el("1", 0)), rep)

    def test_format_parse(self):
        self.assertEqual(self.M.format_element(self.el("", 0)), "(ε,0)")
        self.assertEqual(self.M.parse_element("(01,2)"), self.el("01", 2))
        self.assertEqual(self.M.parse_element("(ε,a)"), self.el("", 1))
        self.assertEqual(self.M.parse_element("01"), self.el("01", 0))

    def test_parse_bad(self):
        with self.assertRaises(ValueError):
            self.M.parse_element("(2,0)")
        with self.assertRaises(ValueError):
            self.M.parse_element("(01)")

    def test_enumerate(self):
        self.assertEqual(len(self.M.enumerate_up_to(1)), 15)

    def test_contract(self):
        for res in MonoidOps.check_all(self.M, self.M.enumerate_up_to(1)):
            self.assertTrue(res.ok, res.name + ": " + str(res.counterexamples))

    def test_left_ideals_linear(self):
        res = ActionOps.check_left_ideals_linear(self.M, self.M.enumerate_up_to(2))
        self.assertTrue(res.ok, str(res.counterexamples))


if __name__ == "__main__":
    unittest.main()
