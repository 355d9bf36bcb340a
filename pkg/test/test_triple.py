"""!
\file test_triple.py Tests of the triple type [p,q,r]
"""
import unittest

from pylcm.errors import InvalidTriple, ZeroElement
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.freemonoid import FreeMonoid


class TripleTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.M = FreeMonoid(2)

    def test_valid(self):
        s = Triple(self.M, "", "0", "0")
        self.assertEqual(s.slots(), ("", "0", "0"))
        self.assertEqual(s.p1, "0")
        self.assertEqual(s.r1, "")

    def test_not_in_left_ideal(self):
        with self.assertRaises(InvalidTriple) as ctx:
            Triple(self.M, "0", "1", "1")
        self.assertEqual(ctx.exception.reason, "q not in Pp")

    def test_not_in_right_ideal(self):
        with self.assertRaises(InvalidTriple) as ctx:
            Triple(self.M, "0", "10", "0")
        self.assertEqual(ctx.exception.reason, "q not in rP")

    def test_partial_slots(self):
        with self.assertRaises(ValueError):
            Triple(self.M, "0", None, None)

    def test_zero(self):
        z = Triple.zero(self.M)
        self.assertTrue(z.is_zero())
        self.assertEqual(str(z), "0")
        self.assertIsNone(z.key())
        with self.assertRaises(ZeroElement):
            z.slots()

    def test_str(self):
        self.assertEqual(str(Triple(self.M, "", "0", "0")), "[ε,0,0]")

    def test_equality_and_hash(self):
        s = Triple(self.M, "1", "01", "01")
        t = Triple(self.M, "1", "01", "01")
        self.assertEqual(s, t)
        self.assertEqual(len({s, t}), 1)
        self.assertNotEqual(s, Triple(self.M, "1", "01", "0"))


if __name__ == "__main__":
    unittest.main()
