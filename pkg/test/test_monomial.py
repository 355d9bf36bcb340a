"""!
\file test_monomial.py Tests of monomials s_α u_g s_β*
"""
import unittest

from pylcm.action.amodel.odometer import Odometer
from pylcm.nekrashevych.ntype.monomial import Monomial


class MonomialTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.A = Odometer()

    def test_text(self):
        self.assertEqual(str(Monomial(self.A, "", 1, "1")), "(ε,1,1)")
        self.assertEqual(str(Monomial(self.A, "01", -2, "")), "(01,-2,ε)")
        self.assertEqual(str(Monomial.zero(self.A)), "0")

    def test_identity(self):
        one = Monomial.identity(self.A)
        self.assertEqual(one, Monomial(self.A, "", 0, ""))
        self.assertFalse(one.is_zero())

    def test_zero(self):
        z = Monomial.zero(self.A)
        self.assertTrue(z.is_zero())
        self.assertIsNone(z.key())
        self.assertNotEqual(z, Monomial.identity(self.A))

    def test_partial(self):
        with self.assertRaises(ValueError):
            Monomial(self.A, "0", None, "")

    def test_hash(self):
        a = Monomial(self.A, "0", 1, "1")
        self.assertEqual(len({a, Monomial(self.A, "0", 1, "1")}), 1)


if __name__ == "__main__":
    unittest.main()
