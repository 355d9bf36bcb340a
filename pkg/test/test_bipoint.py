"""!
\file test_bipoint.py Tests of eventually periodic points of the full shift
"""
import unittest

from pylcm.errors import ParseError
from pylcm.shift.stype.bipoint import BiPoint, canonical_half, primitive_root


class BiPointTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.pt = BiPoint.from_text("[1].0[1]")

    def test_primitive_root(self):
        self.assertEqual(primitive_root("0101"), "01")
        self.assertEqual(primitive_root("011"), "011")
        self.assertEqual(primitive_root("000"), "0")

    def test_canonical_half(self):
        self.assertEqual(canonical_half("1", "01"), ("", "10"))
        self.assertEqual(canonical_half("00", "0"), ("", "0"))
        self.assertEqual(canonical_half("0", "1"), ("0", "1"))
        with self.assertRaises(ValueError):
            canonical_half("0", "")

    def test_text(self):
        self.assertEqual(str(self.pt), "[1].0[1]")
        self.assertEqual(self.pt.right_pre, "0")
        self.assertEqual(self.pt.left_period, "1")
        self.assertEqual(BiPoint.from_text("[01].[0]"), BiPoint("", "10", "", "0"))

    def test_bad_text(self):
        with self.assertRaises(ParseError):
            BiPoint.from_text("1.0")
        with self.assertRaises(ParseError):
            BiPoint.from_text("[].0[1]")

    def test_prefixes(self):
        self.assertEqual(self.pt.prefix_right(3), "011")
        self.assertEqual(self.pt.prefix_left(2), "11")
        self.assertEqual(self.pt.prefix_right(0), "")

    def test_shift(self):
        moved = self.pt.shift(1)
        self.assertEqual(str(moved), "[1]0.[1]")
        self.assertEqual(moved.shift(-1), self.pt)
        self.assertEqual(self.pt.shift(0), self.pt)

    def test_equal_points(self):
        # …1111.0111… read with a longer pre-period
        self.assertEqual(BiPoint("1", "1", "01", "1"), self.pt)
        self.assertEqual(hash(BiPoint("1", "1", "01", "1")), hash(self.pt))
        self.assertEqual(self.pt.complexity(), 3)


if __name__ == "__main__":
    unittest.main()
