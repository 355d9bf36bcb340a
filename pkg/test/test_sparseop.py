"""!
\file test_sparseop.py Tests of the Δ truncation and of SparseOp
"""
import unittest

import numpy as np

from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.operator.otype.deltatruncation import DeltaTruncation
from pylcm.operator.otype.sparseop import SparseOp


class DeltaTruncationTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.T = DeltaTruncation(FreeMonoid(2), 1)

    def test_basis(self):
        self.assertEqual(
            [tuple(p) for p in self.T.basis],
            [("", ""), ("0", ""), ("0", "0"), ("1", ""), ("1", "1")],
        )
        self.assertEqual(len(self.T), 5)

    def test_lookup(self):
        self.assertEqual(self.T.lookup("0", "0"), 2)
        self.assertIsNone(self.T.lookup("0", "1"))
        self.assertIsNone(self.T.lookup("00", ""))

    def test_labels(self):
        self.assertEqual(self.T.labels()[0], "(ε|ε)")
        self.assertEqual(self.T.labels()[4], "(1|1)")

    def test_size_grows(self):
        # sum of (length + 1) over words of length <= 3
        self.assertEqual(len(DeltaTruncation(FreeMonoid(2), 3)), 49)


class SparseOpTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.a = SparseOp.from_triplets(3, [(1, 0, 1), (2, 1, 1)])
        self.b = SparseOp.from_triplets(3, [(0, 1, 1)], boundary=[2])

    def test_triplets(self):
        self.assertEqual(self.a.triplets(), [(1, 0, 1), (2, 1, 1)])
        self.assertEqual(self.a.nnz(), 2)
        self.assertEqual(self.a.dim, 3)

    def test_square(self):
        with self.assertRaises(ValueError):
            SparseOp(np.zeros((2, 3), dtype=np.int64))

    def test_product(self):
        ab = self.a @ self.b
        self.assertEqual(ab.triplets(), [(1, 1, 1)])
        self.assertEqual(ab.boundary, frozenset([2]))

    def test_boundary_propagates(self):
        # a sends column 1 to row 2, a boundary column of c
        c = SparseOp.from_triplets(3, [], boundary=[2])
        self.assertEqual((c @ self.a).boundary, frozenset([1]))

    def test_transpose(self):
        self.assertEqual(self.a.transpose().triplets(), [(0, 1, 1), (1, 2, 1)])

    def test_identity_and_zero(self):
        self.assertTrue((SparseOp.identity(3) @ self.a).equals(self.a))
        self.assertTrue((SparseOp.zero(3) @ self.a).equals(SparseOp.zero(3)))

    def test_diagonal_part(self):
        m = SparseOp.from_triplets(3, [(0, 0, 1), (1, 0, 1), (2, 2, 1)])
        self.assertEqual(m.diagonal_part().triplets(), [(0, 0, 1), (2, 2, 1)])

    def test_equals_on(self):
        c = SparseOp.from_triplets(3, [(0, 1, 1), (0, 2, 1)])
        self.assertFalse(self.b.equals(c))
        self.assertTrue(self.b.equals_on(c))
        self.assertFalse(self.b.equals_on(c, columns=[2]))

    def test_dense(self):
        d = self.a.to_dense()
        self.assertEqual(d.shape, (3, 3))
        self.assertEqual(int(d[2, 1]), 1)
        self.assertEqual(int(d.sum()), 2)


if __name__ == "__main__":
    unittest.main()
