"""!
\file test_semilattice.py Tests of the idempotent and ideal semilattices
"""
import unittest

from pylcm.errors import NotIdempotent, ResourceLimitError
from pylcm.isg.isgf.tripleops import TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mmodel.gridmonoid import GridMonoid
from pylcm.monoid.mtype.abstractmonoid import Side
from pylcm.spectra.spectraf.semilatticeops import SemilatticeOps


class FreeSemilatticeTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.M = FreeMonoid(2)
        self.E = SemilatticeOps.build_semilattice(self.M, 1)
        self.left = SemilatticeOps.build_ideal_semilattice(self.M, 1, Side.LEFT)
        self.right = SemilatticeOps.build_ideal_semilattice(self.M, 1, Side.RIGHT)

    def test_sizes(self):
        self.assertEqual(len(self.E), 10)
        # P, 0P, 1P and the empty ideal
        self.assertEqual(len(self.right), 4)
        self.assertEqual(len(self.left), 4)

    def test_zero_and_top(self):
        self.assertTrue(self.E.object(self.E.zero).is_zero())
        self.assertEqual(self.E.object(self.E.top), TripleOps.top(self.M))
        self.assertIsNone(self.right.object(self.right.zero))
        self.assertEqual(self.right.object(self.right.top), "")

    def test_disjoint_right_ideals(self):
        a = self.right.index_of("0")
        b = self.right.index_of("1")
        self.assertEqual(self.right.meet(a, b), self.right.zero)
        self.assertTrue(self.right.leq(a, self.right.top))

    def test_axioms(self):
        for L in (self.E, self.left, self.right):
            res = SemilatticeOps.check_axioms(L)
            self.assertTrue(res.ok, str(res.counterexamples))

    def test_phi_ideal_pairs(self):
        e = TripleOps.idempotent(self.M, "0", "1")
        pair = SemilatticeOps.phi_ideal_pairs(e)
        self.assertEqual(pair.left, "1")
        self.assertEqual(pair.right, "0")

    def test_phi_rejects(self):
        with self.assertRaises(NotIdempotent):
            SemilatticeOps.phi_ideal_pairs(TripleOps.generator(self.M, "0"))
        with self.assertRaises(NotIdempotent):
            SemilatticeOps.phi_ideal_pairs(Triple.zero(self.M))

    def test_phi_isomorphism(self):
        for depth in (1, 2):
            res = SemilatticeOps.check_phi_isomorphism(self.M, depth)
            self.assertTrue(res.ok, str(res.counterexamples))

    def test_product(self):
        prod = SemilatticeOps.product_semilattice(self.left, self.right)
        self.assertEqual(len(prod), 10)
        self.assertEqual(prod.object(prod.top), (self.left.top, self.right.top))
        self.assertTrue(SemilatticeOps.check_axioms(prod).ok)

    def test_dense(self):
        top = self.E.top
        e0 = self.E.index_of(TripleOps.canonical_key(TripleOps.idempotent(self.M, "0", "")))
        self.assertTrue(SemilatticeOps.is_dense(self.E, top, top))
        self.assertFalse(SemilatticeOps.is_dense(self.E, e0, top))

    def test_ceiling(self):
        with self.assertRaises(ResourceLimitError):
            SemilatticeOps.close_under_meet(
                ["a", "b", "c"],
                lambda x, y: x if x == y else "0",
                lambda x: x,
                zero="0",
                top="1",
                ceiling=3,
            )


class GridSemilatticeTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.M = GridMonoid(2)

    def test_size(self):
        E = SemilatticeOps.build_semilattice(self.M, 1)
        self.assertEqual(len(E.nonzero()), 16)
        right = SemilatticeOps.build_ideal_semilattice(self.M, 1, Side.RIGHT)
        self.assertIsNotNone(right.index_of((1, 1)))
        self.assertEqual(len(right.nonzero()), 4)

    def test_phi_isomorphism(self):
        res = SemilatticeOps.check_phi_isomorphism(self.M, 1)
        self.assertTrue(res.ok, str(res.counterexamples))


if __name__ == "__main__":
    unittest.main()
