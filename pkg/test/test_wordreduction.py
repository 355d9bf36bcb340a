"""!
\file test_wordreduction.py Tests of the J J* J normal form of words
"""
import unittest
from random import Random

from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mmodel.gridmonoid import GridMonoid
from pylcm.operator.operatorf.operatorops import OperatorOps
from pylcm.operator.operatorf.wordreduction import (
    Token,
    check_reduction,
    collapse,
    normalize,
    random_word,
    reduce_word,
    word_matrix,
)


class WordReductionTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.M = FreeMonoid(2)

    def test_adjoint_then_generator(self):
        s = reduce_word(self.M, [Token("0", True), Token("0")])
        self.assertEqual(s, Triple(self.M, "", "0", "0"))
        self.assertEqual(str(s), "[ε,0,0]")

    def test_disjoint_is_zero(self):
        s = reduce_word(self.M, [Token("0", True), Token("0"), Token("1", True)])
        self.assertTrue(s.is_zero())

    def test_generators_only(self):
        s = reduce_word(self.M, [Token("0"), Token("1")])
        self.assertEqual(s, Triple(self.M, "01", "01", "01"))

    def test_empty_word(self):
        self.assertEqual(reduce_word(self.M, []), Triple(self.M, "", "", ""))

    def test_collapse(self):
        self.assertEqual(collapse(self.M, "0", "0", "0"), ("", "0", ""))
        self.assertIsNone(collapse(self.M, "0", "1", ""))

    def test_normalize(self):
        self.assertTrue(normalize(self.M, "0", "1", "").is_zero())
        self.assertEqual(normalize(self.M, "", "", "0"), Triple(self.M, "0", "0", "0"))

    def test_word_matrix(self):
        T = OperatorOps.build_delta(self.M, 2)
        w = [Token("0", True), Token("0")]
        self.assertTrue(
            word_matrix(w, T).equals(
                OperatorOps.represent_triple(reduce_word(self.M, w), T)
            )
        )

    def test_random_word(self):
        rng = Random(3)
        for _ in range(20):
            w = random_word(rng, ["0", "1"], 4)
            self.assertTrue(1 <= len(w) <= 4)

    def test_check_reduction(self):
        T = OperatorOps.build_delta(self.M, 3)
        res = check_reduction(self.M, T, self.M.enumerate_up_to(2), Random(0), 300)
        self.assertTrue(res.ok, str(res.counterexamples))
        self.assertEqual(res.passed, 300)

    def test_grid(self):
        M = GridMonoid(2)
        T = OperatorOps.build_delta(M, 2)
        res = check_reduction(M, T, M.enumerate_up_to(1), Random(1), 200, max_tokens=5)
        self.assertTrue(res.ok, str(res.counterexamples))


if __name__ == "__main__":
    unittest.main()
