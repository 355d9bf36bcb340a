"""!
\file test_odometer.py Tests of the binary adding machine
"""
import unittest

from pylcm.action.actionops.actionops import ActionOps, words_up_to
from pylcm.action.amodel.odometer import Odometer, value_word, word_value


class OdometerTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.G = Odometer()
        self.group = self.G.enumerate_group(3)

    def test_word_value(self):
        self.assertEqual(word_value("01"), 2)
        self.assertEqual(word_value(""), 0)
        self.assertEqual(value_word(2, 2), "01")
        self.assertEqual(value_word(-1, 2), "11")

    def test_generator_rules(self):
        self.assertEqual(self.G.act_restrict(1, "0"), ("1", 0))
        self.assertEqual(self.G.act_restrict(1, "1"), ("0", 1))
        self.assertEqual(self.G.act_restrict(1, "11"), ("00", 1))

    def test_act_restrict(self):
        self.assertEqual(self.G.act_restrict(2, "0"), ("0", 1))
        self.assertEqual(self.G.act_restrict(-1, "0"), ("1", -1))

    def test_transport(self):
        self.assertEqual(self.G.transport("0", "0", 1), 2)
        self.assertEqual(self.G.transport("1", "0", 0), -1)
        self.assertIsNone(self.G.transport("0", "01", 0))

    def test_transport_realizes(self):
        for alpha in words_up_to("01", 2):
            for delta in words_up_to("01", 2):
                if len(alpha) != len(delta):
                    continue
                for k in (-2, 0, 3):
                    j = self.G.transport(alpha, delta, k)
                    self.assertEqual(self.G.act_restrict(j, alpha), (delta, k))

    def test_enumerate_group(self):
        self.assertEqual(self.G.enumerate_group(2), [0, -1, 1, -2, 2])

    def test_parse_group(self):
        self.assertEqual(self.G.parse_group("a^3"), 3)
        self.assertEqual(self.G.parse_group("a"), 1)
        self.assertEqual(self.G.parse_group("e"), 0)
        self.assertEqual(self.G.parse_group("-2"), -2)

    def test_flags(self):
        self.assertTrue(self.G.is_recurrent())
        self.assertTrue(self.G.is_certifying())

    def test_self_similarity(self):
        res = ActionOps.check_self_similarity(self.G, self.group, 3)
        self.assertTrue(res.ok, str(res.counterexamples))

    def test_restriction_cocycle(self):
        res = ActionOps.check_restriction_cocycle(self.G, self.group, 3)
        self.assertTrue(res.ok, str(res.counterexamples))

    def test_pseudo_free(self):
        res = ActionOps.check_pseudo_free(self.G, self.G.enumerate_group(8), 4)
        self.assertTrue(res.ok, str(res.counterexamples))

    def test_recurrence(self):
        res = ActionOps.check_recurrence(self.G, self.group, 3)
        self.assertTrue(res.ok, str(res.counterexamples))


if __name__ == "__main__":
    unittest.main()
