"""!
\file test_automaton.py Tests of automaton presented self-similar actions
"""
import json
import os
import tempfile
import unittest

from pylcm.action.actionops.actionops import ActionOps
from pylcm.action.amodel.automaton import AutomatonAction, free_reduce
from pylcm.config import DEFAULT_SETTINGS
from pylcm.monoid.monoidops.instancefactory import make_monoid

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data", "odometer.json")


class AutomatonActionTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.A = AutomatonAction.from_json(DATA, depth=5, transport_bound=4)
        self.a = self.A.parse_group("a")

    def test_free_reduce(self):
        self.assertEqual(free_reduce((("a", 1), ("a", -1), ("e", 1))), ())
        self.assertEqual(free_reduce((("a", 1), ("a", 1))), (("a", 1), ("a", 1)))

    def test_generator_rules(self):
        self.assertEqual(self.A.act_restrict(self.a, "0"), ("1", ()))
        self.assertEqual(self.A.act_restrict(self.a, "1"), ("0", self.a))

    def test_inverse(self):
        inv = self.A.inverse(self.a)
        self.assertEqual(self.A.act_restrict(inv, "1"), ("0", ()))
        self.assertTrue(self.A.is_identity(self.A.compose(self.a, inv)))

    def test_format_parse(self):
        self.assertEqual(self.A.format_group(()), "e")
        self.assertEqual(self.A.format_group(self.A.inverse(self.a)), "a^-1")
        self.assertEqual(self.A.parse_group("a.a^-1"), ())

    def test_unknown_state(self):
        with self.assertRaises(ValueError):
            self.A.parse_group("b")

    def test_flags(self):
        self.assertFalse(self.A.is_certifying())
        self.assertTrue(self.A.is_recurrent())

    def test_ball(self):
        # a^0, a^-1, a, a^-2, a^2 up to radius 2
        self.assertEqual(len(self.A.enumerate_group(2)), 5)

    def test_key_cache_bounded(self):
        table = {"e": [[0, "e"], [1, "e"]], "a": [[1, "e"], [0, "a"]]}
        A = AutomatonAction(2, table, depth=3, key_cache_size=8)
        first = A.key(self.a)
        for n in range(1, 40):
            A.key(self.a * n)
            A.key(A.inverse(self.a * n))
        self.assertLessEqual(A._images.cache_info().currsize, 8)
        self.assertEqual(A.key(self.a), first)
        self.assertEqual(A.key(self.a * 8), A.key(()))
        self.assertTrue(A.eq(self.a * 16, ()))

    def test_transport(self):
        j = self.A.transport("0", "1", ())
        self.assertEqual(self.A.act_restrict(j, "0"), ("1", ()))

    def test_axioms(self):
        group = self.A.enumerate_group(2)
        for res in (
            ActionOps.check_self_similarity(self.A, group, 3),
            ActionOps.check_restriction_cocycle(self.A, group, 3),
            ActionOps.check_pseudo_free(self.A, group, 3),
        ):
            self.assertTrue(res.ok, res.name + ": " + str(res.counterexamples))

    def test_malformed_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "bad.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump({"alphabet": 2, "states": ["a"]}, fh)
            with self.assertRaises(ValueError):
                AutomatonAction.from_json(path)

    def test_not_a_permutation(self):
        with self.assertRaises(ValueError):
            AutomatonAction(2, {"a": [[0, "e"], [0, "a"]]})

    def test_factory(self):
        M = make_monoid("automaton:" + DATA, DEFAULT_SETTINGS)
        self.assertEqual(M.name(), "automaton:" + DATA)
        self.assertFalse(M.is_certifying())


if __name__ == "__main__":
    unittest.main()
