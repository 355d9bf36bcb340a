"""!
\file test_monomialops.py Tests of monomial products and of π
"""
import os
import unittest

from pylcm.action.amodel.odometer import Odometer
from pylcm.config import DEFAULT_SETTINGS
from pylcm.errors import UnsupportedInstance
from pylcm.isg.isgf.tripleops import TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mmodel.zappaszep import ZappaSzepMonoid
from pylcm.monoid.monoidops.instancefactory import make_monoid
from pylcm.nekrashevych.nekf.monomialops import (
    MonomialAnalyzer,
    MonomialOps,
    MonomialTable,
    require_zappa_szep,
    tightness_report,
)
from pylcm.nekrashevych.ntype.monomial import Monomial

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data", "odometer.json")


class MonomialOpsTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.A = Odometer()
        self.Z = ZappaSzepMonoid(self.A, DEFAULT_SETTINGS.replace(group_bound=2))

    def test_mono_mul(self):
        mul = MonomialOps.mono_mul
        self.assertEqual(
            mul(Monomial(self.A, "", 1, "1"), Monomial(self.A, "1", 0, "")),
            Monomial(self.A, "", 1, ""),
        )
        self.assertEqual(
            mul(Monomial(self.A, "", 1, ""), Monomial(self.A, "1", 0, "")),
            Monomial(self.A, "0", 1, ""),
        )
        self.assertEqual(
            mul(Monomial(self.A, "", 0, "01"), Monomial(self.A, "0", 0, "")),
            Monomial(self.A, "", 0, "1"),
        )
        self.assertTrue(
            mul(Monomial(self.A, "", 0, "0"), Monomial(self.A, "1", 0, "")).is_zero()
        )
        self.assertTrue(mul(Monomial.zero(self.A), Monomial.identity(self.A)).is_zero())

    def test_mono_star(self):
        m = Monomial(self.A, "0", 1, "1")
        self.assertEqual(MonomialOps.mono_star(m), Monomial(self.A, "1", -1, "0"))
        self.assertTrue(MonomialOps.mono_star(Monomial.zero(self.A)).is_zero())

    def test_pi(self):
        self.assertEqual(
            MonomialOps.pi_represent(TripleOps.top(self.Z)), Monomial.identity(self.A)
        )
        v = TripleOps.generator(self.Z, self.Z.element("0"))
        self.assertEqual(MonomialOps.pi_represent(v), Monomial(self.A, "0", 0, ""))
        u = TripleOps.generator(self.Z, self.Z.element("", 1))
        self.assertEqual(MonomialOps.pi_represent(u), Monomial(self.A, "", 1, ""))
        self.assertTrue(MonomialOps.pi_represent(Triple.zero(self.Z)).is_zero())

    def test_pi_free(self):
        with self.assertRaises(UnsupportedInstance):
            MonomialOps.pi_represent(TripleOps.top(FreeMonoid(2)))
        with self.assertRaises(UnsupportedInstance):
            require_zappa_szep(FreeMonoid(2))

    def test_enumerate(self):
        monos = MonomialOps.enumerate_monomials(self.A, 1, 1)
        self.assertEqual(len(monos), 3 * 3 * 3)


class MonomialAnalyzerTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.A = Odometer()
        self.monos = MonomialOps.enumerate_monomials(self.A, 1, 1)

    def test_associativity(self):
        res = MonomialAnalyzer.check_associativity(self.monos)
        self.assertTrue(res.ok, str(res.counterexamples))
        self.assertEqual(res.passed, 27 ** 3)

    def test_rewriter(self):
        res = MonomialAnalyzer.check_rewriter(self.monos)
        self.assertTrue(res.ok, str(res.counterexamples))

    def test_pi(self):
        Z = ZappaSzepMonoid(self.A, DEFAULT_SETTINGS.replace(group_bound=1))
        res = MonomialAnalyzer.check_pi(TripleOps.enumerate_triples(Z, 1))
        self.assertTrue(res.ok, str(res.counterexamples))


class MonomialTableTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.A = Odometer()
        self.monos = MonomialOps.enumerate_monomials(self.A, 1, 1)
        self.T = MonomialTable(self.monos)

    def test_interning(self):
        self.assertEqual(self.T.base, list(range(27)))
        m = self.monos[5]
        again = self.T.intern(Monomial(self.A, m.alpha, m.g, m.beta))
        self.assertEqual(again, 5)

    def test_table(self):
        tab = self.T.table(self.T.base, self.T.base)
        self.assertEqual(tab.shape, (27, 27))
        for i, a in enumerate(self.monos):
            for j, b in enumerate(self.monos):
                self.assertEqual(self.T.items[tab[i, j]], MonomialOps.mono_mul(a, b))
        zero = self.T.ids[None]
        self.assertIn(zero, tab)
        self.assertEqual(self.T.table([], self.T.base).shape, (0, 27))


class TightnessTest(unittest.TestCase):
    """"""

    def test_odometer(self):
        Z = ZappaSzepMonoid(Odometer(), DEFAULT_SETTINGS.replace(group_bound=1))
        report = tightness_report(Z, 3)
        self.assertTrue(report.f_identity.ok)
        self.assertEqual(report.f_identity.passed, 15)
        self.assertTrue(report.cover)
        self.assertTrue(report.recurrent)
        self.assertTrue(report.certified)
        self.assertEqual(report.notes, [])

    def test_automaton(self):
        settings = DEFAULT_SETTINGS.replace(
            group_bound=1, automaton_depth=4, transport_bound=6
        )
        Z = make_monoid("automaton:" + DATA, settings)
        report = tightness_report(Z, 2)
        self.assertTrue(report.f_identity.ok)
        self.assertTrue(report.cover)
        self.assertFalse(report.cover_certified)
        self.assertFalse(report.certified)
        self.assertEqual(len(report.notes), 1)
        self.assertIn("certified", report.to_dict())

    def test_free(self):
        with self.assertRaises(UnsupportedInstance):
            tightness_report(FreeMonoid(2), 1)


if __name__ == "__main__":
    unittest.main()
