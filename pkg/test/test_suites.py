"""!
\file test_suites.py Tests of the property suites behind the check command
"""
import unittest

from pylcm.action.amodel.odometer import Odometer
from pylcm.cli.suites import SUITE_NAMES, SuiteReport, SuiteRunner
from pylcm.config import DEFAULT_SETTINGS
from pylcm.errors import ResourceLimitError
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mmodel.gridmonoid import GridMonoid
from pylcm.monoid.mmodel.zappaszep import ZappaSzepMonoid
from pylcm.monoid.mtype.abstractmonoid import Side
from pylcm.nekrashevych.nekf.monomialops import MonomialAnalyzer
from pylcm.propertyresult import PropertyResult
from pylcm.spectra.spectraf.semilatticeops import SemilatticeOps
from pylcm.spectra.spectraf.spectrumaction import SpectrumAction


class SuiteRunnerTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.runner = SuiteRunner(FreeMonoid(2), 1)

    def test_expand(self):
        self.assertEqual(SuiteRunner.expand(["all"]), list(SUITE_NAMES))
        self.assertEqual(SuiteRunner.expand(["isg", "lcm", "isg"]), ["lcm", "isg"])
        self.assertEqual(SuiteRunner.expand([]), [])
        with self.assertRaises(ValueError):
            SuiteRunner.expand(["groups"])

    def test_free_suites(self):
        reports = self.runner.run(["lcm", "constructible", "isg", "spectra", "shift"])
        self.assertEqual([r.suite for r in reports], ["lcm", "constructible", "isg", "spectra", "shift"])
        for r in reports:
            self.assertIsNone(r.skipped)
            self.assertTrue(r.ok, r.suite + ": " + str([p.to_dict() for p in r.properties if not p.ok]))
            self.assertIsNone(r.wall_time)

    def test_skipped(self):
        reports = self.runner.run(["instances", "nekrashevych"])
        self.assertTrue(all(r.skipped is not None for r in reports))
        self.assertTrue(all(r.ok for r in reports))
        self.assertEqual(reports[0].properties, [])

    def test_grid_shift_skipped(self):
        r = SuiteRunner(GridMonoid(2), 1).run(["shift"])[0]
        self.assertIn("free", r.skipped)

    def test_timing(self):
        r = SuiteRunner(FreeMonoid(2), 1, timing=True).run(["lcm"])[0]
        self.assertIsNotNone(r.wall_time)
        self.assertIn("wall_time", r.to_dict())

    def test_ceiling(self):
        M = FreeMonoid(2, DEFAULT_SETTINGS.replace(enumeration_ceiling=5))
        with self.assertRaises(ResourceLimitError):
            SuiteRunner(M, 3).run(["lcm"])

    def test_spectra_honours_depth(self):
        M = FreeMonoid(2)
        r = SuiteRunner(M, 2).run(["spectra"])[0]
        left = SemilatticeOps.build_ideal_semilattice(M, 2, Side.LEFT)
        right = SemilatticeOps.build_ideal_semilattice(M, 2, Side.RIGHT)
        states = SpectrumAction.states(left, right)
        res = [p for p in r.properties if p.name == "action_functoriality"][0]
        self.assertTrue(res.ok, str(res.counterexamples))
        self.assertEqual(res.passed + res.skipped, 45 ** 2 * len(states))

    def test_spectra_ceiling(self):
        M = FreeMonoid(2, DEFAULT_SETTINGS.replace(enumeration_ceiling=1000))
        with self.assertRaises(ResourceLimitError) as ctx:
            SuiteRunner(M, 2).run(["spectra"])
        self.assertIn("functoriality", str(ctx.exception))
        self.assertEqual(ctx.exception.limit, 1000)
        self.assertGreater(ctx.exception.requested, 1000)

    def test_operator(self):
        settings = DEFAULT_SETTINGS.replace(delta_depth=2)
        M = FreeMonoid(2, settings)
        r = SuiteRunner(M, 1).run(["operator"])[0]
        self.assertTrue(r.ok, str([p.to_dict() for p in r.properties if not p.ok]))
        self.assertEqual(r.delta_depth, 2)


class OdometerSuiteTest(unittest.TestCase):
    """"""

    def setUp(self):
        settings = DEFAULT_SETTINGS.replace(group_bound=1, delta_depth=1)
        self.runner = SuiteRunner(ZappaSzepMonoid(Odometer(), settings), 1)

    def test_instances(self):
        r = self.runner.run(["instances"])[0]
        self.assertTrue(r.ok, str([p.to_dict() for p in r.properties if not p.ok]))
        self.assertTrue(r.certifying)

    def test_nekrashevych(self):
        r = self.runner.run(["nekrashevych"])[0]
        self.assertTrue(r.ok, str([p.to_dict() for p in r.properties if not p.ok]))
        names = {p.name for p in r.properties}
        self.assertIn("tightness_certified", names)
        certified = [p for p in r.properties if p.name == "tightness_certified"][0]
        self.assertEqual(certified.passed, 1)

    def test_monomials(self):
        M = self.runner.monoid
        self.assertEqual(len(SuiteRunner(M, 1).monomials()), 45)
        self.assertEqual(len(SuiteRunner(M, 3).monomials()), 245)
        monos = SuiteRunner(M, 2).monomials()
        self.assertEqual(len(monos), 245)
        res = MonomialAnalyzer.check_associativity(monos)
        self.assertTrue(res.ok, str(res.counterexamples))
        self.assertEqual(res.passed, 245 ** 3)
        res = MonomialAnalyzer.check_rewriter(monos)
        self.assertTrue(res.ok, str(res.counterexamples))
        self.assertEqual(res.passed, 2 * 245 ** 2 + 245)

    def test_shift_skipped(self):
        r = self.runner.run(["shift"])[0]
        self.assertIsNotNone(r.skipped)


class SuiteReportTest(unittest.TestCase):
    """"""

    def test_to_dict(self):
        report = SuiteReport(
            suite="isg",
            instance="free:2",
            depth=1,
            group_bound=8,
            delta_depth=4,
            seed=0,
            certifying=True,
        )
        bad = PropertyResult("b")
        bad.record(False, "case")
        report.properties = [bad, PropertyResult("a")]
        out = report.to_dict()
        self.assertFalse(out["ok"])
        self.assertEqual([p["name"] for p in out["properties"]], ["a", "b"])
        self.assertNotIn("skipped", out)
        self.assertNotIn("wall_time", out)


if __name__ == "__main__":
    unittest.main()
