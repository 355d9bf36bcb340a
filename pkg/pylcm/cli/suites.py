"""!
\file suites.py Property suites run by the check command
"""
import logging
import time
from dataclasses import dataclass, field
from random import Random
from typing import Callable, Dict, Iterable, List, Optional

from pylcm.action.actionops.actionops import ActionOps
from pylcm.config import Settings
from pylcm.constructible.constructiblef.constructibleanalyzer import (
    ConstructibleAnalyzer,
    DeltaWindow,
)
from pylcm.constructible.ctype.constructibleset import enumerate_delta_pairs
from pylcm.errors import ResourceLimitError, UnsupportedInstance
from pylcm.isg.isgf.isganalyzer import IsgAnalyzer
from pylcm.isg.isgf.tripleops import TripleOps
from pylcm.monoid.mmodel.zappaszep import ZappaSzepMonoid
from pylcm.monoid.monoidops.monoidops import MonoidOps
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Side
from pylcm.nekrashevych.nekf.monomialops import (
    MonomialAnalyzer,
    MonomialOps,
    require_zappa_szep,
    tightness_report,
)
from pylcm.nekrashevych.ntype.monomial import Monomial
from pylcm.operator.operatorf.operatorops import OperatorAnalyzer, OperatorOps
from pylcm.operator.operatorf.wordreduction import check_reduction
from pylcm.propertyresult import PropertyResult
from pylcm.shift.shiftf.shiftops import ShiftAnalyzer, ShiftOps, require_free
from pylcm.spectra.spectraf.filterops import FilterOps
from pylcm.spectra.spectraf.semilatticeops import SemilatticeOps
from pylcm.spectra.spectraf.spectrumaction import SpectrumAction

logger = logging.getLogger(__name__)

SUITE_NAMES = (
    "lcm",
    "instances",
    "constructible",
    "isg",
    "spectra",
    "operator",
    "shift",
    "nekrashevych",
)

RANDOM_WORDS = 10000
SHIFT_WINDOW = 3
SHIFT_PRE = 2
SHIFT_PERIOD = 2
MONOMIAL_DEPTH = 2
MONOMIAL_BOUND = 2


@dataclass
class SuiteReport:
    """!
    \brief outcome of one suite on one instance

    skipped holds the reason when the suite does not apply to the instance.
    wall_time is only reported when timing was requested.
    """

    suite: str
    instance: str
    depth: int
    group_bound: int
    delta_depth: int
    seed: int
    certifying: bool
    properties: List[PropertyResult] = field(default_factory=list)
    skipped: Optional[str] = None
    wall_time: Optional[float] = None

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties)

    def to_dict(self) -> Dict:
        out = {
            "suite": self.suite,
            "instance": self.instance,
            "depth": self.depth,
            "group_bound": self.group_bound,
            "delta_depth": self.delta_depth,
            "seed": self.seed,
            "certifying": self.certifying,
            "properties": [
                p.to_dict() for p in sorted(self.properties, key=lambda p: p.name)
            ],
            "ok": self.ok,
        }
        if self.skipped is not None:
            out["skipped"] = self.skipped
        if self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out


class SuiteRunner:
    """!
    \brief runs named suites on one monoid with fixed depths and seed

    \code{.py}

    >>> runner = SuiteRunner(FreeMonoid(2), depth=2)
    >>> [r.ok for r in runner.run(["isg"])]
    >>> [True]

    \endcode
    """

    def __init__(
        self,
        monoid: AbstractLcmMonoid,
        depth: int,
        settings: Optional[Settings] = None,
        timing: bool = False,
    ):
        self.monoid = monoid
        self.depth = depth
        self.settings = settings if settings is not None else monoid.settings
        self.timing = timing
        self.suites: Dict[str, Callable[[], List[PropertyResult]]] = {
            "lcm": self.lcm,
            "instances": self.instances,
            "constructible": self.constructible,
            "isg": self.isg,
            "spectra": self.spectra,
            "operator": self.operator,
            "shift": self.shift,
            "nekrashevych": self.nekrashevych,
        }

    @staticmethod
    def expand(names: Iterable[str]) -> List[str]:
        """!
        \brief resolve "all" and sort into the canonical order

        \throws ValueError for an unknown suite name
        """
        wanted = set()
        for name in names:
            if name == "all":
                wanted.update(SUITE_NAMES)
            elif name in SUITE_NAMES:
                wanted.add(name)
            else:
                raise ValueError("unknown suite " + repr(name))
        return [n for n in SUITE_NAMES if n in wanted]

    def run(self, names: Iterable[str]) -> List[SuiteReport]:
        """!
        \throws ResourceLimitError when an enumeration exceeds the ceiling
        """
        reports = []
        for name in SuiteRunner.expand(names):
            report = SuiteReport(
                suite=name,
                instance=self.monoid.name(),
                depth=self.depth,
                group_bound=self.settings.group_bound,
                delta_depth=self.settings.delta_depth,
                seed=self.settings.seed,
                certifying=self.monoid.is_certifying(),
            )
            start = time.perf_counter()
            try:
                report.properties = self.suites[name]()
            except UnsupportedInstance as e:
                report.skipped = str(e)
                logger.info("suite %s skipped: %s", name, e)
            if self.timing:
                report.wall_time = time.perf_counter() - start
            for p in report.properties:
                logger.info(
                    "%s/%s: %d passed, %d failed, %d skipped",
                    name,
                    p.name,
                    p.passed,
                    p.failed,
                    p.skipped,
                )
            reports.append(report)
        return reports

    def _elements(self):
        return self.monoid.enumerate_up_to(self.depth)

    def _guard(self, requested: int, what: str):
        """!
        \throws ResourceLimitError when requested exceeds the ceiling
        """
        ceiling = self.settings.enumeration_ceiling
        if requested > ceiling:
            raise ResourceLimitError(limit=ceiling, requested=requested, what=what)

    def lcm(self) -> List[PropertyResult]:
        return MonoidOps.check_all(self.monoid, self._elements())

    def instances(self) -> List[PropertyResult]:
        """!
        \brief self-similar action axioms of a Zappa–Szép product
        """
        M = self.monoid
        if not isinstance(M, ZappaSzepMonoid):
            raise UnsupportedInstance(M.name() + " has no self-similar action")
        A = M.action
        group = A.enumerate_group(self.settings.group_bound)
        return [
            ActionOps.check_self_similarity(A, group, self.depth),
            ActionOps.check_restriction_cocycle(A, group, self.depth),
            ActionOps.check_pseudo_free(A, group, self.depth),
            ActionOps.check_recurrence(A, group, self.depth),
            ActionOps.check_left_ideals_linear(M, self._elements()),
        ]

    def constructible(self) -> List[PropertyResult]:
        M = self.monoid
        elements = self._elements()
        window = DeltaWindow(M, enumerate_delta_pairs(M, self.settings.delta_depth))
        sets = ConstructibleAnalyzer.pool(M, elements)
        return [
            ConstructibleAnalyzer.check_intersection(window, sets),
            ConstructibleAnalyzer.check_translations(window, sets, elements),
            ConstructibleAnalyzer.check_closure(window, sets, elements),
            ConstructibleAnalyzer.check_independence(window, sets),
        ]

    def isg(self) -> List[PropertyResult]:
        M = self.monoid
        triples = TripleOps.enumerate_triples(M, self.depth)
        raw = TripleOps.enumerate_triples(M, self.depth, distinct=False)
        self._guard(len(raw) * len(triples), "triple pairs")
        units = M.enumerate_units(4 * self.settings.group_bound + 2)
        out = [
            IsgAnalyzer.check_associativity(triples),
            IsgAnalyzer.check_involution(triples),
            IsgAnalyzer.check_regularity(triples),
            IsgAnalyzer.check_idempotents(M, triples, self._elements()),
            IsgAnalyzer.check_natural_order(triples),
            IsgAnalyzer.check_e_unitary(triples),
            IsgAnalyzer.check_opposite(triples),
            IsgAnalyzer.check_equality_bruteforce(raw, triples, units),
        ]
        if not isinstance(M, ZappaSzepMonoid):
            out.append(IsgAnalyzer.check_group_label(triples))
        return out

    def spectra(self) -> List[PropertyResult]:
        M = self.monoid
        L = SemilatticeOps.build_semilattice(M, self.depth)
        left = SemilatticeOps.build_ideal_semilattice(M, self.depth, Side.LEFT)
        right = SemilatticeOps.build_ideal_semilattice(M, self.depth, Side.RIGHT)
        prod = SemilatticeOps.product_semilattice(left, right)
        states = SpectrumAction.states(left, right)
        triples = TripleOps.enumerate_triples(M, self.depth)
        self._guard(len(triples) ** 2 * len(states), "functoriality cases")
        out = [
            SemilatticeOps.check_axioms(L),
            FilterOps.check_filters(L),
            SemilatticeOps.check_phi_isomorphism(M, self.depth),
            FilterOps.check_product_correspondence(left, right, prod),
            SpectrumAction.check_top_fixes(M, states),
            SpectrumAction.check_functoriality(triples, states),
        ]
        if isinstance(M, ZappaSzepMonoid):
            out.append(SpectrumAction.check_left_density(M, self.depth))
        return out

    def operator(self) -> List[PropertyResult]:
        M = self.monoid
        T = OperatorOps.build_delta(M, self.settings.delta_depth)
        elements = self._elements()
        triples = TripleOps.enumerate_triples(M, self.depth)
        sets = ConstructibleAnalyzer.pool(M, elements)
        rng = Random(self.settings.seed)
        return [
            OperatorAnalyzer.check_homomorphism(triples, T),
            OperatorAnalyzer.check_adjoint(triples, T),
            OperatorAnalyzer.check_generators(elements, T),
            OperatorAnalyzer.check_projections(sets, elements, T),
            OperatorAnalyzer.check_expectation(triples, T),
            check_reduction(M, T, elements, rng, RANDOM_WORDS),
        ]

    def shift(self) -> List[PropertyResult]:
        M = require_free(self.monoid)
        window = min(self.depth, SHIFT_WINDOW)
        points = ShiftOps.enumerate_points(M.alphabet, SHIFT_PRE, SHIFT_PERIOD)
        triples = TripleOps.enumerate_triples(M, window)
        germs = ShiftOps.enumerate_germs(M, window, points)
        return [
            ShiftAnalyzer.check_cocycle(triples),
            ShiftAnalyzer.check_theta(TripleOps.enumerate_triples(M, 1), points),
            ShiftAnalyzer.check_phi(germs, points, window),
            ShiftAnalyzer.check_germ_eq(germs),
        ]

    def monomials(self) -> List[Monomial]:
        """!
        \brief (α, g, β) with words up to min(depth, MONOMIAL_DEPTH) and g in
        the ball of radius MONOMIAL_BOUND
        """
        A = require_zappa_szep(self.monoid).action
        return MonomialOps.enumerate_monomials(
            A, min(self.depth, MONOMIAL_DEPTH), MONOMIAL_BOUND
        )

    def nekrashevych(self) -> List[PropertyResult]:
        M = require_zappa_szep(self.monoid)
        monos = self.monomials()
        triples = TripleOps.enumerate_triples(M, self.depth)
        report = tightness_report(M, max(self.depth, 3))
        cover = PropertyResult("letter_cover")
        cover.record(report.cover, "letters do not cover the top")
        certified = PropertyResult("tightness_certified")
        if report.recurrent and report.cover_certified:
            certified.record(report.certified, "tightness could not be certified")
        else:
            certified.skip()
            logger.info("; ".join(report.notes))
        return [
            MonomialAnalyzer.check_associativity(monos),
            MonomialAnalyzer.check_rewriter(monos),
            MonomialAnalyzer.check_pi(triples),
            report.f_identity,
            cover,
            certified,
        ]
