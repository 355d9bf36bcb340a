"""!
\file shiftops.py The cocycle h, the action θ of S_{X*} on eventually periodic
points of the full shift, and its groupoid of germs
"""
import logging
from itertools import product
from typing import Dict, List, Optional, Tuple

from pylcm.errors import UnsupportedInstance, ZeroElement
from pylcm.isg.isgf.tripleops import TripleBoolOps, TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid
from pylcm.propertyresult import PropertyResult
from pylcm.shift.stype.bipoint import BiPoint, canonical_half, primitive_root
from pylcm.shift.stype.germ import Germ

logger = logging.getLogger(__name__)


def require_free(M: AbstractLcmMonoid) -> FreeMonoid:
    """!
    \throws UnsupportedInstance unless M is a free monoid
    """
    if not isinstance(M, FreeMonoid):
        raise UnsupportedInstance(
            "the shift groupoid is built for free monoids, not " + M.name()
        )
    return M


class ShiftOps:
    """"""

    @staticmethod
    def cocycle_h(s: Triple) -> int:
        """!
        \brief h[α, β, γ] = |β| − |α| − |γ|

        \throws ZeroElement
        """
        if s.is_zero():
            raise ZeroElement("h is undefined on the zero")
        return len(s.q) - len(s.p) - len(s.r)

    @staticmethod
    def in_domain(s: Triple, pt: BiPoint) -> bool:
        """!
        \brief x starts with the reverse of γ and y with γ₁, β = γγ₁
        """
        if s.is_zero():
            return False
        gamma, gamma1 = s.r, s.r1
        return (
            pt.prefix_left(len(gamma)) == gamma[::-1]
            and pt.prefix_right(len(gamma1)) == gamma1
        )

    @staticmethod
    def theta_apply(s: Triple, pt: BiPoint) -> Optional[BiPoint]:
        """!
        \brief θ_s(x, y) = σ^{h(s)}(x, y) on the domain of s, None elsewhere

        \code{.py}

        >>> M = FreeMonoid(2)
        >>> s = Triple(M, "", "0", "")
        >>> str(ShiftOps.theta_apply(s, BiPoint.from_text("[1].0[1]")))
        >>> "[1]0.[1]"

        \endcode
        """
        if not ShiftOps.in_domain(s, pt):
            return None
        return pt.shift(ShiftOps.cocycle_h(s))

    @staticmethod
    def germ(s: Triple, pt: BiPoint) -> Germ:
        """!
        \throws ValueError if pt is outside the domain of s
        """
        if not ShiftOps.in_domain(s, pt):
            raise ValueError(str(pt) + " is not in the domain of " + str(s))
        return Germ(s, pt)

    @staticmethod
    def germ_eq(g1: Germ, g2: Germ) -> bool:
        """!
        \brief [s, x] = [t, x'] iff x = x', h(s) = h(t) and both are defined
        at x
        """
        return (
            g1.point == g2.point
            and ShiftOps.in_domain(g1.s, g1.point)
            and ShiftOps.in_domain(g2.s, g2.point)
            and ShiftOps.cocycle_h(g1.s) == ShiftOps.cocycle_h(g2.s)
        )

    @staticmethod
    def germ_eq_bruteforce(g1: Germ, g2: Germ) -> bool:
        """!
        \brief search for an idempotent e = [p, qp, q] containing the point
        with se = te

        The idempotents containing (x, y) are those with p a prefix of y and
        q the reverse of a prefix of x; prefixes are searched up to two
        letters beyond the longest slot of s and t.
        """
        if g1.point != g2.point:
            return False
        s, t, pt = g1.s, g2.s, g1.point
        if not (ShiftOps.in_domain(s, pt) and ShiftOps.in_domain(t, pt)):
            return False
        M = s.monoid
        bound = max(len(w) for w in (s.p, s.q, s.r, t.p, t.q, t.r)) + 2
        for j, k in product(range(bound + 1), repeat=2):
            e = TripleOps.idempotent(M, pt.prefix_right(k), pt.prefix_left(j)[::-1])
            se = TripleOps.product(s, e)
            if se.is_zero():
                continue
            if TripleBoolOps.triple_eq(se, TripleOps.product(t, e)):
                return True
        return False

    @staticmethod
    def phi_map(g: Germ) -> Tuple[int, BiPoint]:
        """!
        \brief Φ[s, x] = (h(s), x)
        """
        return ShiftOps.cocycle_h(g.s), g.point

    @staticmethod
    def compose_germs(g2: Germ, g1: Germ) -> Optional[Germ]:
        """!
        \brief [t, θ_s(x)][s, x] = [ts, x], None when the germs are not
        composable
        """
        image = ShiftOps.theta_apply(g1.s, g1.point)
        if image is None or image != g2.point:
            return None
        return Germ(TripleOps.product(g2.s, g1.s), g1.point)

    @staticmethod
    def surjectivity_witness(M: FreeMonoid, n: int, pt: BiPoint) -> Germ:
        """!
        \brief a germ with Φ-image (n, pt): [ε, y₁…y_n, ε] for n > 0,
        the generator of x̄ = x_{|n|}…x₁ for n < 0 and the top for n = 0
        """
        if n > 0:
            one = M.identity()
            return Germ(Triple(M, one, pt.prefix_right(n), one), pt)
        if n < 0:
            return Germ(TripleOps.generator(M, pt.prefix_left(-n)[::-1]), pt)
        return Germ(TripleOps.top(M), pt)

    @staticmethod
    def enumerate_points(alphabet: str, max_pre: int, max_period: int) -> List[BiPoint]:
        """!
        \brief every point whose halves have pre-period <= max_pre and a
        primitive period <= max_period, sorted
        """
        halves = set()
        words = [""]
        for n in range(1, max(max_pre, max_period) + 1):
            words += ["".join(w) for w in product(alphabet, repeat=n)]
        periods = [w for w in words if w and len(w) <= max_period and primitive_root(w) == w]
        pres = [w for w in words if len(w) <= max_pre]
        for pre, per in product(pres, periods):
            halves.add(canonical_half(pre, per))
        ordered = sorted(halves)
        points = {
            BiPoint(lp, lper, rp, rper)
            for (lp, lper), (rp, rper) in product(ordered, repeat=2)
        }
        logger.debug("%d points with pre <= %d, period <= %d", len(points), max_pre, max_period)
        return sorted(points)

    @staticmethod
    def enumerate_germs(M: AbstractLcmMonoid, window: int, points: List[BiPoint]) -> List[Germ]:
        """!
        \brief the germs [s, x] for triples with slots of length <= window
        and the given points
        """
        require_free(M)
        triples = TripleOps.enumerate_triples(M, window)
        return [
            Germ(s, pt)
            for s in triples
            for pt in points
            if ShiftOps.in_domain(s, pt)
        ]


class ShiftAnalyzer:
    """"""

    @staticmethod
    def check_cocycle(triples: List[Triple]) -> PropertyResult:
        """!
        \brief h(st) = h(s) + h(t) for st nonzero, and h(s) = 0 only for
        idempotents
        """
        res = PropertyResult("cocycle")
        h = ShiftOps.cocycle_h
        for s, t in product(triples, repeat=2):
            st = TripleOps.product(s, t)
            if st.is_zero():
                continue
            res.record(h(st) == h(s) + h(t), lambda: str(s) + " " + str(t))
        for s in triples:
            if h(s) == 0:
                res.record(TripleBoolOps.is_idempotent(s), lambda: str(s) + " has h = 0")
        return res

    @staticmethod
    def check_theta(triples: List[Triple], points: List[BiPoint]) -> PropertyResult:
        """!
        \brief θ_s θ_t = θ_st wherever the left side is defined, and θ_st is
        undefined wherever θ_t is
        """
        res = PropertyResult("theta_functoriality")
        for s, t in product(triples, repeat=2):
            st = TripleOps.product(s, t)
            for pt in points:
                inner = ShiftOps.theta_apply(t, pt)
                direct = ShiftOps.theta_apply(st, pt) if not st.is_zero() else None
                outer = None if inner is None else ShiftOps.theta_apply(s, inner)
                res.record(
                    outer == direct,
                    lambda: str(s) + " " + str(t) + " at " + str(pt),
                )
        return res

    @staticmethod
    def check_phi(germs: List[Germ], points: List[BiPoint], window: int) -> PropertyResult:
        """!
        \brief Φ is injective on germ classes, hits every (n, x) with
        |n| <= window, and turns composition into addition
        """
        res = PropertyResult("phi_bijection")
        if not germs:
            return res
        M = germs[0].s.monoid
        classes: Dict[Tuple[int, BiPoint], List[Germ]] = {}
        for g in germs:
            classes.setdefault(ShiftOps.phi_map(g), []).append(g)
        for image, members in classes.items():
            first = members[0]
            for g in members[1:]:
                res.record(
                    ShiftOps.germ_eq_bruteforce(first, g),
                    lambda: str(first) + " and " + str(g) + " share " + str(image),
                )
        targets = [(n, pt) for pt in points for n in range(-window, window + 1)]
        for n, pt in targets:
            w = ShiftOps.surjectivity_witness(M, n, pt)
            res.record(
                ShiftOps.phi_map(w) == (n, pt) and (n, pt) in classes,
                lambda: "no germ over " + str((n, pt)),
            )
        res.record(
            len(classes) == len(targets),
            lambda: str(len(classes)) + " germ classes, " + str(len(targets)) + " pairs",
        )
        by_point: Dict[BiPoint, List[Germ]] = {}
        for image, members in classes.items():
            by_point.setdefault(image[1], []).append(members[0])
        for g1 in (members[0] for members in classes.values()):
            target = ShiftOps.theta_apply(g1.s, g1.point)
            for g2 in by_point.get(target, []):
                g = ShiftOps.compose_germs(g2, g1)
                h1, x = ShiftOps.phi_map(g1)
                h2, _ = ShiftOps.phi_map(g2)
                res.record(
                    g is not None and not g.s.is_zero() and ShiftOps.phi_map(g) == (h1 + h2, x),
                    lambda: str(g2) + " ∘ " + str(g1),
                )
        return res

    @staticmethod
    def check_germ_eq(germs: List[Germ]) -> PropertyResult:
        """!
        \brief the h criterion agrees with the idempotent search
        """
        res = PropertyResult("germ_eq_bruteforce")
        by_point: Dict[BiPoint, List[Germ]] = {}
        for g in germs:
            by_point.setdefault(g.point, []).append(g)
        for group in by_point.values():
            for g1, g2 in product(group, repeat=2):
                res.record(
                    ShiftOps.germ_eq(g1, g2) == ShiftOps.germ_eq_bruteforce(g1, g2),
                    lambda: str(g1) + " ~ " + str(g2),
                )
        return res
