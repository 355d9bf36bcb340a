"""!
\file spectrumaction.py Action of S_P on pairs of filters of the ideal
semilattices P_l and P_r
"""
import logging
from itertools import product
from typing import List, NamedTuple, Optional

from pylcm.isg.isgf.tripleops import TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element, Side
from pylcm.propertyresult import PropertyResult
from pylcm.spectra.spectraf.filterops import FilterOps
from pylcm.spectra.spectraf.semilatticeops import SemilatticeOps
from pylcm.spectra.stype.filter import Filter
from pylcm.spectra.stype.semilattice import FiniteSemilattice

logger = logging.getLogger(__name__)


class FilterState(NamedTuple):
    """!
    \brief (ξ, η) with ξ a filter of left ideals and η a filter of right
    ideals
    """

    left: Filter
    right: Filter


class ActionResult(NamedTuple):
    """!
    \brief image of a state; truncated is set when an image ideal is
    generated by an element longer than the depth of its semilattice
    """

    state: FilterState
    truncated: bool


def _upper_set(
    M: AbstractLcmMonoid, L: FiniteSemilattice, m: Element, side: Side
) -> Filter:
    """!
    \brief the ideals of L containing Pm (side LEFT) or mP (side RIGHT)
    """
    if side is Side.RIGHT:
        members = [i for i in L.nonzero() if M.divide(Side.LEFT, L.object(i), m) is not None]
    else:
        members = [i for i in L.nonzero() if M.divide(Side.RIGHT, L.object(i), m) is not None]
    return Filter(L, members)


def _is_represented(
    M: AbstractLcmMonoid, L: FiniteSemilattice, m: Element, side: Side
) -> bool:
    normalize = M.right_normalize if side is Side.RIGHT else M.left_normalize
    return L.index_of(M.key(normalize(m)[0])) is not None


class SpectrumAction:
    """"""

    @staticmethod
    def states(Ll: FiniteSemilattice, Lr: FiniteSemilattice) -> List[FilterState]:
        """!
        \brief every pair of filters of Ll and Lr
        """
        lefts = FilterOps.enumerate_filters(Ll).filters
        rights = FilterOps.enumerate_filters(Lr).filters
        return [FilterState(xi, eta) for xi, eta in product(lefts, rights)]

    @staticmethod
    def in_domain(s: Triple, state: FilterState) -> bool:
        """!
        \brief (ξ, η) lies in the domain of θ_s, the set attached to
        s*s = [r₁, q, r]: Pr ∈ ξ and r₁P ∈ η
        """
        if s.is_zero():
            return False
        M = s.monoid
        mx = state.left.lattice.object(state.left.generator())
        my = state.right.lattice.object(state.right.generator())
        return (
            M.divide(Side.RIGHT, s.r, mx) is not None
            and M.divide(Side.LEFT, s.r1, my) is not None
        )

    @staticmethod
    def act_on_filter(s: Triple, state: FilterState) -> Optional[ActionResult]:
        """!
        \brief θ_s(ξ, η) = (ξ r⁻¹ q p⁻¹, p q⁻¹ r η), or None off the domain

        Filters are principal, so the image is computed on generators:
        Pxr ↦ P x p₁ on the left and yP ↦ p (q⁻¹ r y) P on the right.

        \code{.py}

        >>> M = FreeMonoid(2)
        >>> Ll = SemilatticeOps.build_ideal_semilattice(M, 2, Side.LEFT)
        >>> Lr = SemilatticeOps.build_ideal_semilattice(M, 2, Side.RIGHT)
        >>> xi = Filter.principal(Ll, Ll.index_of("0"))
        >>> eta = Filter.principal(Lr, Lr.index_of("1"))
        >>> SpectrumAction.act_on_filter(TripleOps.generator(M, "0"),
        ...                              FilterState(xi, eta))
        >>> # left filter {P}, right filter {P, 0P, 01P}

        \endcode
        """
        if not SpectrumAction.in_domain(s, state):
            return None
        M = s.monoid
        Ll = state.left.lattice
        Lr = state.right.lattice
        mx = Ll.object(state.left.generator())
        my = Lr.object(state.right.generator())
        x = M.divide(Side.RIGHT, s.r, mx)
        left_image = M.mul(x, s.p1)
        z = M.divide(Side.LEFT, s.q, M.mul(s.r, my))
        right_image = M.mul(s.p, z)
        truncated = not (
            _is_represented(M, Ll, left_image, Side.LEFT)
            and _is_represented(M, Lr, right_image, Side.RIGHT)
        )
        if truncated:
            logger.debug(
                "image of %s under %s leaves the truncation",
                str(state),
                str(s),
            )
        image = FilterState(
            _upper_set(M, Ll, left_image, Side.LEFT),
            _upper_set(M, Lr, right_image, Side.RIGHT),
        )
        return ActionResult(image, truncated)

    @staticmethod
    def check_top_fixes(
        M: AbstractLcmMonoid, states: List[FilterState]
    ) -> PropertyResult:
        """"""
        res = PropertyResult("top_fixes_states")
        top = TripleOps.top(M)
        for x in states:
            out = SpectrumAction.act_on_filter(top, x)
            res.record(
                out is not None and not out.truncated and out.state == x,
                lambda: str(x),
            )
        return res

    @staticmethod
    def check_functoriality(
        triples: List[Triple], states: List[FilterState]
    ) -> PropertyResult:
        """!
        \brief θ_s θ_t = θ_st wherever both sides are defined without
        truncation; truncated cases are counted as skipped
        """
        res = PropertyResult("action_functoriality")
        for s, t in product(triples, repeat=2):
            st = TripleOps.product(s, t)
            for x in states:
                inner = SpectrumAction.act_on_filter(t, x)
                if inner is None:
                    res.record(
                        SpectrumAction.act_on_filter(st, x) is None,
                        lambda: str(st) + " defined where " + str(t) + " is not",
                    )
                    continue
                if inner.truncated:
                    res.skip()
                    continue
                outer = SpectrumAction.act_on_filter(s, inner.state)
                direct = SpectrumAction.act_on_filter(st, x)
                if outer is None:
                    res.record(direct is None, lambda: str(s) + " " + str(t) + " at " + str(x))
                    continue
                if outer.truncated or direct is None or direct.truncated:
                    res.skip()
                    continue
                res.record(
                    outer.state == direct.state,
                    lambda: str(s) + " " + str(t) + " at " + str(x),
                )
        return res

    @staticmethod
    def check_left_density(M: AbstractLcmMonoid, depth: int) -> PropertyResult:
        """!
        \brief every [1, p, p] is dense under the top of E(S_P), which holds
        when the principal left ideals are linearly ordered
        """
        res = PropertyResult("left_ideal_density")
        L = SemilatticeOps.build_semilattice(M, depth)
        for p in M.enumerate_up_to(depth):
            e = TripleOps.idempotent(M, M.identity(), p)
            i = L.index_of(TripleOps.canonical_key(e))
            if i is None:
                res.skip()
                continue
            res.record(
                SemilatticeOps.is_dense(L, i, L.top),
                lambda: str(e) + " is not dense",
            )
        return res
