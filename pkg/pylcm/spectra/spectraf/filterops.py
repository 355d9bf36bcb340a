"""!
\file filterops.py Filters, ultrafilters and covers of finite semilattices
"""
import logging
from itertools import combinations, product
from typing import Iterable, List, NamedTuple, Optional, Tuple

from pylcm.errors import ResourceLimitError
from pylcm.isg.isgf.tripleops import TripleOps
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid
from pylcm.propertyresult import PropertyResult
from pylcm.spectra.stype.filter import Filter
from pylcm.spectra.stype.semilattice import FiniteSemilattice

logger = logging.getLogger(__name__)

BRUTEFORCE_LIMIT = 20


class FilterSpectrum(NamedTuple):
    """"""

    filters: List[Filter]
    ultrafilters: List[Filter]


class LetterCover(NamedTuple):
    """!
    \brief the idempotents e_x = [x, x, 1] of the generators of length one
    as indices of a semilattice; certified means the cover does not depend
    on the truncation depth
    """

    elements: List[int]
    certified: bool


class FilterBoolOps:
    """"""

    @staticmethod
    def is_filter(L: FiniteSemilattice, members: Iterable[int]) -> bool:
        """!
        \brief nonempty, proper, upward closed and closed under meets
        """
        ms = set(members)
        if not ms or L.zero in ms:
            return False
        for i in ms:
            for j in range(len(L)):
                if L.leq(i, j) and j not in ms:
                    return False
        return all(L.meet(i, j) in ms for i, j in product(ms, repeat=2))

    @staticmethod
    def is_cover(C: Iterable[int], e: int, L: FiniteSemilattice) -> bool:
        """!
        \brief every nonzero f <= e meets some c in C

        The answer is relative to L; see cover_witness.
        """
        return FilterOps.cover_witness(C, e, L) is None


class FilterOps:
    """"""

    @staticmethod
    def enumerate_filters(L: FiniteSemilattice) -> FilterSpectrum:
        """!
        \brief all filters and the maximal ones

        A filter of a finite semilattice contains the meet of its members,
        so the filters are the principal filters of nonzero elements, and
        the ultrafilters are those of the minimal nonzero elements.
        """
        nonzero = L.nonzero()
        filters = [Filter.principal(L, e) for e in nonzero]
        atoms = [
            e
            for e in nonzero
            if not any(f != e and L.leq(f, e) for f in nonzero)
        ]
        ultra = [Filter.principal(L, e) for e in atoms]
        logger.debug(
            "%s: %d filters, %d ultrafilters", L.name, len(filters), len(ultra)
        )
        return FilterSpectrum(filters, ultra)

    @staticmethod
    def enumerate_filters_bruteforce(L: FiniteSemilattice) -> FilterSpectrum:
        """!
        \brief filters by scanning every subset of the nonzero elements

        \throws ResourceLimitError above BRUTEFORCE_LIMIT nonzero elements
        """
        nonzero = L.nonzero()
        if len(nonzero) > BRUTEFORCE_LIMIT:
            raise ResourceLimitError(
                limit=2 ** BRUTEFORCE_LIMIT,
                requested=2 ** len(nonzero),
                what="subsets of " + L.name,
            )
        filters = []
        for size in range(1, len(nonzero) + 1):
            for subset in combinations(nonzero, size):
                if FilterBoolOps.is_filter(L, subset):
                    filters.append(Filter(L, subset))
        ultra = [
            F
            for F in filters
            if not any(G != F and F.members < G.members for G in filters)
        ]
        return FilterSpectrum(filters, ultra)

    @staticmethod
    def cover_witness(
        C: Iterable[int], e: int, L: FiniteSemilattice
    ) -> Optional[int]:
        """!
        \brief a nonzero f <= e disjoint from every member of C, or None

        \throws ValueError if some member of C is not below e
        """
        cs = list(C)
        for c in cs:
            if not L.leq(c, e):
                raise ValueError("cover element " + str(c) + " is not below e")
        for f in L.below(e):
            if all(L.meet(c, f) == L.zero for c in cs):
                return f
        return None

    @staticmethod
    def letter_cover(
        M: AbstractLcmMonoid, L: FiniteSemilattice
    ) -> LetterCover:
        """!
        \brief indices in L of e_x = [x, x, 1] for the length one elements x,
        one per class xU

        The family covers the top at every depth since every nonunit lies in
        some xP; it is certified unless the monoid decides equality only up
        to a depth.
        """
        seen = set()
        out: List[int] = []
        for x in M.enumerate_up_to(1):
            if M.length(x) != 1:
                continue
            rep = M.right_normalize(x)[0]
            k = M.key(rep)
            if k in seen:
                continue
            seen.add(k)
            e = TripleOps.idempotent(M, rep, M.identity())
            i = L.index_of(TripleOps.canonical_key(e))
            if i is not None:
                out.append(i)
        return LetterCover(out, M.is_certifying())

    @staticmethod
    def split(F: Filter, E: FiniteSemilattice, G: FiniteSemilattice) -> Tuple[Filter, Filter]:
        """!
        \brief ξ ↦ (ξ_l, ξ_r) for a filter ξ of E ×₀ G given by index pairs
        """
        P = F.lattice
        left = {P.object(k)[0] for k in F.members}
        right = {P.object(k)[1] for k in F.members}
        return Filter(E, left), Filter(G, right)

    @staticmethod
    def join(
        P: FiniteSemilattice, xi: Filter, eta: Filter
    ) -> Filter:
        """!
        \brief (ξ, η) ↦ ξ × η as a filter of the product P
        """
        return Filter(P, [P.index_of((i, j)) for i in xi.members for j in eta.members])

    @staticmethod
    def check_filters(L: FiniteSemilattice) -> PropertyResult:
        """!
        \brief every enumerated filter satisfies the axioms and the
        enumeration agrees with the subset scan when L is small
        """
        res = PropertyResult("filters")
        spectrum = FilterOps.enumerate_filters(L)
        for F in spectrum.filters:
            res.record(FilterBoolOps.is_filter(L, F.members), lambda: str(F))
        if len(L.nonzero()) <= BRUTEFORCE_LIMIT // 2:
            brute = FilterOps.enumerate_filters_bruteforce(L)
            res.record(
                set(brute.filters) == set(spectrum.filters)
                and set(brute.ultrafilters) == set(spectrum.ultrafilters),
                "subset scan disagrees on " + L.name,
            )
        return res

    @staticmethod
    def check_product_correspondence(
        E: FiniteSemilattice, G: FiniteSemilattice, P: FiniteSemilattice
    ) -> PropertyResult:
        """!
        \brief filters of E ×₀ G correspond to pairs of filters, ultrafilters
        to pairs of ultrafilters
        """
        res = PropertyResult("product_correspondence")
        fe = FilterOps.enumerate_filters(E)
        fg = FilterOps.enumerate_filters(G)
        fp = FilterOps.enumerate_filters(P)
        res.record(
            len(fp.filters) == len(fe.filters) * len(fg.filters),
            lambda: "filter counts "
            + str((len(fp.filters), len(fe.filters), len(fg.filters))),
        )
        res.record(
            len(fp.ultrafilters) == len(fe.ultrafilters) * len(fg.ultrafilters),
            "ultrafilter counts differ",
        )
        pairs = set()
        for F in fp.filters:
            xi, eta = FilterOps.split(F, E, G)
            ok = (
                FilterBoolOps.is_filter(E, xi.members)
                and FilterBoolOps.is_filter(G, eta.members)
                and FilterOps.join(P, xi, eta) == F
            )
            res.record(ok, lambda: str(F))
            pairs.add((xi, eta))
        res.record(len(pairs) == len(fp.filters), "split is not injective")
        ultra_e = set(fe.ultrafilters)
        ultra_g = set(fg.ultrafilters)
        for F in fp.ultrafilters:
            xi, eta = FilterOps.split(F, E, G)
            res.record(xi in ultra_e and eta in ultra_g, lambda: str(F))
        return res
