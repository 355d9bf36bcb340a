"""!
\file constructibleanalyzer.py Extensional checks of the constructible calculus
on a finite truncation of Δ
"""
import logging
from itertools import combinations, product
from typing import Dict, Hashable, List, Optional

from pylcm.constructible.constructiblef.constructibleops import (
    ConstructibleOps,
    Translation,
)
from pylcm.constructible.ctype.constructibleset import (
    ConstructibleSet,
    DeltaPair,
)
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element, Side
from pylcm.propertyresult import PropertyResult

logger = logging.getLogger(__name__)


class DeltaWindow:
    """!
    \brief Δ pairs of a truncation with an index, members of a set are
    encoded as an integer bit mask
    """

    def __init__(self, monoid: AbstractLcmMonoid, pairs: List[DeltaPair]):
        self.monoid = monoid
        self.pairs = pairs
        self.index: Dict[Hashable, int] = {
            self._pkey(pair): i for i, pair in enumerate(pairs)
        }

    def _pkey(self, pair: DeltaPair) -> Hashable:
        return (self.monoid.key(pair.a), self.monoid.key(pair.x))

    def lookup(self, a: Element, x: Element) -> Optional[int]:
        """"""
        return self.index.get((self.monoid.key(a), self.monoid.key(x)))

    def members(self, Y: ConstructibleSet) -> int:
        """"""
        mask = 0
        for i, pair in enumerate(self.pairs):
            if ConstructibleOps.member(pair, Y):
                mask |= 1 << i
        return mask

    def push(self, mask: int, r: Element) -> int:
        """!
        \brief (a, y) ∈ Y_r iff y = r x with (a, x) ∈ Y
        """
        M = self.monoid
        out = 0
        for i, (a, y) in enumerate(self.pairs):
            x = M.divide(Side.LEFT, r, y)
            if x is None:
                continue
            j = self.lookup(a, x)
            if j is not None and (mask >> j) & 1:
                out |= 1 << i
        return out

    def pull(self, mask: int, r: Element) -> int:
        """!
        \brief (a, x) ∈ Y^r iff r x ∈ I_a and (a, r x) ∈ Y
        """
        M = self.monoid
        out = 0
        for i, (a, x) in enumerate(self.pairs):
            rx = M.mul(r, x)
            if M.divide(Side.RIGHT, rx, a) is None:
                continue
            j = self.lookup(a, rx)
            if j is not None and (mask >> j) & 1:
                out |= 1 << i
        return out

    def is_closed(self, W: ConstructibleSet, expected: int) -> bool:
        """!
        \brief W is ∅ and expected has no members, or W is a normalized
        Δ_p ∩ Δ^q holding its generic point (qp, p)
        """
        if W.is_empty():
            return expected == 0
        M = self.monoid
        again = ConstructibleSet(M, W.p, W.q)
        generic = DeltaPair(M.mul(W.q, W.p), W.p)
        return again.key() == W.key() and ConstructibleOps.member(generic, W)


class ConstructibleAnalyzer:
    """!
    \brief Compare the closed forms against membership on a truncation
    """

    @staticmethod
    def pool(
        M: AbstractLcmMonoid, elements: List[Element]
    ) -> List[ConstructibleSet]:
        """!
        \brief the distinct sets Δ_p ∩ Δ^q for p, q in elements
        """
        seen = set()
        out: List[ConstructibleSet] = []
        for p, q in product(elements, repeat=2):
            Y = ConstructibleSet(M, p, q)
            if Y not in seen:
                seen.add(Y)
                out.append(Y)
        return out

    @staticmethod
    def check_intersection(
        window: DeltaWindow, sets: List[ConstructibleSet]
    ) -> PropertyResult:
        """"""
        res = PropertyResult("intersection_extensional")
        masks = [window.members(Y) for Y in sets]
        for (i, Y), (j, Z) in product(enumerate(sets), repeat=2):
            meet = ConstructibleOps.intersect(Y, Z)
            res.record(
                window.members(meet) == masks[i] & masks[j],
                lambda: str(Y) + " ∩ " + str(Z),
            )
        return res

    @staticmethod
    def check_translations(
        window: DeltaWindow,
        sets: List[ConstructibleSet],
        elements: List[Element],
    ) -> PropertyResult:
        """"""
        res = PropertyResult("translation_extensional")
        for Y, r in product(sets, elements):
            mask = window.members(Y)
            pushed = ConstructibleOps.translate(Translation.PUSH, Y, r)
            pulled = ConstructibleOps.translate(Translation.PULL, Y, r)
            fmt = window.monoid.format_element
            res.record(
                window.members(pushed) == window.push(mask, r),
                lambda: "push " + str(Y) + " by " + fmt(r),
            )
            res.record(
                window.members(pulled) == window.pull(mask, r),
                lambda: "pull " + str(Y) + " by " + fmt(r),
            )
        return res

    @staticmethod
    def check_closure(
        window: DeltaWindow,
        sets: List[ConstructibleSet],
        elements: List[Element],
    ) -> PropertyResult:
        """!
        \brief results of the operations are again of the form
        Δ_p ∩ Δ^q or ∅

        A nonempty result must be stored in normal form and contain its
        generic point (qp, p); an empty one must have no members on the
        truncation.
        """
        res = PropertyResult("closure")
        M = window.monoid
        masks = [window.members(Y) for Y in sets]
        for (i, Y), (j, Z) in product(enumerate(sets), repeat=2):
            W = ConstructibleOps.intersect(Y, Z)
            res.record(
                window.is_closed(W, masks[i] & masks[j]),
                lambda: str(Y) + " ∩ " + str(Z) + " = " + str(W),
            )
        fmt = M.format_element
        for (i, Y), r in product(enumerate(sets), elements):
            pushed = ConstructibleOps.translate(Translation.PUSH, Y, r)
            res.record(
                window.is_closed(pushed, window.push(masks[i], r)),
                lambda: "push " + str(Y) + " by " + fmt(r) + " = " + str(pushed),
            )
            pulled = ConstructibleOps.translate(Translation.PULL, Y, r)
            res.record(
                window.is_closed(pulled, window.pull(masks[i], r)),
                lambda: "pull " + str(Y) + " by " + fmt(r) + " = " + str(pulled),
            )
        return res

    @staticmethod
    def check_independence(
        window: DeltaWindow, sets: List[ConstructibleSet], family_size: int = 3
    ) -> PropertyResult:
        """!
        \brief a set that is the union of at most family_size others is one
        of them

        Only sets contained in Y can take part in a union equal to Y, so the
        families are drawn from those.
        """
        res = PropertyResult("independence")
        masks = {Y: window.members(Y) for Y in sets}
        for Y in sets:
            target = masks[Y]
            if target == 0:
                continue
            inside = [
                Z
                for Z in sets
                if Z != Y and masks[Z] != 0 and masks[Z] & ~target == 0
            ]
            for size in range(1, family_size + 1):
                for family in combinations(inside, size):
                    union = 0
                    for Z in family:
                        union |= masks[Z]
                    # Y itself is excluded from the family, so equality fails
                    res.record(
                        union != target,
                        lambda: str(Y)
                        + " = union of "
                        + ", ".join(str(Z) for Z in family),
                    )
        logger.debug("independence checked on %d sets", len(sets))
        return res
