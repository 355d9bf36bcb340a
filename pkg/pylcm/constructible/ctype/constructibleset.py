"""!
\file constructibleset.py Constructible subsets Δ_p ∩ Δ^q of Δ and Δ pairs
"""
import logging
from typing import Hashable, List, NamedTuple, Optional, Tuple

from pylcm.errors import ResourceLimitError
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element, Side

logger = logging.getLogger(__name__)


class DeltaPair(NamedTuple):
    """!
    \brief a point (a, x) of Δ, x being a right divisor of a
    """

    a: Element
    x: Element


def enumerate_delta_pairs(M: AbstractLcmMonoid, n: int) -> List[DeltaPair]:
    """!
    \brief all (a, x) with length(a) <= n and x ∈ I_a, ordered by a then x
    """
    elements = M.enumerate_up_to(n)
    pairs: List[DeltaPair] = []
    ceiling = getattr(M, "settings", None)
    limit = ceiling.enumeration_ceiling if ceiling is not None else None
    for a in elements:
        for x in elements:
            if M.length(x) > M.length(a):
                break
            if M.divide(Side.RIGHT, x, a) is not None:
                pairs.append(DeltaPair(a, x))
        if limit is not None and len(pairs) > limit:
            raise ResourceLimitError(
                limit=limit, requested=len(pairs), what="Δ pairs"
            )
    logger.debug("Δ truncation of depth %d has %d pairs", n, len(pairs))
    return pairs


class ConstructibleSet:
    """!
    \brief Either ∅ or the set Δ_p ∩ Δ^q = {(cqpx, px) : c, x ∈ P}

    p is kept as the canonical member of its class pU and q as the canonical
    member of Uq, so two sets are equal iff their stored pairs are. The
    whole of Δ is (identity, identity).
    """

    def __init__(
        self,
        monoid: AbstractLcmMonoid,
        p: Optional[Element] = None,
        q: Optional[Element] = None,
    ):
        self.monoid = monoid
        if (p is None) != (q is None):
            raise ValueError("both p and q are needed for a nonempty set")
        if p is None:
            self.p = None
            self.q = None
        else:
            self.p = monoid.right_normalize(p)[0]
            self.q = monoid.left_normalize(q)[0]

    @classmethod
    def empty(cls, monoid: AbstractLcmMonoid) -> "ConstructibleSet":
        return cls(monoid)

    @classmethod
    def full(cls, monoid: AbstractLcmMonoid) -> "ConstructibleSet":
        one = monoid.identity()
        return cls(monoid, one, one)

    def is_empty(self) -> bool:
        return self.p is None

    def key(self) -> Hashable:
        if self.is_empty():
            return None
        return (self.monoid.key(self.p), self.monoid.key(self.q))

    def pair(self) -> Tuple[Element, Element]:
        """"""
        return self.p, self.q

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstructibleSet):
            return NotImplemented
        return (
            self.monoid.name() == other.monoid.name()
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash((self.monoid.name(), self.key()))

    def __str__(self) -> str:
        if self.is_empty():
            return "∅"
        fmt = self.monoid.format_element
        return "e(" + fmt(self.p) + ";" + fmt(self.q) + ")"

    def __repr__(self) -> str:
        return str(self)
