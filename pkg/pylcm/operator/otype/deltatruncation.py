"""!
\file deltatruncation.py Finite truncation of Δ = {(a, x) : x ∈ I_a}
"""
from typing import Dict, Hashable, List, Optional

from pylcm.constructible.ctype.constructibleset import (
    DeltaPair,
    enumerate_delta_pairs,
)
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element


class DeltaTruncation:
    """!
    \brief the basis δ_x^a of ℓ²(Δ) for length(a) <= n

    For Zappa–Szép monoids the group parts are limited to the group ball
    of the monoid settings, so some images leave the basis; operators
    record those columns as boundary.

    \code{.py}

    >>> T = DeltaTruncation(FreeMonoid(2), 1)
    >>> T.basis
    >>> [("", ""), ("0", ""), ("0", "0"), ("1", ""), ("1", "1")]

    \endcode
    """

    def __init__(self, monoid: AbstractLcmMonoid, n: int):
        self.monoid = monoid
        self.depth = n
        self.basis: List[DeltaPair] = enumerate_delta_pairs(monoid, n)
        self.index: Dict[Hashable, int] = {
            self._key(pair.a, pair.x): i for i, pair in enumerate(self.basis)
        }

    def _key(self, a: Element, x: Element) -> Hashable:
        return (self.monoid.key(a), self.monoid.key(x))

    def __len__(self) -> int:
        return len(self.basis)

    def lookup(self, a: Element, x: Element) -> Optional[int]:
        """!
        \brief index of δ_x^a or None when the pair lies outside the
        truncation
        """
        return self.index.get(self._key(a, x))

    def labels(self) -> List[str]:
        """"""
        fmt = self.monoid.format_element
        return ["(" + fmt(p.a) + "|" + fmt(p.x) + ")" for p in self.basis]
