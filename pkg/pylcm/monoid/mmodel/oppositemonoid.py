"""!
\file oppositemonoid.py Opposite of an LCM monoid
"""
from typing import Hashable, List, Optional, Tuple

from pylcm.monoid.mtype.abstractmonoid import (
    AbstractLcmMonoid,
    Element,
    LcmWitness,
    Side,
)


class OppositeMonoid(AbstractLcmMonoid):
    """!
    \brief P^op: same elements, multiplication p∘q = qp

    Right multiples in P^op are left multiples in P, so the two LCMs and the
    two sides of division are exchanged.
    """

    def __init__(self, base: AbstractLcmMonoid):
        self.base = base
        super().__init__()

    def name(self) -> str:
        return "op(" + self.base.name() + ")"

    def identity(self) -> Element:
        return self.base.identity()

    def mul(self, p: Element, q: Element) -> Element:
        return self.base.mul(q, p)

    def eq(self, p: Element, q: Element) -> bool:
        return self.base.eq(p, q)

    def key(self, p: Element) -> Hashable:
        return self.base.key(p)

    def length(self, p: Element) -> int:
        return self.base.length(p)

    def right_lcm(self, p: Element, q: Element) -> Optional[LcmWitness]:
        return self.base.left_lcm(p, q)

    def left_lcm(self, p: Element, q: Element) -> Optional[LcmWitness]:
        return self.base.right_lcm(p, q)

    def divide(self, side: Side, p: Element, q: Element) -> Optional[Element]:
        return self.base.divide(side.other(), p, q)

    def is_unit(self, p: Element) -> bool:
        return self.base.is_unit(p)

    def unit_solve(
        self, side: Side, p: Element, q: Element
    ) -> Optional[Element]:
        return self.base.unit_solve(side.other(), p, q)

    def enumerate_up_to(self, n: int) -> List[Element]:
        return self.base.enumerate_up_to(n)

    def enumerate_units(self, bound: int) -> List[Element]:
        return self.base.enumerate_units(bound)

    def right_normalize(self, p: Element) -> Tuple[Element, Element]:
        return self.base.left_normalize(p)

    def left_normalize(self, p: Element) -> Tuple[Element, Element]:
        return self.base.right_normalize(p)

    def format_element(self, p: Element) -> str:
        return self.base.format_element(p)

    def parse_element(self, text: str) -> Element:
        return self.base.parse_element(text)

    def opposite(self) -> AbstractLcmMonoid:
        return self.base

    def is_certifying(self) -> bool:
        return self.base.is_certifying()

    def __str__(self) -> str:
        return self.name()

    def __repr__(self) -> str:
        return self.name()
