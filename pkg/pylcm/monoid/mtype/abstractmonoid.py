"""!
\file abstractmonoid.py Abstract contract of a cancellative LCM monoid
"""
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Hashable, List, NamedTuple, Optional, Tuple

Element = Any


def type_check_msg(ival, itype, mname: str):
    """"""
    if isinstance(ival, itype) is False:
        itype2 = str(type(ival))
        mes = (
            mname
            + "() method must return "
            + itype.__name__
            + " as type, but it returns "
            + itype2
        )
        raise TypeError(mes)


class Side(Enum):
    """!
    \brief Side on which a quotient or a unit is taken

    For divide, LEFT means solving p·x = q and RIGHT means x·p = q.
    """

    LEFT = "left"
    RIGHT = "right"

    def other(self) -> "Side":
        """"""
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class LcmWitness(NamedTuple):
    """!
    \brief least common multiple r with its cofactors

    Right case: p·w1 = q·w2 = r. Left case: w1·p = w2·q = r.
    """

    r: Element
    w1: Element
    w2: Element


class AbstractLcmMonoid(ABC):
    """!
    \brief A monoid that is left and right cancellative and in which two
    principal right (left) ideals either meet in a principal right (left)
    ideal or are disjoint.
    """

    def __init__(self, *args, **kwargs):
        """"""
        self.check_types()

    @abstractmethod
    def name(self) -> str:
        raise NotImplementedError

    @abstractmethod
    def identity(self) -> Element:
        raise NotImplementedError

    @abstractmethod
    def mul(self, p: Element, q: Element) -> Element:
        raise NotImplementedError

    @abstractmethod
    def eq(self, p: Element, q: Element) -> bool:
        raise NotImplementedError

    @abstractmethod
    def key(self, p: Element) -> Hashable:
        """!
        \brief hashable key, equal for two elements iff eq holds
        """
        raise NotImplementedError

    @abstractmethod
    def length(self, p: Element) -> int:
        raise NotImplementedError

    @abstractmethod
    def right_lcm(self, p: Element, q: Element) -> Optional[LcmWitness]:
        raise NotImplementedError

    @abstractmethod
    def left_lcm(self, p: Element, q: Element) -> Optional[LcmWitness]:
        raise NotImplementedError

    @abstractmethod
    def divide(self, side: Side, p: Element, q: Element) -> Optional[Element]:
        raise NotImplementedError

    @abstractmethod
    def is_unit(self, p: Element) -> bool:
        raise NotImplementedError

    @abstractmethod
    def unit_solve(
        self, side: Side, p: Element, q: Element
    ) -> Optional[Element]:
        raise NotImplementedError

    @abstractmethod
    def enumerate_up_to(self, n: int) -> List[Element]:
        raise NotImplementedError

    @abstractmethod
    def enumerate_units(self, bound: int) -> List[Element]:
        """!
        \brief units reachable within the given group bound, identity first
        """
        raise NotImplementedError

    @abstractmethod
    def right_normalize(self, p: Element) -> Tuple[Element, Element]:
        """!
        \brief canonical member p·u of the class pU with the unit u
        """
        raise NotImplementedError

    @abstractmethod
    def left_normalize(self, p: Element) -> Tuple[Element, Element]:
        """!
        \brief canonical member v·p of the class Up with the unit v
        """
        raise NotImplementedError

    @abstractmethod
    def format_element(self, p: Element) -> str:
        raise NotImplementedError

    @abstractmethod
    def parse_element(self, text: str) -> Element:
        raise NotImplementedError

    @abstractmethod
    def opposite(self) -> "AbstractLcmMonoid":
        raise NotImplementedError

    @abstractmethod
    def is_certifying(self) -> bool:
        """!
        \brief False when equality is only decided up to a depth
        """
        raise NotImplementedError

    def check_types(self) -> bool:
        """"""
        type_check_msg(self.name(), str, "name")
        type_check_msg(self.length(self.identity()), int, "length")
        type_check_msg(self.is_certifying(), bool, "is_certifying")
        return True
