"""!
\file basemonoid.py Shared implementation of the LCM monoid contract
"""
import logging
from abc import abstractmethod
from typing import Hashable, Iterator, List, Optional, Tuple

from pylcm.config import DEFAULT_SETTINGS, Settings
from pylcm.errors import ResourceLimitError
from pylcm.monoid.mtype.abstractmonoid import (
    AbstractLcmMonoid,
    Element,
    Side,
)

logger = logging.getLogger(__name__)


class BaseLcmMonoid(AbstractLcmMonoid):
    """!
    \brief Base class of the shipped monoids

    Subclasses provide elements of a given length through iter_length, the
    multiplication, the LCMs and division. Unit solving, enumeration with a
    ceiling and trivial normalization are implemented here.
    """

    def __init__(self, settings: Settings = DEFAULT_SETTINGS):
        self.settings = settings
        super().__init__()

    @abstractmethod
    def iter_length(self, n: int) -> Iterator[Element]:
        """!
        \brief elements of length exactly n in enumeration order
        """
        raise NotImplementedError

    def eq(self, p: Element, q: Element) -> bool:
        return p == q

    def key(self, p: Element) -> Hashable:
        return p

    def is_certifying(self) -> bool:
        return True

    def unit_solve(
        self, side: Side, p: Element, q: Element
    ) -> Optional[Element]:
        """!
        \brief find a unit u with p = q·u (RIGHT) or p = u·q (LEFT)

        \code{.py}

        >>> M = FreeMonoid(2)
        >>> M.unit_solve(Side.RIGHT, "01", "01")
        >>> ""

        \endcode
        """
        if side is Side.RIGHT:
            u = self.divide(Side.LEFT, q, p)
        else:
            u = self.divide(Side.RIGHT, q, p)
        if u is None or not self.is_unit(u):
            return None
        return u

    def enumerate_up_to(self, n: int) -> List[Element]:
        """!
        \brief all elements of length at most n, shortest first

        \throws ResourceLimitError when the count exceeds the ceiling
        """
        if n < 0:
            raise ValueError("enumeration depth must be non negative")
        ceiling = self.settings.enumeration_ceiling
        elements: List[Element] = []
        for length in range(n + 1):
            for p in self.iter_length(length):
                elements.append(p)
                if len(elements) > ceiling:
                    raise ResourceLimitError(
                        limit=ceiling,
                        requested=len(elements),
                        what="elements of " + self.name(),
                    )
        logger.debug(
            "enumerated %d elements of %s up to length %d",
            len(elements),
            self.name(),
            n,
        )
        return elements

    def enumerate_units(self, bound: int) -> List[Element]:
        """!
        \brief the trivial unit group
        """
        return [self.identity()]

    def right_normalize(self, p: Element) -> Tuple[Element, Element]:
        return p, self.identity()

    def left_normalize(self, p: Element) -> Tuple[Element, Element]:
        return p, self.identity()

    def opposite(self) -> AbstractLcmMonoid:
        """"""
        from pylcm.monoid.mmodel.oppositemonoid import OppositeMonoid

        return OppositeMonoid(self)

    def __str__(self) -> str:
        return self.name()

    def __repr__(self) -> str:
        return self.name()
