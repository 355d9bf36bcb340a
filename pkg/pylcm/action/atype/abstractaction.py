"""!
\file abstractaction.py Self-similar group actions on a free monoid
"""
from abc import ABC, abstractmethod
from typing import Any, Hashable, List, Optional, Tuple

from pylcm.monoid.mtype.abstractmonoid import type_check_msg

GroupElement = Any


class AbstractSelfSimilarAction(ABC):
    """!
    \brief A group G acting on words over a finite alphabet together with
    a restriction map.

    The action preserves lengths and satisfies
    g·(αβ) = (g·α)(g|_α·β) and (gh)|_α = g|_{h·α} h|_α.
    """

    def __init__(self, *args, **kwargs):
        """"""
        self.check_types()

    @abstractmethod
    def name(self) -> str:
        raise NotImplementedError

    @abstractmethod
    def alphabet(self) -> str:
        raise NotImplementedError

    @abstractmethod
    def identity(self) -> GroupElement:
        raise NotImplementedError

    @abstractmethod
    def compose(self, g: GroupElement, h: GroupElement) -> GroupElement:
        raise NotImplementedError

    @abstractmethod
    def inverse(self, g: GroupElement) -> GroupElement:
        raise NotImplementedError

    @abstractmethod
    def eq(self, g: GroupElement, h: GroupElement) -> bool:
        raise NotImplementedError

    @abstractmethod
    def key(self, g: GroupElement) -> Hashable:
        raise NotImplementedError

    @abstractmethod
    def act_restrict(
        self, g: GroupElement, w: str
    ) -> Tuple[str, GroupElement]:
        """!
        \brief the pair (g·w, g|_w)
        """
        raise NotImplementedError

    @abstractmethod
    def transport(
        self, alpha: str, delta: str, k: GroupElement
    ) -> Optional[GroupElement]:
        """!
        \brief some j with j·alpha = delta and j|_alpha = k
        """
        raise NotImplementedError

    @abstractmethod
    def enumerate_group(self, bound: int) -> List[GroupElement]:
        raise NotImplementedError

    @abstractmethod
    def format_group(self, g: GroupElement) -> str:
        raise NotImplementedError

    @abstractmethod
    def parse_group(self, text: str) -> GroupElement:
        raise NotImplementedError

    @abstractmethod
    def is_recurrent(self) -> bool:
        raise NotImplementedError

    @abstractmethod
    def is_certifying(self) -> bool:
        raise NotImplementedError

    def is_identity(self, g: GroupElement) -> bool:
        """"""
        return self.eq(g, self.identity())

    def check_types(self) -> bool:
        """"""
        type_check_msg(self.name(), str, "name")
        type_check_msg(self.alphabet(), str, "alphabet")
        return True
