"""!
\file monomial.py Monomials s_α u_g s_β* of the algebra of a self-similar
action
"""
from typing import Hashable, Optional

from pylcm.action.atype.abstractaction import (
    AbstractSelfSimilarAction,
    GroupElement,
)
from pylcm.monoid.mmodel.freemonoid import EMPTY_WORD


class Monomial:
    """!
    \brief Either the zero or s_α u_g s_β*, stored as (α, g, β)

    Equality compares words and group keys, so it is exact for the odometer
    and decided up to the automaton depth for automaton actions.
    """

    __slots__ = ("action", "alpha", "g", "beta")

    def __init__(
        self,
        action: AbstractSelfSimilarAction,
        alpha: Optional[str] = None,
        g: Optional[GroupElement] = None,
        beta: Optional[str] = None,
    ):
        self.action = action
        if alpha is None and g is None and beta is None:
            self.alpha = self.g = self.beta = None
            return
        if alpha is None or g is None or beta is None:
            raise ValueError("a nonzero monomial needs α, g and β")
        self.alpha, self.g, self.beta = alpha, g, beta

    @classmethod
    def zero(cls, action: AbstractSelfSimilarAction) -> "Monomial":
        return cls(action)

    @classmethod
    def identity(cls, action: AbstractSelfSimilarAction) -> "Monomial":
        return cls(action, "", action.identity(), "")

    def is_zero(self) -> bool:
        return self.alpha is None

    def key(self) -> Hashable:
        if self.is_zero():
            return None
        return (self.alpha, self.action.key(self.g), self.beta)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return (
            "("
            + (self.alpha or EMPTY_WORD)
            + ","
            + self.action.format_group(self.g)
            + ","
            + (self.beta or EMPTY_WORD)
            + ")"
        )

    def __repr__(self) -> str:
        return str(self)
