"""!
\file grouplabel.py Group labels ψ[p,q,r] = p q⁻¹ r
"""
from abc import ABC, abstractmethod
from typing import Any, Tuple

from sympy.combinatorics.free_groups import free_group

from pylcm.errors import UnsupportedInstance
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mmodel.gridmonoid import GridMonoid
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid

GroupWord = Any


class AbstractGroupLabel(ABC):
    """!
    \brief arithmetic of a group containing the monoid
    """

    @abstractmethod
    def embed(self, p) -> GroupWord:
        raise NotImplementedError

    @abstractmethod
    def identity(self) -> GroupWord:
        raise NotImplementedError

    @abstractmethod
    def mul(self, a: GroupWord, b: GroupWord) -> GroupWord:
        raise NotImplementedError

    @abstractmethod
    def inverse(self, a: GroupWord) -> GroupWord:
        raise NotImplementedError

    def is_identity(self, a: GroupWord) -> bool:
        return a == self.identity()

    def label(self, s: Triple) -> GroupWord:
        """"""
        p, q, r = s.slots()
        return self.mul(
            self.mul(self.embed(p), self.inverse(self.embed(q))),
            self.embed(r),
        )


class FreeGroupLabel(AbstractGroupLabel):
    """!
    \brief the free group on the alphabet, reduced words by sympy

    The letter c becomes the generator named x<c>.
    """

    def __init__(self, monoid: FreeMonoid):
        names = ", ".join("x" + c for c in monoid.alphabet)
        result = free_group(names)
        self.group = result[0]
        self.generators = dict(zip(monoid.alphabet, result[1:]))

    def embed(self, p: str) -> GroupWord:
        out = self.group.identity
        for c in p:
            out = out * self.generators[c]
        return out

    def identity(self) -> GroupWord:
        return self.group.identity

    def mul(self, a: GroupWord, b: GroupWord) -> GroupWord:
        return a * b

    def inverse(self, a: GroupWord) -> GroupWord:
        return a ** -1


class AbelianGroupLabel(AbstractGroupLabel):
    """!
    \brief Z^k for the grid monoid, integer vectors
    """

    def __init__(self, monoid: GridMonoid):
        self.k = monoid.k

    def embed(self, p: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(p)

    def identity(self) -> Tuple[int, ...]:
        return tuple(0 for _ in range(self.k))

    def mul(self, a, b) -> Tuple[int, ...]:
        return tuple(x + y for x, y in zip(a, b))

    def inverse(self, a) -> Tuple[int, ...]:
        return tuple(-x for x in a)


_BACKENDS = {}


def group_label_backend(M: AbstractLcmMonoid) -> AbstractGroupLabel:
    """!
    \throws UnsupportedInstance for monoids other than free and grid
    """
    if M.name() not in _BACKENDS:
        if isinstance(M, FreeMonoid):
            _BACKENDS[M.name()] = FreeGroupLabel(M)
        elif isinstance(M, GridMonoid):
            _BACKENDS[M.name()] = AbelianGroupLabel(M)
        else:
            raise UnsupportedInstance(
                "no group arithmetic shipped for " + M.name()
            )
    return _BACKENDS[M.name()]
