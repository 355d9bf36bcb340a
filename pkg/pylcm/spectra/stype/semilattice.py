"""!
\file semilattice.py Finite meet semilattices with zero and top
"""
from typing import Any, Dict, Hashable, List, NamedTuple, Optional

from pylcm.monoid.mtype.abstractmonoid import Element


class IdealPair(NamedTuple):
    """!
    \brief (Pq, pP) given by canonical generators; the identity stands for
    P itself
    """

    left: Element
    right: Element


class FiniteSemilattice:
    """!
    \brief Elements 0..n-1 with a full meet table

    Every element carries a hashable label, used for lookups, and the
    object it stands for (an idempotent, an ideal generator, a pair of
    indices, ...).
    """

    def __init__(
        self,
        labels: List[Hashable],
        objects: List[Any],
        meet_table: List[List[int]],
        zero: int,
        top: int,
        name: str = "",
    ):
        if len(labels) != len(objects) or len(labels) != len(meet_table):
            raise ValueError("labels, objects and meet table differ in size")
        self.labels = list(labels)
        self.objects = list(objects)
        self.table = meet_table
        self.zero = zero
        self.top = top
        self.name = name
        self.index: Dict[Hashable, int] = {
            lab: i for i, lab in enumerate(self.labels)
        }

    def __len__(self) -> int:
        return len(self.labels)

    def meet(self, i: int, j: int) -> int:
        return self.table[i][j]

    def leq(self, i: int, j: int) -> bool:
        return self.table[i][j] == i

    def index_of(self, label: Hashable) -> Optional[int]:
        return self.index.get(label)

    def object(self, i: int) -> Any:
        return self.objects[i]

    def nonzero(self) -> List[int]:
        return [i for i in range(len(self)) if i != self.zero]

    def below(self, e: int) -> List[int]:
        """!
        \brief nonzero f with f <= e
        """
        return [f for f in self.nonzero() if self.leq(f, e)]

    def meet_all(self, elements) -> int:
        """"""
        out = self.top
        for i in elements:
            out = self.table[out][i]
        return out

    def __str__(self) -> str:
        return (self.name or "semilattice") + " of size " + str(len(self))
