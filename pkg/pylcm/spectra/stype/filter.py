"""!
\file filter.py Filters of a finite semilattice
"""
from typing import FrozenSet, Iterable, List

from pylcm.spectra.stype.semilattice import FiniteSemilattice


class Filter:
    """!
    \brief a proper, upward closed and meet closed set of elements

    Stored by its members; generators() gives the minimal ones, which in a
    finite semilattice is a single element.
    """

    def __init__(self, lattice: FiniteSemilattice, members: Iterable[int]):
        self.lattice = lattice
        self.members: FrozenSet[int] = frozenset(members)

    @classmethod
    def principal(cls, lattice: FiniteSemilattice, e: int) -> "Filter":
        """!
        \brief the filter of all elements above e
        """
        return cls(lattice, [f for f in range(len(lattice)) if lattice.leq(e, f)])

    def generators(self) -> List[int]:
        L = self.lattice
        return sorted(
            i
            for i in self.members
            if not any(j != i and L.leq(j, i) for j in self.members)
        )

    def generator(self) -> int:
        """!
        \brief the meet of all members
        """
        return self.lattice.meet_all(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Filter):
            return NotImplemented
        return self.lattice is other.lattice and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __str__(self) -> str:
        return "Filter" + str(sorted(self.members))

    def __repr__(self) -> str:
        return str(self)
