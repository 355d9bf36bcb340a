"""!
\file triple.py Elements [p,q,r] of the inverse semigroup S_P
"""
from typing import Hashable, Optional

from pylcm.errors import InvalidTriple, ZeroElement
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element, Side


class Triple:
    """!
    \brief Either the zero of S_P or [p,q,r] with q ∈ Pp ∩ rP

    Validation stores the cofactors p1 and r1 with p1·p = q = r·r1. Python
    equality compares representatives slot by slot; equality in S_P, which
    allows units, is TripleOps.triple_eq.

    \code{.py}

    >>> M = FreeMonoid(2)
    >>> s = Triple(M, "0", "00", "00")
    >>> s.p1, s.r1
    >>> ("0", "")
    >>> Triple(M, "0", "1", "1")
    >>> InvalidTriple: invalid triple [0,1,1]: q not in Pp

    \endcode
    """

    __slots__ = ("monoid", "p", "q", "r", "p1", "r1")

    def __init__(
        self,
        monoid: AbstractLcmMonoid,
        p: Optional[Element] = None,
        q: Optional[Element] = None,
        r: Optional[Element] = None,
    ):
        self.monoid = monoid
        if p is None and q is None and r is None:
            self.p = self.q = self.r = self.p1 = self.r1 = None
            return
        if p is None or q is None or r is None:
            raise ValueError("a nonzero triple needs all three slots")
        fmt = monoid.format_element
        text = "[" + fmt(p) + "," + fmt(q) + "," + fmt(r) + "]"
        p1 = monoid.divide(Side.RIGHT, p, q)
        if p1 is None:
            raise InvalidTriple("q not in Pp", text)
        r1 = monoid.divide(Side.LEFT, r, q)
        if r1 is None:
            raise InvalidTriple("q not in rP", text)
        self.p, self.q, self.r = p, q, r
        self.p1, self.r1 = p1, r1

    @classmethod
    def zero(cls, monoid: AbstractLcmMonoid) -> "Triple":
        return cls(monoid)

    def is_zero(self) -> bool:
        return self.q is None

    def slots(self):
        """!
        \brief (p, q, r)

        \throws ZeroElement on the zero
        """
        if self.is_zero():
            raise ZeroElement("the zero of S_P has no slots")
        return self.p, self.q, self.r

    def key(self) -> Hashable:
        if self.is_zero():
            return None
        k = self.monoid.key
        return (k(self.p), k(self.q), k(self.r))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Triple):
            return NotImplemented
        return (
            self.monoid.name() == other.monoid.name()
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash(self.key())

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        fmt = self.monoid.format_element
        return "[" + fmt(self.p) + "," + fmt(self.q) + "," + fmt(self.r) + "]"

    def __repr__(self) -> str:
        return str(self)
