"""!
\file constructibleops.py Intersections and translations of constructible sets
"""
from enum import Enum

from pylcm.constructible.ctype.constructibleset import (
    ConstructibleSet,
    DeltaPair,
)
from pylcm.monoid.mtype.abstractmonoid import Element, Side


class Translation(Enum):
    """!
    \brief PUSH is Y_r = {(b r x, r x) : (b r x, x) ∈ Y},
    PULL is Y^r = {(b r x, x) : (b r x, r x) ∈ Y}
    """

    PUSH = "push"
    PULL = "pull"


class ConstructibleOps:
    """"""

    @staticmethod
    def intersect(Y: ConstructibleSet, Z: ConstructibleSet) -> ConstructibleSet:
        """!
        \brief (Δ_p ∩ Δ^q) ∩ (Δ_a ∩ Δ^b) = Δ_k ∩ Δ^l with pP ∩ aP = kP and
        Pq ∩ Pb = Pl

        \code{.py}

        >>> M = FreeMonoid(2)
        >>> Y = ConstructibleSet(M, "0", "1")
        >>> Z = ConstructibleSet(M, "01", "11")
        >>> ConstructibleOps.intersect(Y, Z)
        >>> e(01;11)

        \endcode
        """
        M = Y.monoid
        if Y.is_empty() or Z.is_empty():
            return ConstructibleSet.empty(M)
        right = M.right_lcm(Y.p, Z.p)
        if right is None:
            return ConstructibleSet.empty(M)
        left = M.left_lcm(Y.q, Z.q)
        if left is None:
            return ConstructibleSet.empty(M)
        return ConstructibleSet(M, right.r, left.r)

    @staticmethod
    def translate(
        direction: Translation, Y: ConstructibleSet, r: Element
    ) -> ConstructibleSet:
        """!
        \brief Y_r or Y^r in closed form

        For Y = Δ_p ∩ Δ^q: if r₁r = q₁q is the left LCM of r and q then
        Y_r = Δ_{rp} ∩ Δ^{r₁}; if pp₁ = rr₁ is the right LCM of p and r then
        Y^r = Δ_{r₁} ∩ Δ^{qr}. Missing LCMs give ∅.
        """
        M = Y.monoid
        if Y.is_empty():
            return ConstructibleSet.empty(M)
        if direction is Translation.PUSH:
            w = M.left_lcm(r, Y.q)
            if w is None:
                return ConstructibleSet.empty(M)
            return ConstructibleSet(M, M.mul(r, Y.p), w.w1)
        w = M.right_lcm(Y.p, r)
        if w is None:
            return ConstructibleSet.empty(M)
        return ConstructibleSet(M, w.w2, M.mul(Y.q, r))

    @staticmethod
    def push(Y: ConstructibleSet, r: Element) -> ConstructibleSet:
        """"""
        return ConstructibleOps.translate(Translation.PUSH, Y, r)

    @staticmethod
    def pull(Y: ConstructibleSet, r: Element) -> ConstructibleSet:
        """"""
        return ConstructibleOps.translate(Translation.PULL, Y, r)

    @staticmethod
    def member(pair: DeltaPair, Y: ConstructibleSet) -> bool:
        """!
        \brief (a, x) ∈ Δ_p ∩ Δ^q iff x = p x' and a = c q x for some x', c
        """
        if Y.is_empty():
            return False
        M = Y.monoid
        if M.divide(Side.LEFT, Y.p, pair.x) is None:
            return False
        return M.divide(Side.RIGHT, M.mul(Y.q, pair.x), pair.a) is not None

    @staticmethod
    def opposite(Y: ConstructibleSet) -> ConstructibleSet:
        """!
        \brief the image Γ^p ∩ Γ_q of Δ_p ∩ Δ^q among the constructible sets
        of the opposite monoid, stored as the pair (q, p)
        """
        op = Y.monoid.opposite()
        if Y.is_empty():
            return ConstructibleSet.empty(op)
        return ConstructibleSet(op, Y.q, Y.p)
