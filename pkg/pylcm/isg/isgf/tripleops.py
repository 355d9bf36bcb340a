"""!
\file tripleops.py Product, involution, order and idempotents of S_P
"""
import logging
from itertools import product as cartesian
from typing import Hashable, List, Optional

from pylcm.constructible.ctype.constructibleset import ConstructibleSet
from pylcm.errors import InvalidTriple, NotIdempotent, ZeroElement
from pylcm.isg.isgf.grouplabel import group_label_backend
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element, Side

logger = logging.getLogger(__name__)


class TripleBoolOps:
    """"""

    @staticmethod
    def triple_eq(s: Triple, t: Triple) -> bool:
        """!
        \brief [p,q,r] = [a,b,c] iff p = a·u, q = v·b·u, r = v·c for units
        u and v

        The units are solved from the outer slots; the middle slot is then
        checked directly.
        """
        if s.is_zero() or t.is_zero():
            return s.is_zero() and t.is_zero()
        M = s.monoid
        u = M.unit_solve(Side.RIGHT, s.p, t.p)
        if u is None:
            return False
        v = M.unit_solve(Side.LEFT, s.r, t.r)
        if v is None:
            return False
        return M.eq(s.q, M.mul(M.mul(v, t.q), u))

    @staticmethod
    def is_idempotent(s: Triple) -> bool:
        """"""
        return TripleBoolOps.triple_eq(TripleOps.product(s, s), s)

    @staticmethod
    def natural_leq(s: Triple, t: Triple) -> bool:
        """!
        \brief s <= t iff s = t·s*s

        \code{.py}

        >>> M = FreeMonoid(2)
        >>> e = TripleOps.idempotent(M, "01", "11")
        >>> f = TripleOps.idempotent(M, "0", "1")
        >>> TripleBoolOps.natural_leq(e, f)
        >>> True

        \endcode
        """
        ss = TripleOps.product(TripleOps.star(s), s)
        return TripleBoolOps.triple_eq(TripleOps.product(t, ss), s)

    @staticmethod
    def idempotent_leq(e: Triple, f: Triple) -> bool:
        """!
        \brief order of idempotents [p,qp,q] <= [a,ba,b] read off the
        ideals: pP ⊆ aP and Pq ⊆ Pb
        """
        if e.is_zero():
            return True
        if f.is_zero():
            return False
        M = e.monoid
        return (
            M.divide(Side.LEFT, f.p, e.p) is not None
            and M.divide(Side.RIGHT, f.r, e.r) is not None
        )


class TripleOps:
    """"""

    @staticmethod
    def make_triple(
        M: AbstractLcmMonoid, p: Element, q: Element, r: Element
    ) -> Triple:
        """!
        \throws InvalidTriple when q is not in Pp ∩ rP
        """
        return Triple(M, p, q, r)

    @staticmethod
    def try_make(
        M: AbstractLcmMonoid, p: Element, q: Element, r: Element
    ) -> Optional[Triple]:
        """"""
        try:
            return Triple(M, p, q, r)
        except InvalidTriple:
            return None

    @staticmethod
    def zero(M: AbstractLcmMonoid) -> Triple:
        return Triple.zero(M)

    @staticmethod
    def top(M: AbstractLcmMonoid) -> Triple:
        one = M.identity()
        return Triple(M, one, one, one)

    @staticmethod
    def generator(M: AbstractLcmMonoid, p: Element) -> Triple:
        """!
        \brief [p] = [p,p,p]
        """
        return Triple(M, p, p, p)

    @staticmethod
    def generator_adjoint(M: AbstractLcmMonoid, p: Element) -> Triple:
        """!
        \brief [p]* = [1,p,1]
        """
        one = M.identity()
        return Triple(M, one, p, one)

    @staticmethod
    def idempotent(M: AbstractLcmMonoid, p: Element, q: Element) -> Triple:
        """!
        \brief [p, qp, q]
        """
        return Triple(M, p, M.mul(q, p), q)

    @staticmethod
    def from_constructible(Y: ConstructibleSet) -> Triple:
        """!
        \brief Δ_p ∩ Δ^q ↦ [p, qp, q] and ∅ ↦ 0
        """
        if Y.is_empty():
            return Triple.zero(Y.monoid)
        return TripleOps.idempotent(Y.monoid, Y.p, Y.q)

    @staticmethod
    def to_constructible(e: Triple) -> ConstructibleSet:
        """!
        \brief [p, qp, q] ↦ Δ_p ∩ Δ^q

        \throws NotIdempotent
        """
        if e.is_zero():
            return ConstructibleSet.empty(e.monoid)
        if not TripleBoolOps.is_idempotent(e):
            raise NotIdempotent(str(e) + " is not idempotent")
        return ConstructibleSet(e.monoid, e.p, e.r)

    @staticmethod
    def product(s: Triple, t: Triple) -> Triple:
        """!
        \brief [p,q,r][a,b,c] = [p q₁, r₁ r a a₁, b₁ c]

        Here r a a₁ = q q₁ is the right LCM of ra and q, and r₁ r a = b₁ b
        the left LCM of ra and b; either missing gives zero.

        \code{.py}

        >>> M = FreeMonoid(2)
        >>> s = Triple(M, "", "0", "0")
        >>> t = Triple(M, "0", "0", "0")
        >>> TripleOps.product(s, t)
        >>> [0,00,00]

        \endcode
        """
        M = s.monoid
        if s.is_zero() or t.is_zero():
            return Triple.zero(M)
        ra = M.mul(s.r, t.p)
        right = M.right_lcm(ra, s.q)
        if right is None:
            return Triple.zero(M)
        left = M.left_lcm(ra, t.q)
        if left is None:
            return Triple.zero(M)
        a1, q1 = right.w1, right.w2
        r1, b1 = left.w1, left.w2
        return Triple(
            M,
            M.mul(s.p, q1),
            M.mul(r1, M.mul(ra, a1)),
            M.mul(b1, t.r),
        )

    @staticmethod
    def star(s: Triple) -> Triple:
        """!
        \brief [p,q,r]* = [r₁, q, p₁]
        """
        if s.is_zero():
            return s
        return Triple(s.monoid, s.r1, s.q, s.p1)

    @staticmethod
    def range_idempotent(s: Triple) -> Triple:
        """!
        \brief s s* = [p, q, p₁]
        """
        if s.is_zero():
            return s
        return Triple(s.monoid, s.p, s.q, s.p1)

    @staticmethod
    def source_idempotent(s: Triple) -> Triple:
        """!
        \brief s* s = [r₁, q, r]
        """
        if s.is_zero():
            return s
        return Triple(s.monoid, s.r1, s.q, s.r)

    @staticmethod
    def idempotent_meet(e: Triple, f: Triple) -> Triple:
        """!
        \brief [p,qp,q][a,ba,b] = [r, sr, s] with rP = pP ∩ aP and
        Ps = Pq ∩ Pb, computed without the general product
        """
        M = e.monoid
        if e.is_zero() or f.is_zero():
            return Triple.zero(M)
        right = M.right_lcm(e.p, f.p)
        if right is None:
            return Triple.zero(M)
        left = M.left_lcm(e.r, f.r)
        if left is None:
            return Triple.zero(M)
        return TripleOps.idempotent(M, right.r, left.r)

    @staticmethod
    def canonical_form(s: Triple) -> Triple:
        """!
        \brief the representative [p u, v q u, v r] of the class of s in
        which r₁u and v r are normalized

        For free and grid monoids this is s itself. For Zappa–Szép products
        the result has the shape [(α,g), (βγ,e), (β,e)].
        """
        if s.is_zero():
            return s
        M = s.monoid
        _, u = M.right_normalize(s.r1)
        r, v = M.left_normalize(s.r)
        return Triple(M, M.mul(s.p, u), M.mul(M.mul(v, s.q), u), r)

    @staticmethod
    def canonical_key(s: Triple) -> Hashable:
        """"""
        return TripleOps.canonical_form(s).key()

    @staticmethod
    def enumerate_triples(
        M: AbstractLcmMonoid, n: int, distinct: bool = True
    ) -> List[Triple]:
        """!
        \brief nonzero triples whose slots have length at most n, one per
        class of S_P

        With distinct=False every valid representative is kept, so a class
        may appear several times.

        \throws ResourceLimitError through the element enumeration
        """
        elements = M.enumerate_up_to(n)
        seen = set()
        out: List[Triple] = []
        for p, q, r in cartesian(elements, repeat=3):
            s = TripleOps.try_make(M, p, q, r)
            if s is None:
                continue
            if not distinct:
                out.append(s)
                continue
            k = TripleOps.canonical_key(s)
            if k in seen:
                continue
            seen.add(k)
            out.append(s)
        logger.debug(
            "%d %s of triples with slots of length <= %d in %s",
            len(out),
            "classes" if distinct else "representatives",
            n,
            M.name(),
        )
        return out

    @staticmethod
    def opposite_triple(s: Triple) -> Triple:
        """!
        \brief [p,q,r] ↦ [r,q,p] over the opposite monoid
        """
        op = s.monoid.opposite()
        if s.is_zero():
            return Triple.zero(op)
        return Triple(op, s.r, s.q, s.p)

    @staticmethod
    def group_label(s: Triple):
        """!
        \brief ψ[p,q,r] = p q⁻¹ r in the enveloping group

        \throws ZeroElement for the zero
        \throws UnsupportedInstance for monoids without a shipped group
        """
        if s.is_zero():
            raise ZeroElement("ψ is undefined on the zero")
        return group_label_backend(s.monoid).label(s)
