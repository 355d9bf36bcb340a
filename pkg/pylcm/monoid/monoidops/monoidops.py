"""!
\file monoidops.py Exhaustive checks of the LCM monoid contract
"""
from itertools import product
from typing import List, Optional

from pylcm.monoid.mtype.abstractmonoid import (
    AbstractLcmMonoid,
    Element,
    LcmWitness,
    Side,
)
from pylcm.propertyresult import PropertyResult


class MonoidBoolOps:
    """!
    \brief Predicates on single elements and witnesses
    """

    @staticmethod
    def is_right_witness(
        M: AbstractLcmMonoid, p: Element, q: Element, w: LcmWitness
    ) -> bool:
        """!
        \brief p·w1 = q·w2 = r
        """
        return M.eq(M.mul(p, w.w1), w.r) and M.eq(M.mul(q, w.w2), w.r)

    @staticmethod
    def is_left_witness(
        M: AbstractLcmMonoid, p: Element, q: Element, w: LcmWitness
    ) -> bool:
        """!
        \brief w1·p = w2·q = r
        """
        return M.eq(M.mul(w.w1, p), w.r) and M.eq(M.mul(w.w2, q), w.r)

    @staticmethod
    def same_witness(
        M: AbstractLcmMonoid,
        w: Optional[LcmWitness],
        v: Optional[LcmWitness],
    ) -> bool:
        """"""
        if w is None or v is None:
            return w is None and v is None
        return M.eq(w.r, v.r) and M.eq(w.w1, v.w1) and M.eq(w.w2, v.w2)


class MonoidOps:
    """!
    \brief Contract checks over an enumeration of elements

    Every check returns a PropertyResult whose counterexamples are rendered
    with the monoid's own element syntax.
    """

    @staticmethod
    def _fmt(M: AbstractLcmMonoid, *els: Element) -> str:
        return ", ".join(M.format_element(e) for e in els)

    @staticmethod
    def check_identity(
        M: AbstractLcmMonoid, elements: List[Element]
    ) -> PropertyResult:
        """"""
        res = PropertyResult("identity")
        one = M.identity()
        res.record(M.length(one) == 0, "length(identity) != 0")
        for p in elements:
            ok = M.eq(M.mul(one, p), p) and M.eq(M.mul(p, one), p)
            res.record(ok, lambda: MonoidOps._fmt(M, p))
        return res

    @staticmethod
    def check_associativity(
        M: AbstractLcmMonoid, elements: List[Element]
    ) -> PropertyResult:
        """"""
        res = PropertyResult("associativity")
        for p, q, r in product(elements, repeat=3):
            lhs = M.mul(M.mul(p, q), r)
            rhs = M.mul(p, M.mul(q, r))
            res.record(M.eq(lhs, rhs), lambda: MonoidOps._fmt(M, p, q, r))
        return res

    @staticmethod
    def check_cancellativity(
        M: AbstractLcmMonoid, elements: List[Element]
    ) -> PropertyResult:
        """!
        \brief pq = pr ⇒ q = r and qp = rp ⇒ q = r
        """
        res = PropertyResult("cancellativity")
        for p, q, r in product(elements, repeat=3):
            if M.eq(q, r):
                continue
            ok = not M.eq(M.mul(p, q), M.mul(p, r)) and not M.eq(
                M.mul(q, p), M.mul(r, p)
            )
            res.record(ok, lambda: MonoidOps._fmt(M, p, q, r))
        return res

    @staticmethod
    def check_length(
        M: AbstractLcmMonoid, elements: List[Element]
    ) -> PropertyResult:
        """!
        \brief length(pq) >= max(length(p), length(q))
        """
        res = PropertyResult("length")
        for p, q in product(elements, repeat=2):
            ok = M.length(M.mul(p, q)) >= max(M.length(p), M.length(q))
            res.record(ok, lambda: MonoidOps._fmt(M, p, q))
        return res

    @staticmethod
    def check_lcm(
        M: AbstractLcmMonoid, elements: List[Element], side: Side
    ) -> PropertyResult:
        """!
        \brief witness law, minimality among enumerated common multiples and
        uniqueness up to units

        For side RIGHT every enumerated common right multiple m of p and q
        must be a right multiple of the returned r, and if m also divides r
        then r and m differ by a unit. For side LEFT the mirror statement is
        checked.
        """
        res = PropertyResult(side.value + "_lcm")
        # divide(LEFT, p, m) asks p·x = m, i.e. m is a right multiple of p
        dside = Side.LEFT if side is Side.RIGHT else Side.RIGHT
        for p, q in product(elements, repeat=2):
            if side is Side.RIGHT:
                w = M.right_lcm(p, q)
            else:
                w = M.left_lcm(p, q)
            common = [
                m
                for m in elements
                if M.divide(dside, p, m) is not None
                and M.divide(dside, q, m) is not None
            ]
            if w is None:
                res.record(
                    not common,
                    lambda: "no lcm but common multiple of "
                    + MonoidOps._fmt(M, p, q),
                )
                continue
            if side is Side.RIGHT:
                ok = MonoidBoolOps.is_right_witness(M, p, q, w)
            else:
                ok = MonoidBoolOps.is_left_witness(M, p, q, w)
            for m in common:
                if M.divide(dside, w.r, m) is None:
                    ok = False
                elif M.divide(dside, m, w.r) is not None:
                    usolve = M.unit_solve(side, w.r, m)
                    ok = ok and usolve is not None
            res.record(ok, lambda: MonoidOps._fmt(M, p, q))
        return res

    @staticmethod
    def check_opposite(
        M: AbstractLcmMonoid, elements: List[Element]
    ) -> PropertyResult:
        """!
        \brief the opposite monoid swaps the two LCMs and reverses products
        """
        res = PropertyResult("opposite")
        op = M.opposite()
        for p, q in product(elements, repeat=2):
            ok = (
                M.eq(op.mul(p, q), M.mul(q, p))
                and MonoidBoolOps.same_witness(
                    M, op.right_lcm(p, q), M.left_lcm(p, q)
                )
                and MonoidBoolOps.same_witness(
                    M, op.left_lcm(p, q), M.right_lcm(p, q)
                )
            )
            res.record(ok, lambda: MonoidOps._fmt(M, p, q))
        back = op.opposite()
        res.record(
            [M.key(e) for e in back.enumerate_up_to(1)]
            == [M.key(e) for e in M.enumerate_up_to(1)],
            "opposite of opposite enumerates differently",
        )
        return res

    @staticmethod
    def check_all(
        M: AbstractLcmMonoid, elements: List[Element]
    ) -> List[PropertyResult]:
        """"""
        return [
            MonoidOps.check_identity(M, elements),
            MonoidOps.check_associativity(M, elements),
            MonoidOps.check_cancellativity(M, elements),
            MonoidOps.check_length(M, elements),
            MonoidOps.check_lcm(M, elements, Side.RIGHT),
            MonoidOps.check_lcm(M, elements, Side.LEFT),
            MonoidOps.check_opposite(M, elements),
        ]
