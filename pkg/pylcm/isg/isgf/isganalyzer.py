"""!
\file isganalyzer.py Exhaustive checks that S_P is an E*-unitary inverse
semigroup
"""
import logging
from itertools import product
from typing import List

from pylcm.isg.isgf.grouplabel import group_label_backend
from pylcm.isg.isgf.tripleops import TripleBoolOps, TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element, Side
from pylcm.propertyresult import PropertyResult

logger = logging.getLogger(__name__)

eq = TripleBoolOps.triple_eq
mul = TripleOps.product
star = TripleOps.star


class IsgAnalyzer:
    """"""

    @staticmethod
    def check_associativity(triples: List[Triple]) -> PropertyResult:
        """"""
        res = PropertyResult("associativity")
        for s, t, u in product(triples, repeat=3):
            st = mul(s, t)
            res.record(
                eq(mul(st, u), mul(s, mul(t, u))),
                lambda: str(s) + " " + str(t) + " " + str(u),
            )
        return res

    @staticmethod
    def check_involution(triples: List[Triple]) -> PropertyResult:
        """!
        \brief s** = s and (st)* = t*s*
        """
        res = PropertyResult("involution")
        for s in triples:
            res.record(eq(star(star(s)), s), lambda: str(s))
        for s, t in product(triples, repeat=2):
            res.record(
                eq(star(mul(s, t)), mul(star(t), star(s))),
                lambda: str(s) + " " + str(t),
            )
        return res

    @staticmethod
    def check_regularity(triples: List[Triple]) -> PropertyResult:
        """!
        \brief s s* s = s, with s s* and s* s given by their closed forms
        """
        res = PropertyResult("regularity")
        for s in triples:
            ok = (
                eq(mul(s, mul(star(s), s)), s)
                and eq(mul(s, star(s)), TripleOps.range_idempotent(s))
                and eq(mul(star(s), s), TripleOps.source_idempotent(s))
            )
            res.record(ok, lambda: str(s))
        return res

    @staticmethod
    def check_idempotents(
        M: AbstractLcmMonoid, triples: List[Triple], elements: List[Element]
    ) -> PropertyResult:
        """!
        \brief ss = s iff s is some [p, qp, q], and [p,qp,q][a,ba,b] is the
        idempotent of the two LCMs
        """
        res = PropertyResult("idempotents")
        forms = [TripleOps.idempotent(M, p, q) for p, q in product(elements, repeat=2)]
        for s in triples:
            idem = TripleBoolOps.is_idempotent(s)
            shaped = eq(s, TripleOps.idempotent(M, s.p, s.r))
            res.record(idem == shaped, lambda: str(s))
        for e, f in product(forms, repeat=2):
            res.record(
                eq(mul(e, f), TripleOps.idempotent_meet(e, f))
                and eq(mul(e, f), mul(f, e)),
                lambda: str(e) + " " + str(f),
            )
        return res

    @staticmethod
    def check_natural_order(triples: List[Triple]) -> PropertyResult:
        """!
        \brief on idempotents s <= t agrees with ideal containment
        """
        res = PropertyResult("natural_order")
        idems = [s for s in triples if TripleBoolOps.is_idempotent(s)]
        for e, f in product(idems, repeat=2):
            res.record(
                TripleBoolOps.natural_leq(e, f)
                == TripleBoolOps.idempotent_leq(e, f),
                lambda: str(e) + " <= " + str(f),
            )
        for s in triples:
            res.record(TripleBoolOps.natural_leq(s, s), lambda: str(s))
        return res

    @staticmethod
    def check_e_unitary(triples: List[Triple]) -> PropertyResult:
        """!
        \brief se = e for a nonzero idempotent e forces s idempotent
        """
        res = PropertyResult("e_star_unitary")
        idems = [s for s in triples if TripleBoolOps.is_idempotent(s)]
        for s, e in product(triples, idems):
            if not eq(mul(s, e), e):
                res.skip()
                continue
            res.record(
                TripleBoolOps.is_idempotent(s),
                lambda: str(s) + " fixes " + str(e),
            )
        return res

    @staticmethod
    def check_group_label(triples: List[Triple]) -> PropertyResult:
        """!
        \brief ψ(st) = ψ(s)ψ(t) when st is nonzero, and ψ(s) is the identity
        exactly on idempotents
        """
        res = PropertyResult("group_label")
        if not triples:
            return res
        G = group_label_backend(triples[0].monoid)
        labels = {s: TripleOps.group_label(s) for s in triples}
        for s in triples:
            res.record(
                G.is_identity(labels[s]) == TripleBoolOps.is_idempotent(s),
                lambda: str(s),
            )
        for s, t in product(triples, repeat=2):
            st = mul(s, t)
            if st.is_zero():
                continue
            res.record(
                TripleOps.group_label(st) == G.mul(labels[s], labels[t]),
                lambda: str(s) + " " + str(t),
            )
        return res

    @staticmethod
    def check_opposite(triples: List[Triple]) -> PropertyResult:
        """!
        \brief [p,q,r] ↦ [r,q,p] reverses products
        """
        res = PropertyResult("opposite_anti_isomorphism")
        op = TripleOps.opposite_triple
        for s, t in product(triples, repeat=2):
            res.record(
                eq(op(mul(s, t)), mul(op(t), op(s))),
                lambda: str(s) + " " + str(t),
            )
        return res

    @staticmethod
    def check_equality_bruteforce(
        triples: List[Triple], classes: List[Triple], units: List[Element]
    ) -> PropertyResult:
        """!
        \brief triple_eq against a search over the given units

        Every representative in triples is compared with every class in
        classes, so each representative meets its own class at least once.
        u is searched with p = a u and v with r = v c; the middle slot is
        then compared for every surviving pair. Equal pairs whose solved
        units fall outside the window are skipped, as are disagreements on
        a non-certifying monoid.
        """
        res = PropertyResult("equality_bruteforce")
        if not triples:
            return res
        M = triples[0].monoid
        window = {M.key(u) for u in units}
        nontrivial = 0
        for s, t in product(triples, classes):
            if s.is_zero() or t.is_zero():
                continue
            equal = eq(s, t)
            if equal:
                u = M.unit_solve(Side.RIGHT, s.p, t.p)
                v = M.unit_solve(Side.LEFT, s.r, t.r)
                if M.key(u) not in window or M.key(v) not in window:
                    res.skip()
                    continue
                if s.key() != t.key():
                    nontrivial += 1
            us = [u for u in units if M.eq(s.p, M.mul(t.p, u))]
            vs = [v for v in units if M.eq(s.r, M.mul(v, t.r))]
            found = any(
                M.eq(s.q, M.mul(M.mul(v, t.q), u)) for u in us for v in vs
            )
            if equal != found and not M.is_certifying():
                res.skip()
                continue
            res.record(equal == found, lambda: str(s) + " ~ " + str(t))
        logger.debug(
            "%d equal pairs with distinct representatives checked", nontrivial
        )
        return res
