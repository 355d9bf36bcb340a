"""!
\file actionops.py Checks of the self-similarity axioms on enumerations
"""
from itertools import product
from typing import List

from pylcm.action.atype.abstractaction import (
    AbstractSelfSimilarAction,
    GroupElement,
)
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Side
from pylcm.propertyresult import PropertyResult


def words_up_to(alphabet: str, n: int) -> List[str]:
    """"""
    return [
        "".join(w) for m in range(n + 1) for w in product(alphabet, repeat=m)
    ]


class ActionOps:
    """"""

    @staticmethod
    def check_self_similarity(
        G: AbstractSelfSimilarAction,
        group: List[GroupElement],
        depth: int,
    ) -> PropertyResult:
        """!
        \brief g·(αβ) = (g·α)(g|_α·β) and g|_{αβ} = (g|_α)|_β for
        |α| + |β| <= depth
        """
        res = PropertyResult("self_similarity")
        words = words_up_to(G.alphabet(), depth)
        for g in group:
            for alpha in words:
                head, r = G.act_restrict(g, alpha)
                for beta in words:
                    if len(alpha) + len(beta) > depth:
                        continue
                    whole, rr = G.act_restrict(g, alpha + beta)
                    tail, r2 = G.act_restrict(r, beta)
                    ok = whole == head + tail and G.eq(rr, r2)
                    res.record(
                        ok,
                        lambda: G.format_group(g) + " on " + alpha + "|" + beta,
                    )
        return res

    @staticmethod
    def check_restriction_cocycle(
        G: AbstractSelfSimilarAction,
        group: List[GroupElement],
        depth: int,
    ) -> PropertyResult:
        """!
        \brief (gh)·α = g·(h·α) and (gh)|_α = g|_{h·α} h|_α
        """
        res = PropertyResult("restriction_cocycle")
        words = words_up_to(G.alphabet(), depth)
        for g, h in product(group, repeat=2):
            gh = G.compose(g, h)
            for alpha in words:
                moved, hr = G.act_restrict(h, alpha)
                image, gr = G.act_restrict(g, moved)
                image2, ghr = G.act_restrict(gh, alpha)
                ok = image == image2 and G.eq(ghr, G.compose(gr, hr))
                res.record(
                    ok,
                    lambda: G.format_group(g)
                    + ", "
                    + G.format_group(h)
                    + " on "
                    + alpha,
                )
        return res

    @staticmethod
    def check_pseudo_free(
        G: AbstractSelfSimilarAction,
        group: List[GroupElement],
        depth: int,
    ) -> PropertyResult:
        """!
        \brief g·α = α and g|_α = e force g = e
        """
        res = PropertyResult("pseudo_free")
        for g in group:
            for alpha in words_up_to(G.alphabet(), depth):
                image, r = G.act_restrict(g, alpha)
                if image == alpha and G.is_identity(r):
                    res.record(
                        G.is_identity(g),
                        lambda: G.format_group(g) + " fixes " + alpha,
                    )
                else:
                    res.record(True)
        return res

    @staticmethod
    def check_recurrence(
        G: AbstractSelfSimilarAction,
        targets: List[GroupElement],
        depth: int,
    ) -> PropertyResult:
        """!
        \brief transport succeeds between any two words of equal length and
        its output realizes the requested restriction
        """
        res = PropertyResult("recurrence")
        for n in range(depth + 1):
            words = ["".join(w) for w in product(G.alphabet(), repeat=n)]
            for alpha, delta, k in product(words, words, targets):
                j = G.transport(alpha, delta, k)
                if j is None:
                    res.record(
                        False,
                        lambda: "no transport " + alpha + " -> " + delta,
                    )
                    continue
                image, r = G.act_restrict(j, alpha)
                res.record(
                    image == delta and G.eq(r, k),
                    lambda: "bad transport " + alpha + " -> " + delta,
                )
        return res

    @staticmethod
    def check_left_ideals_linear(
        M: AbstractLcmMonoid, elements: List
    ) -> PropertyResult:
        """!
        \brief the left LCM of x and y is x or y up to a unit
        """
        res = PropertyResult("left_ideals_linear")
        for x, y in product(elements, repeat=2):
            w = M.left_lcm(x, y)
            ok = w is not None and (
                M.unit_solve(Side.LEFT, w.r, x) is not None
                or M.unit_solve(Side.LEFT, w.r, y) is not None
            )
            res.record(
                ok,
                lambda: M.format_element(x) + ", " + M.format_element(y),
            )
        return res
