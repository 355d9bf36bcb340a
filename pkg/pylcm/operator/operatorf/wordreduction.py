"""!
\file wordreduction.py Normal form J_p J_q* J_r of words in the generators
J_p and their adjoints
"""
import logging
from random import Random
from typing import List, NamedTuple, Optional, Tuple

from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element
from pylcm.operator.operatorf.operatorops import OperatorOps
from pylcm.operator.otype.deltatruncation import DeltaTruncation
from pylcm.operator.otype.sparseop import SparseOp
from pylcm.propertyresult import PropertyResult

logger = logging.getLogger(__name__)


class Token(NamedTuple):
    """!
    \brief J_p, or J_p* when adjoint is set
    """

    element: Element
    adjoint: bool = False

    def text(self, M: AbstractLcmMonoid) -> str:
        j = "J(" + M.format_element(self.element) + ")"
        return "adj(" + j + ")" if self.adjoint else j


def _alternate(M: AbstractLcmMonoid, tokens: List[Token]) -> Tuple[List, List]:
    """!
    \brief write the word as J_{p_1} J_{q_1}* ... J_{p_n} J_{q_n}* J_{p_{n+1}}
    by merging runs, J_a J_b = J_ab and J_a* J_b* = J_ba*
    """
    ps = [M.identity()]
    qs: List[Element] = []
    in_adjoint = False
    for token in tokens:
        if token.adjoint:
            if not in_adjoint:
                qs.append(M.identity())
                in_adjoint = True
            qs[-1] = M.mul(token.element, qs[-1])
        else:
            if in_adjoint:
                ps.append(M.identity())
                in_adjoint = False
            ps[-1] = M.mul(ps[-1], token.element)
    if in_adjoint:
        ps.append(M.identity())
    return ps, qs


def collapse(
    M: AbstractLcmMonoid, p: Element, q: Element, r: Element
) -> Optional[Tuple[Element, Element, Element]]:
    """!
    \brief J_p* J_q J_r* = J_{p₁} J_{q₂ q q₁}* J_{r₁} where p p₁ = q q₁ is the
    right LCM of p and q and q₂ q = r₁ r the left LCM of q and r; None when
    either is missing
    """
    right = M.right_lcm(p, q)
    if right is None:
        return None
    left = M.left_lcm(q, r)
    if left is None:
        return None
    p1, q1 = right.w1, right.w2
    q2, r1 = left.w1, left.w2
    return p1, M.mul(M.mul(q2, q), q1), r1


def normalize(
    M: AbstractLcmMonoid, p: Element, q: Element, r: Element
) -> Triple:
    """!
    \brief J_p J_q* J_r = J_{p a₁} J_k* J_{q₁ r} where p₁ p = q₁ q = a is the
    left LCM of p and q, and a a₁ = k the right LCM of a and q₁ r
    """
    left = M.left_lcm(p, q)
    if left is None:
        return Triple.zero(M)
    a, q1 = left.r, left.w2
    q1r = M.mul(q1, r)
    right = M.right_lcm(a, q1r)
    if right is None:
        return Triple.zero(M)
    return Triple(M, M.mul(p, right.w1), right.r, q1r)


def reduce_word(M: AbstractLcmMonoid, tokens: List[Token]) -> Triple:
    """!
    \brief the triple [p, q, r] with J_p J_q* J_r equal to the product of
    the tokens, or the zero

    The innermost J* J J* of the rightmost part is collapsed until a single
    J J* J is left, which is then normalized so that q ∈ Pp ∩ rP.

    \code{.py}

    >>> M = FreeMonoid(2)
    >>> reduce_word(M, [Token("0", True), Token("0")])
    >>> [ε,0,0]
    >>> reduce_word(M, [Token("0", True), Token("0"), Token("1", True)])
    >>> 0

    \endcode
    """
    ps, qs = _alternate(M, tokens)
    while len(qs) > 1:
        c = collapse(M, qs[-2], ps[-2], qs[-1])
        if c is None:
            return Triple.zero(M)
        a, b, c_ = c
        last = M.mul(c_, ps[-1])
        ps[-3] = M.mul(ps[-3], a)
        qs[-2] = b
        del ps[-2:]
        ps.append(last)
        del qs[-1]
    if not qs:
        one = M.identity()
        return normalize(M, ps[0], one, one)
    return normalize(M, ps[0], qs[0], ps[1])


def random_word(
    rng: Random, elements: List[Element], max_tokens: int
) -> List[Token]:
    """!
    \brief between 1 and max_tokens tokens drawn uniformly from elements,
    each an adjoint with probability one half
    """
    n = rng.randint(1, max_tokens)
    return [Token(rng.choice(elements), rng.random() < 0.5) for _ in range(n)]


def word_matrix(tokens: List[Token], T: DeltaTruncation) -> SparseOp:
    """!
    \brief the product of the token matrices, left to right
    """
    out = SparseOp.identity(len(T))
    for token in tokens:
        out = out @ OperatorOps.j_matrix(token.element, T, adjoint=token.adjoint)
    return out


def check_reduction(
    M: AbstractLcmMonoid,
    T: DeltaTruncation,
    elements: List[Element],
    rng: Random,
    n_words: int,
    max_tokens: int = 8,
) -> PropertyResult:
    """!
    \brief the matrix of reduce_word(w) equals the product of the tokens of
    w for n_words random words
    """
    res = PropertyResult("word_reduction")
    for _ in range(n_words):
        w = random_word(rng, elements, max_tokens)
        lhs = OperatorOps.represent_triple(reduce_word(M, w), T)
        res.record(
            lhs.equals_on(word_matrix(w, T)),
            lambda: " ".join(t.text(M) for t in w),
        )
    logger.debug("checked %d random words", n_words)
    return res
