"""!
\file ssrewriter.py Letter by letter rewriting of words in s_x, s_x* and u_g
"""
from enum import Enum
from typing import Any, List, NamedTuple, Optional

from pylcm.action.atype.abstractaction import AbstractSelfSimilarAction
from pylcm.nekrashevych.ntype.monomial import Monomial

MAX_STEPS = 100000


class _Annihilated(Exception):
    pass


class LetterKind(Enum):
    S = "s"
    S_STAR = "s*"
    U = "u"


class Letter(NamedTuple):
    """"""

    kind: LetterKind
    value: Any


class SSRewriter:
    """!
    \brief rewrites a word with the rules

    - u_g u_h → u_{gh} and u_e → 1
    - s_x* s_y → 1 when x = y and 0 otherwise
    - u_g s_x → s_{g·x} u_{g|_x}
    - s_x* u_g → u_{(g⁻¹|_x)⁻¹} s*_{g⁻¹·x}

    until it has the shape s_{a₁}…s_{a_n} u_g s*_{b_m}…s*_{b₁}, read as the
    monomial (a₁…a_n, g, b₁…b_m). It works one letter at a time and shares
    no code with the monomial product.
    """

    def __init__(self, action: AbstractSelfSimilarAction):
        self.action = action

    def letters(self, m: Monomial) -> List[Letter]:
        """!
        \brief s_α u_g s_β* spelled out
        """
        out = [Letter(LetterKind.S, x) for x in m.alpha]
        out.append(Letter(LetterKind.U, m.g))
        out += [Letter(LetterKind.S_STAR, x) for x in reversed(m.beta)]
        return out

    def _step(self, word: List[Letter]) -> Optional[List[Letter]]:
        """!
        \brief the word after one rewrite at the leftmost redex, None when
        no rule applies

        \throws _Annihilated when s_x* meets s_y with x != y
        """
        A = self.action
        for i, letter in enumerate(word):
            if letter.kind is LetterKind.U and A.is_identity(letter.value):
                return word[:i] + word[i + 1 :]
            if i + 1 == len(word):
                break
            nxt = word[i + 1]
            if letter.kind is LetterKind.U and nxt.kind is LetterKind.U:
                merged = Letter(LetterKind.U, A.compose(letter.value, nxt.value))
                return word[:i] + [merged] + word[i + 2 :]
            if letter.kind is LetterKind.S_STAR and nxt.kind is LetterKind.S:
                if letter.value != nxt.value:
                    raise _Annihilated()
                return word[:i] + word[i + 2 :]
            if letter.kind is LetterKind.U and nxt.kind is LetterKind.S:
                moved, restriction = A.act_restrict(letter.value, nxt.value)
                return (
                    word[:i]
                    + [Letter(LetterKind.S, moved), Letter(LetterKind.U, restriction)]
                    + word[i + 2 :]
                )
            if letter.kind is LetterKind.S_STAR and nxt.kind is LetterKind.U:
                inv = A.inverse(nxt.value)
                moved, restriction = A.act_restrict(inv, letter.value)
                return (
                    word[:i]
                    + [
                        Letter(LetterKind.U, A.inverse(restriction)),
                        Letter(LetterKind.S_STAR, moved),
                    ]
                    + word[i + 2 :]
                )
        return None

    def normal_form(self, word: List[Letter]) -> Monomial:
        """!
        \throws RuntimeError if MAX_STEPS rewrites do not reach a normal form
        """
        A = self.action
        current = list(word)
        for _ in range(MAX_STEPS):
            try:
                nxt = self._step(current)
            except _Annihilated:
                return Monomial.zero(A)
            if nxt is None:
                return self._read(current)
            current = nxt
        raise RuntimeError("rewriting did not terminate in " + str(MAX_STEPS) + " steps")

    def _read(self, word: List[Letter]) -> Monomial:
        A = self.action
        alpha = ""
        beta = ""
        g = A.identity()
        for letter in word:
            if letter.kind is LetterKind.S:
                alpha += letter.value
            elif letter.kind is LetterKind.U:
                g = letter.value
            else:
                beta = letter.value + beta
        return Monomial(A, alpha, g, beta)

    def multiply(self, m1: Monomial, m2: Monomial) -> Monomial:
        """"""
        if m1.is_zero() or m2.is_zero():
            return Monomial.zero(self.action)
        return self.normal_form(self.letters(m1) + self.letters(m2))
