"""!
\file freemonoid.py Free monoid X* over a finite alphabet
"""
from itertools import product
from typing import Iterator, Optional

from pylcm.config import DEFAULT_SETTINGS, Settings
from pylcm.monoid.mtype.abstractmonoid import LcmWitness, Side
from pylcm.monoid.mtype.basemonoid import BaseLcmMonoid

LETTERS = "0123456789abcdefghijklmnopqrstuvwxyz"
EMPTY_WORD = "ε"


class FreeMonoid(BaseLcmMonoid):
    """!
    \brief Words over the alphabet {0, 1, ..., k-1} under concatenation

    Elements are python strings, the empty string being the identity. The
    unit group is trivial. Two words have a common right multiple exactly
    when one is a prefix of the other, and a common left multiple exactly
    when one is a suffix of the other.

    \code{.py}

    >>> M = FreeMonoid(2)
    >>> M.right_lcm("0", "01")
    >>> LcmWitness(r="01", w1="1", w2="")
    >>> M.left_lcm("0", "1") is None
    >>> True

    \endcode
    """

    def __init__(self, k: int, settings: Settings = DEFAULT_SETTINGS):
        if k < 1 or k > len(LETTERS):
            raise ValueError(
                "alphabet size must be between 1 and " + str(len(LETTERS))
            )
        self.k = k
        self.alphabet = LETTERS[:k]
        super().__init__(settings)

    def name(self) -> str:
        return "free:" + str(self.k)

    def identity(self) -> str:
        return ""

    def mul(self, p: str, q: str) -> str:
        return p + q

    def length(self, p: str) -> int:
        return len(p)

    def is_unit(self, p: str) -> bool:
        return p == ""

    def right_lcm(self, p: str, q: str) -> Optional[LcmWitness]:
        if q.startswith(p):
            return LcmWitness(r=q, w1=q[len(p) :], w2="")
        if p.startswith(q):
            return LcmWitness(r=p, w1="", w2=p[len(q) :])
        return None

    def left_lcm(self, p: str, q: str) -> Optional[LcmWitness]:
        if q.endswith(p):
            return LcmWitness(r=q, w1=q[: len(q) - len(p)], w2="")
        if p.endswith(q):
            return LcmWitness(r=p, w1="", w2=p[: len(p) - len(q)])
        return None

    def divide(self, side: Side, p: str, q: str) -> Optional[str]:
        if side is Side.LEFT:
            return q[len(p) :] if q.startswith(p) else None
        return q[: len(q) - len(p)] if q.endswith(p) else None

    def iter_length(self, n: int) -> Iterator[str]:
        for letters in product(self.alphabet, repeat=n):
            yield "".join(letters)

    def format_element(self, p: str) -> str:
        return p if p else EMPTY_WORD

    def parse_element(self, text: str) -> str:
        word = text.strip()
        if word == EMPTY_WORD:
            return ""
        for c in word:
            if c not in self.alphabet:
                raise ValueError(
                    "letter " + repr(c) + " is not in alphabet " + self.alphabet
                )
        return word
