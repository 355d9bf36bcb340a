"""!
\file odometer.py The binary adding machine as a self-similar action of Z
"""
from typing import List, Optional, Tuple

from pylcm.action.atype.abstractaction import AbstractSelfSimilarAction


def word_value(w: str) -> int:
    """!
    \brief value of a binary word read least significant bit first
    """
    return sum(1 << i for i, c in enumerate(w) if c == "1")


def value_word(v: int, n: int) -> str:
    """!
    \brief the length n binary word of v mod 2^n, least significant bit
    first
    """
    v = v % (1 << n) if n > 0 else 0
    return "".join("1" if (v >> i) & 1 else "0" for i in range(n))


class Odometer(AbstractSelfSimilarAction):
    """!
    \brief The group Z = <a> acting on {0,1}* by binary addition with carry

    The element a^m is stored as the integer m. On a word w of length n it
    acts as val(w) + m mod 2^n and its restriction is the carry
    a^floor((val(w) + m) / 2^n). In particular a·(0w) = 1w with a|_0 = e
    and a·(1w) = 0(a·w) with a|_1 = a. The action is pseudo-free and
    recurrent and transport has a closed form.

    \code{.py}

    >>> G = Odometer()
    >>> G.act_restrict(2, "0")
    >>> ("0", 1)
    >>> G.transport("0", "0", 1)
    >>> 2

    \endcode
    """

    def name(self) -> str:
        return "odometer"

    def alphabet(self) -> str:
        return "01"

    def identity(self) -> int:
        return 0

    def compose(self, g: int, h: int) -> int:
        return g + h

    def inverse(self, g: int) -> int:
        return -g

    def eq(self, g: int, h: int) -> bool:
        return g == h

    def key(self, g: int) -> int:
        return g

    def act_restrict(self, g: int, w: str) -> Tuple[str, int]:
        n = len(w)
        total = word_value(w) + g
        return value_word(total, n), total >> n

    def transport(self, alpha: str, delta: str, k: int) -> Optional[int]:
        if len(alpha) != len(delta):
            return None
        # j·alpha = delta with carry k
        return (k << len(alpha)) + word_value(delta) - word_value(alpha)

    def enumerate_group(self, bound: int) -> List[int]:
        return sorted(range(-bound, bound + 1), key=lambda m: (abs(m), m))

    def format_group(self, g: int) -> str:
        return str(g)

    def parse_group(self, text: str) -> int:
        body = text.strip()
        if body in ("e", ""):
            return 0
        if body == "a":
            return 1
        if body.startswith("a^"):
            body = body[2:]
        return int(body)

    def is_recurrent(self) -> bool:
        return True

    def is_certifying(self) -> bool:
        return True
