"""!
\file bipoint.py Eventually periodic bi-infinite sequences …x₂x₁.y₁y₂…
"""
import re
from typing import Tuple

from pylcm.errors import ParseError

_TEXT = re.compile(r"^\[(\w+)\](\w*)\.(\w*)\[(\w+)\]$")


def primitive_root(w: str) -> str:
    """!
    \brief the shortest u with w = u^k
    """
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


def canonical_half(pre: str, period: str) -> Tuple[str, str]:
    """!
    \brief shortest pre-period and primitive period of pre·period^∞
    """
    if not period:
        raise ValueError("a period must be nonempty")
    period = primitive_root(period)
    while pre and pre[-1] == period[-1]:
        pre = pre[:-1]
        period = period[-1] + period[:-1]
    return pre, period


class BiPoint:
    """!
    \brief the point (x, y) of the two sided full shift with
    x = left_pre · left_period^∞ read leftwards from the origin and
    y = right_pre · right_period^∞ read rightwards

    Halves are kept canonical, so equality is equality of the four words.
    The text form lists the sequence as it reads from left to right with
    the periodic parts in brackets.

    \code{.py}

    >>> pt = BiPoint.from_text("[1].0[1]")
    >>> str(pt.shift(1))
    >>> "[1]0.[1]"

    \endcode
    """

    __slots__ = ("left_pre", "left_period", "right_pre", "right_period")

    def __init__(
        self, left_pre: str, left_period: str, right_pre: str, right_period: str
    ):
        self.left_pre, self.left_period = canonical_half(left_pre, left_period)
        self.right_pre, self.right_period = canonical_half(right_pre, right_period)

    @classmethod
    def from_text(cls, text: str) -> "BiPoint":
        """!
        \throws ParseError
        """
        m = _TEXT.match(text.strip())
        if m is None:
            raise ParseError("expected [u]v.w[z]", 0, text)
        lp, lpre, rpre, rp = m.groups()
        return cls(lpre[::-1], lp[::-1], rpre, rp)

    def prefix_left(self, n: int) -> str:
        """!
        \brief x₁ … x_n
        """
        return _prefix(self.left_pre, self.left_period, n)

    def prefix_right(self, n: int) -> str:
        """!
        \brief y₁ … y_n
        """
        return _prefix(self.right_pre, self.right_period, n)

    def complexity(self) -> int:
        return (
            len(self.left_pre)
            + len(self.left_period)
            + len(self.right_pre)
            + len(self.right_period)
        )

    def shift(self, n: int) -> "BiPoint":
        """!
        \brief σⁿ; σ moves y₁ across the origin to become the new x₁ and
        σ⁻¹ moves x₁ back
        """
        lpre, lper = self.left_pre, self.left_period
        rpre, rper = self.right_pre, self.right_period
        for _ in range(abs(n)):
            if n > 0:
                letter, rpre, rper = _pop(rpre, rper)
                lpre = letter + lpre
            else:
                letter, lpre, lper = _pop(lpre, lper)
                rpre = letter + rpre
        return BiPoint(lpre, lper, rpre, rper)

    def key(self):
        return (self.left_pre, self.left_period, self.right_pre, self.right_period)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoint):
            return NotImplemented
        return self.key() == other.key()

    def __lt__(self, other: "BiPoint") -> bool:
        return self.key() < other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self) -> str:
        return (
            "["
            + self.left_period[::-1]
            + "]"
            + self.left_pre[::-1]
            + "."
            + self.right_pre
            + "["
            + self.right_period
            + "]"
        )

    def __repr__(self) -> str:
        return "BiPoint(" + str(self) + ")"


def _prefix(pre: str, period: str, n: int) -> str:
    if n <= len(pre):
        return pre[:n]
    rest = n - len(pre)
    reps = rest // len(period) + 1
    return pre + (period * reps)[:rest]


def _pop(pre: str, period: str) -> Tuple[str, str, str]:
    if pre:
        return pre[0], pre[1:], period
    return period[0], "", period[1:] + period[0]
