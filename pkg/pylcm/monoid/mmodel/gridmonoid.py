"""!
\file gridmonoid.py The commutative grid monoid N^k
"""
from typing import Iterator, Optional, Tuple

from pylcm.config import DEFAULT_SETTINGS, Settings
from pylcm.monoid.mtype.abstractmonoid import LcmWitness, Side
from pylcm.monoid.mtype.basemonoid import BaseLcmMonoid

Vector = Tuple[int, ...]


def compositions(n: int, k: int) -> Iterator[Vector]:
    """!
    \brief vectors of k naturals summing to n, lexicographically decreasing
    """
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


class GridMonoid(BaseLcmMonoid):
    """!
    \brief Vectors of naturals under addition

    Both least common multiples are the coordinatewise maximum, hence always
    exist; the length of a vector is its coordinate sum.

    \code{.py}

    >>> M = GridMonoid(2)
    >>> M.right_lcm((1, 0), (0, 2))
    >>> LcmWitness(r=(1, 2), w1=(0, 2), w2=(1, 0))

    \endcode
    """

    def __init__(self, k: int, settings: Settings = DEFAULT_SETTINGS):
        if k < 1:
            raise ValueError("grid rank must be positive")
        self.k = k
        super().__init__(settings)

    def name(self) -> str:
        return "grid:" + str(self.k)

    def identity(self) -> Vector:
        return tuple(0 for _ in range(self.k))

    def mul(self, p: Vector, q: Vector) -> Vector:
        return tuple(a + b for a, b in zip(p, q))

    def length(self, p: Vector) -> int:
        return sum(p)

    def is_unit(self, p: Vector) -> bool:
        return all(a == 0 for a in p)

    def _lcm(self, p: Vector, q: Vector) -> LcmWitness:
        r = tuple(max(a, b) for a, b in zip(p, q))
        w1 = tuple(c - a for c, a in zip(r, p))
        w2 = tuple(c - b for c, b in zip(r, q))
        return LcmWitness(r=r, w1=w1, w2=w2)

    def right_lcm(self, p: Vector, q: Vector) -> Optional[LcmWitness]:
        return self._lcm(p, q)

    def left_lcm(self, p: Vector, q: Vector) -> Optional[LcmWitness]:
        return self._lcm(p, q)

    def divide(self, side: Side, p: Vector, q: Vector) -> Optional[Vector]:
        x = tuple(b - a for a, b in zip(p, q))
        if any(c < 0 for c in x):
            return None
        return x

    def iter_length(self, n: int) -> Iterator[Vector]:
        return compositions(n, self.k)

    def format_element(self, p: Vector) -> str:
        return "(" + ",".join(str(a) for a in p) + ")"

    def parse_element(self, text: str) -> Vector:
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        try:
            vec = tuple(int(c) for c in body.split(","))
        except ValueError:
            raise ValueError("grid element must be integers: " + text)
        if len(vec) != self.k or any(a < 0 for a in vec):
            raise ValueError(
                "grid element must have "
                + str(self.k)
                + " non negative coordinates: "
                + text
            )
        return vec
