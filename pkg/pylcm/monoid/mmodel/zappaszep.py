"""!
\file zappaszep.py Zappa–Szép product X*⋈G of a self-similar action
"""
import logging
from itertools import product
from typing import Hashable, Iterator, List, NamedTuple, Optional, Tuple

from pylcm.action.atype.abstractaction import (
    AbstractSelfSimilarAction,
    GroupElement,
)
from pylcm.config import DEFAULT_SETTINGS, Settings
from pylcm.errors import InconclusiveError
from pylcm.monoid.mmodel.freemonoid import EMPTY_WORD
from pylcm.monoid.mtype.abstractmonoid import LcmWitness, Side
from pylcm.monoid.mtype.basemonoid import BaseLcmMonoid

logger = logging.getLogger(__name__)


class SelfSimilarElement(NamedTuple):
    """!
    \brief the pair (word, g) standing for the product (word, e)(ε, g)
    """

    word: str
    g: GroupElement


class ZappaSzepMonoid(BaseLcmMonoid):
    """!
    \brief Monoid on X* × G with (α,g)(β,h) = (α(g·β), g|_β h)

    The units are the pairs (ε, g). A principal right ideal only depends on
    the word part, so two right ideals meet iff one word is a prefix of the
    other. For a recurrent action the principal left ideals are linearly
    ordered: the left LCM is the argument with the longer word, reached
    from the other one by transport.

    \code{.py}

    >>> M = ZappaSzepMonoid(Odometer())
    >>> x = SelfSimilarElement("0", 0)
    >>> y = SelfSimilarElement("11", 1)
    >>> M.left_lcm(x, y)
    >>> LcmWitness(r=("11", 1), w1=("1", 3), w2=("", 0))

    \endcode
    """

    def __init__(
        self,
        action: AbstractSelfSimilarAction,
        settings: Settings = DEFAULT_SETTINGS,
    ):
        self.action = action
        super().__init__(settings)

    def name(self) -> str:
        return self.action.name()

    def identity(self) -> SelfSimilarElement:
        return SelfSimilarElement("", self.action.identity())

    def element(self, word: str, g: Optional[GroupElement] = None):
        """"""
        if g is None:
            g = self.action.identity()
        return SelfSimilarElement(word, g)

    def mul(
        self, x: SelfSimilarElement, y: SelfSimilarElement
    ) -> SelfSimilarElement:
        moved, restriction = self.action.act_restrict(x.g, y.word)
        return SelfSimilarElement(
            x.word + moved, self.action.compose(restriction, y.g)
        )

    def eq(self, x: SelfSimilarElement, y: SelfSimilarElement) -> bool:
        return x.word == y.word and self.action.eq(x.g, y.g)

    def key(self, x: SelfSimilarElement) -> Hashable:
        return (x.word, self.action.key(x.g))

    def length(self, x: SelfSimilarElement) -> int:
        return len(x.word)

    def is_unit(self, x: SelfSimilarElement) -> bool:
        return x.word == ""

    def is_certifying(self) -> bool:
        return self.action.is_certifying()

    def divide(
        self, side: Side, p: SelfSimilarElement, q: SelfSimilarElement
    ) -> Optional[SelfSimilarElement]:
        G = self.action
        if side is Side.LEFT:
            # p·x = q: x = (g^-1·ω, g^-1|_ω h) with q = (αω, h)
            if not q.word.startswith(p.word):
                return None
            omega = q.word[len(p.word) :]
            mu, k = G.act_restrict(G.inverse(p.g), omega)
            return SelfSimilarElement(mu, G.compose(k, q.g))
        # x·p = q: x = (γ, j) with q.word = γδ, j·α = δ, j|_α = h g^-1
        if len(q.word) < len(p.word):
            return None
        cut = len(q.word) - len(p.word)
        gamma, delta = q.word[:cut], q.word[cut:]
        j = G.transport(p.word, delta, G.compose(q.g, G.inverse(p.g)))
        if j is None:
            return None
        return SelfSimilarElement(gamma, j)

    def act_restrict(
        self, g: GroupElement, w: str
    ) -> Tuple[str, GroupElement]:
        """"""
        return self.action.act_restrict(g, w)

    def transport(
        self, alpha: str, delta: str, k: GroupElement
    ) -> Optional[GroupElement]:
        """"""
        return self.action.transport(alpha, delta, k)

    def right_lcm(
        self, x: SelfSimilarElement, y: SelfSimilarElement
    ) -> Optional[LcmWitness]:
        if len(x.word) > len(y.word):
            w2 = self.divide(Side.LEFT, y, x)
            if w2 is None:
                return None
            return LcmWitness(r=x, w1=self.identity(), w2=w2)
        w1 = self.divide(Side.LEFT, x, y)
        if w1 is None:
            return None
        return LcmWitness(r=y, w1=w1, w2=self.identity())

    def left_lcm(
        self, x: SelfSimilarElement, y: SelfSimilarElement
    ) -> Optional[LcmWitness]:
        """!
        \brief least common left multiple, the argument with the longer word

        \throws InconclusiveError if the transport search of a
        non-certifying backend fails
        """
        if len(x.word) > len(y.word):
            longer, shorter, first = x, y, True
        else:
            longer, shorter, first = y, x, False
        w = self.divide(Side.RIGHT, shorter, longer)
        if w is None:
            raise InconclusiveError(
                "no transport found from "
                + self.format_element(shorter)
                + " to "
                + self.format_element(longer)
                + " in "
                + self.name()
            )
        if first:
            return LcmWitness(r=x, w1=self.identity(), w2=w)
        return LcmWitness(r=y, w1=w, w2=self.identity())

    def right_normalize(
        self, x: SelfSimilarElement
    ) -> Tuple[SelfSimilarElement, SelfSimilarElement]:
        u = SelfSimilarElement("", self.action.inverse(x.g))
        return SelfSimilarElement(x.word, self.action.identity()), u

    def left_normalize(
        self, x: SelfSimilarElement
    ) -> Tuple[SelfSimilarElement, SelfSimilarElement]:
        G = self.action
        target = G.alphabet()[0] * len(x.word)
        j = G.transport(x.word, target, G.inverse(x.g))
        if j is None:
            logger.debug(
                "left class of %s left unnormalized", self.format_element(x)
            )
            return x, self.identity()
        return SelfSimilarElement(target, G.identity()), SelfSimilarElement(
            "", j
        )

    def iter_length(self, n: int) -> Iterator[SelfSimilarElement]:
        group = self.action.enumerate_group(self.settings.group_bound)
        for letters in product(self.action.alphabet(), repeat=n):
            word = "".join(letters)
            for g in group:
                yield SelfSimilarElement(word, g)

    def enumerate_units(self, bound: int) -> List[SelfSimilarElement]:
        """!
        \brief the pairs (ε, g) for g in the group ball of radius bound
        """
        return [
            SelfSimilarElement("", g)
            for g in self.action.enumerate_group(bound)
        ]

    def format_element(self, x: SelfSimilarElement) -> str:
        return (
            "("
            + (x.word if x.word else EMPTY_WORD)
            + ","
            + self.action.format_group(x.g)
            + ")"
        )

    def parse_element(self, text: str) -> SelfSimilarElement:
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            inner = body[1:-1]
            if "," not in inner:
                raise ValueError("expected (word,group) but got " + text)
            word, group = inner.split(",", 1)
            g = self.action.parse_group(group)
        else:
            word, g = body, self.action.identity()
        word = word.strip()
        if word == EMPTY_WORD:
            word = ""
        for c in word:
            if c not in self.action.alphabet():
                raise ValueError("letter " + repr(c) + " not in alphabet")
        return SelfSimilarElement(word, g)
