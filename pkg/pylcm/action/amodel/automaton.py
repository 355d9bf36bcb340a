"""!
\file automaton.py Self-similar actions given by an invertible Mealy automaton
"""
import json
import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Hashable, List, Optional, Tuple

from pylcm.action.atype.abstractaction import AbstractSelfSimilarAction
from pylcm.errors import ResourceLimitError
from pylcm.monoid.mmodel.freemonoid import LETTERS

logger = logging.getLogger(__name__)

# a group element is a freely reduced word of (state, +1 | -1) letters
StateLetter = Tuple[str, int]
StateWord = Tuple[StateLetter, ...]

IDENTITY_STATE = "e"
KEY_CACHE_SIZE = 4096
FORBIDDEN_STATE_CHARS = set(".,;()[]*^ ")


def free_reduce(word: StateWord) -> StateWord:
    """!
    \brief cancel adjacent s s^-1 pairs and drop the identity state
    """
    stack: List[StateLetter] = []
    for state, sign in word:
        if state == IDENTITY_STATE:
            continue
        if stack and stack[-1][0] == state and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((state, sign))
    return tuple(stack)


class AutomatonAction(AbstractSelfSimilarAction):
    """!
    \brief The group generated by the states of an invertible automaton

    The transition table maps (state, letter) to (output letter, next
    state); the state named "e" must act as the identity. Group elements are
    reduced words in the states and their inverses. Equality is decided by
    comparing the action on all words of the configured depth, so results
    built on this backend are not certifying. Transport is found by a
    bounded search over the ball of the configured radius.
The action images used as keys sit in an LRU cache of key_cache_size
    entries.

    JSON layout:

    \code{.json}
    {"alphabet": 2,
     "states": ["e", "a"],
     "transitions": {"e": [[0, "e"], [1, "e"]],
                     "a": [[1, "e"], [0, "a"]]},
     "recurrent": true}
    \endcode
    """

    def __init__(
        self,
        alphabet_size: int,
        transitions: Dict[str, List[Tuple[int, str]]],
        depth: int = 6,
        transport_bound: int = 4,
        recurrent: bool = False,
        ceiling: int = 10 ** 6,
        label: str = "automaton",
        key_cache_size: int = KEY_CACHE_SIZE,
    ):
        if alphabet_size < 1 or alphabet_size > len(LETTERS):
            raise ValueError("unsupported alphabet size " + str(alphabet_size))
        self.letters = LETTERS[:alphabet_size]
        self.depth = depth
        self.transport_bound = transport_bound
        self.recurrent = recurrent
        self.ceiling = ceiling
        self.label = label
        self.forward: Dict[str, Dict[str, Tuple[str, str]]] = {}
        self.backward: Dict[str, Dict[str, Tuple[str, str]]] = {}
        self._load_table(transitions)
        self._images = lru_cache(maxsize=key_cache_size)(self._action_images)
        self._balls: Dict[int, List[StateWord]] = {}
        super().__init__()

    @classmethod
    def from_json(
        cls,
        path: str,
        depth: int = 6,
        transport_bound: int = 4,
        ceiling: int = 10 ** 6,
    ) -> "AutomatonAction":
        """!
        \brief read an automaton from a JSON file

        \throws ValueError if the document is malformed
        """
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        for field in ("alphabet", "states", "transitions"):
            if field not in doc:
                raise ValueError("automaton file lacks field " + field)
        table = doc["transitions"]
        missing = set(doc["states"]) - set(table)
        if missing:
            raise ValueError(
                "states without transitions: " + ", ".join(sorted(missing))
            )
        return cls(
            alphabet_size=int(doc["alphabet"]),
            transitions={s: table[s] for s in doc["states"]},
            depth=depth,
            transport_bound=transport_bound,
            recurrent=bool(doc.get("recurrent", False)),
            ceiling=ceiling,
            label="automaton:" + path,
        )

    def _load_table(self, transitions: Dict[str, List[Tuple[int, str]]]):
        """"""
        if IDENTITY_STATE not in transitions:
            transitions = dict(transitions)
            transitions[IDENTITY_STATE] = [
                (i, IDENTITY_STATE) for i in range(len(self.letters))
            ]
        for state, row in transitions.items():
            if set(state) & FORBIDDEN_STATE_CHARS or not state:
                raise ValueError("invalid state name " + repr(state))
            if len(row) != len(self.letters):
                raise ValueError(
                    "state " + state + " needs one transition per letter"
                )
            fwd: Dict[str, Tuple[str, str]] = {}
            bwd: Dict[str, Tuple[str, str]] = {}
            for i, (out, nxt) in enumerate(row):
                if nxt not in transitions:
                    raise ValueError("unknown target state " + repr(nxt))
                x = self.letters[i]
                y = self.letters[int(out)]
                if y in bwd:
                    raise ValueError(
                        "state " + state + " does not permute the letters"
                    )
                fwd[x] = (y, nxt)
                bwd[y] = (x, nxt)
            self.forward[state] = fwd
            self.backward[state] = bwd
        for x in self.letters:
            if self.forward[IDENTITY_STATE][x] != (x, IDENTITY_STATE):
                raise ValueError("state e must act as the identity")

    def name(self) -> str:
        return self.label

    def alphabet(self) -> str:
        return self.letters

    def identity(self) -> StateWord:
        return ()

    def compose(self, g: StateWord, h: StateWord) -> StateWord:
        return free_reduce(g + h)

    def inverse(self, g: StateWord) -> StateWord:
        return tuple((s, -sign) for s, sign in reversed(g))

    def _act_state(self, letter: StateLetter, w: str) -> Tuple[str, StateWord]:
        state, sign = letter
        table = self.forward if sign > 0 else self.backward
        out = []
        for x in w:
            y, state = table[state][x]
            out.append(y)
        return "".join(out), free_reduce(((state, sign),))

    def act_restrict(self, g: StateWord, w: str) -> Tuple[str, StateWord]:
        # (s1 s2 ... sn)·w = s1·(s2·(...(sn·w)))
        current = w
        restriction: StateWord = ()
        for letter in reversed(g):
            current, r = self._act_state(letter, current)
            restriction = r + restriction
        return current, free_reduce(restriction)

    def key(self, g: StateWord) -> Hashable:
        return self._images(free_reduce(g))

    def _action_images(self, g: StateWord) -> Tuple[str, ...]:
        return tuple(
            self.act_restrict(g, "".join(w))[0]
            for w in product(self.letters, repeat=self.depth)
        )

    def eq(self, g: StateWord, h: StateWord) -> bool:
        return free_reduce(g) == free_reduce(h) or self.key(g) == self.key(h)

    def enumerate_group(self, bound: int) -> List[StateWord]:
        """!
        \brief distinct elements of word length at most bound, deduplicated
        by their action up to the comparison depth
        """
        if bound in self._balls:
            return self._balls[bound]
        generators = [
            (s, sign)
            for s in sorted(self.forward)
            if s != IDENTITY_STATE
            for sign in (1, -1)
        ]
        seen = {self.key(())}
        ball: List[StateWord] = [()]
        frontier: List[StateWord] = [()]
        for _ in range(bound):
            nxt: List[StateWord] = []
            for g in frontier:
                for letter in generators:
                    h = free_reduce(g + (letter,))
                    k = self.key(h)
                    if k in seen:
                        continue
                    seen.add(k)
                    ball.append(h)
                    nxt.append(h)
                    if len(ball) > self.ceiling:
                        raise ResourceLimitError(
                            limit=self.ceiling,
                            requested=len(ball),
                            what="group elements of " + self.label,
                        )
            frontier = nxt
        logger.debug(
            "group ball of radius %d has %d elements", bound, len(ball)
        )
        self._balls[bound] = ball
        return ball

    def transport(
        self, alpha: str, delta: str, k: StateWord
    ) -> Optional[StateWord]:
        if len(alpha) != len(delta):
            return None
        for j in self.enumerate_group(self.transport_bound):
            image, restriction = self.act_restrict(j, alpha)
            if image == delta and self.eq(restriction, k):
                return j
        logger.debug(
            "transport %s -> %s exhausted ball of radius %d",
            alpha,
            delta,
            self.transport_bound,
        )
        return None

    def format_group(self, g: StateWord) -> str:
        g = free_reduce(g)
        if not g:
            return IDENTITY_STATE
        return ".".join(s if sign > 0 else s + "^-1" for s, sign in g)

    def parse_group(self, text: str) -> StateWord:
        body = text.strip()
        if body in ("", IDENTITY_STATE):
            return ()
        word: List[StateLetter] = []
        for part in body.split("."):
            sign = 1
            if part.endswith("^-1"):
                part = part[: -len("^-1")]
                sign = -1
            if part not in self.forward:
                raise ValueError("unknown state " + repr(part))
            word.append((part, sign))
        return free_reduce(tuple(word))

    def is_recurrent(self) -> bool:
        return self.recurrent

    def is_certifying(self) -> bool:
        return False
