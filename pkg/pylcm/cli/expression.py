"""!
\file expression.py Parse and evaluate expressions over S_P

Grammar:

    expr := term { "*" term }
    term := "v(" word ")" | "adj(" expr ")"
          | "[" word "," word "," word "]" | "e(" word ";" word ")"

A word is written in the element syntax of the monoid: letters or ε for
free monoids, (1,0) for grids and (w,g) for Zappa–Szép products. An empty
word is the identity.
"""
import logging
from typing import List, NamedTuple, Union

import lark

from pylcm.constructible.constructiblef.constructibleops import ConstructibleOps
from pylcm.constructible.ctype.constructibleset import ConstructibleSet
from pylcm.errors import ParseError
from pylcm.isg.isgf.tripleops import TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element

logger = logging.getLogger(__name__)

GRAMMAR = r"""
    start: expr

    expr: term ("*" term)*

    ?term: "v(" word ")"                      -> generator
         | "adj(" expr ")"                     -> adjoint
         | "[" word "," word "," word "]"      -> literal
         | "e(" word ";" word ")"              -> idempotent

    word: WORD?

    WORD: /\([^()]*\)|[^\s,;()\[\]*]+/

    %import common.WS
    %ignore WS
"""

_PARSER = lark.Lark(GRAMMAR, start="start", parser="lalr")


class Generator(NamedTuple):
    element: Element


class Adjoint(NamedTuple):
    expr: "Product"


class Literal(NamedTuple):
    p: Element
    q: Element
    r: Element


class Idempotent(NamedTuple):
    """!
    \brief e(p;q) stands for the projection onto Δ_p ∩ Δ^q
    """

    p: Element
    q: Element


class Product(NamedTuple):
    factors: List


Value = Union[Triple, ConstructibleSet]


class _ExpressionBuilder(lark.Transformer):
    """!
    \brief turn the parse tree into Product/Generator/... nodes, parsing
    words into monoid elements on the way
    """

    def __init__(self, monoid: AbstractLcmMonoid, source: str):
        super().__init__()
        self.monoid = monoid
        self.source = source

    def start(self, items):
        return items[0]

    def expr(self, items):
        return Product(list(items))

    def word(self, items):
        if not items:
            return self.monoid.identity()
        token = items[0]
        try:
            return self.monoid.parse_element(str(token))
        except ValueError as e:
            raise ParseError(str(e), token.start_pos, self.source)

    def generator(self, items):
        return Generator(items[0])

    def adjoint(self, items):
        return Adjoint(items[0])

    def literal(self, items):
        return Literal(*items)

    def idempotent(self, items):
        return Idempotent(*items)


def parse_expression(source: str, M: AbstractLcmMonoid) -> Product:
    """!
    \throws ParseError with the offset of the first offending character
    """
    try:
        tree = _PARSER.parse(source)
    except lark.exceptions.UnexpectedInput as e:
        pos = getattr(e, "pos_in_stream", None)
        if pos is None or pos < 0:
            pos = len(source)
        raise ParseError("unexpected input", pos, source) from None
    try:
        return _ExpressionBuilder(M, source).transform(tree)
    except lark.exceptions.VisitError as e:
        raise e.orig_exc from None


def _multiply(a: Value, b: Value) -> Value:
    if isinstance(a, ConstructibleSet) and isinstance(b, ConstructibleSet):
        return ConstructibleOps.intersect(a, b)
    if isinstance(a, ConstructibleSet):
        a = TripleOps.from_constructible(a)
    if isinstance(b, ConstructibleSet):
        b = TripleOps.from_constructible(b)
    return TripleOps.product(a, b)


def evaluate(node, M: AbstractLcmMonoid) -> Value:
    """!
    \brief value of a parsed expression

    Products of constructible sets intersect them; as soon as a triple is
    involved the sets are read as their idempotents.

    \throws InvalidTriple for a literal that is not a triple
    """
    if isinstance(node, Generator):
        return TripleOps.generator(M, node.element)
    if isinstance(node, Literal):
        return TripleOps.make_triple(M, node.p, node.q, node.r)
    if isinstance(node, Idempotent):
        return ConstructibleSet(M, node.p, node.q)
    if isinstance(node, Adjoint):
        inner = evaluate(node.expr, M)
        if isinstance(inner, ConstructibleSet):
            return inner
        return TripleOps.star(inner)
    if isinstance(node, Product):
        values = [evaluate(f, M) for f in node.factors]
        out = values[0]
        for v in values[1:]:
            out = _multiply(out, v)
        return out
    raise TypeError("not an expression node: " + repr(node))


def format_value(value: Value) -> str:
    """!
    \brief canonical text of a triple, or the text of a set
    """
    if isinstance(value, Triple):
        return str(TripleOps.canonical_form(value))
    return str(value)


def eval_expr(source: str, M: AbstractLcmMonoid) -> Value:
    """!
    \code{.py}

    >>> M = FreeMonoid(2)
    >>> format_value(eval_expr("v(0) * v(1)", M))
    >>> "[01,01,01]"
    >>> format_value(eval_expr("adj(v(0)) * v(0)", M))
    >>> "[ε,0,0]"

    \endcode

    \throws ParseError, InvalidTriple
    """
    value = evaluate(parse_expression(source, M), M)
    logger.debug("%s evaluates to %s", source, value)
    return value
