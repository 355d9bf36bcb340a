"""!
\file test_expression.py Tests of the expression language over S_P
"""
import unittest

from pylcm.cli.expression import (
    Adjoint,
    Generator,
    Product,
    eval_expr,
    format_value,
    parse_expression,
)
from pylcm.constructible.ctype.constructibleset import ConstructibleSet
from pylcm.errors import InvalidTriple, ParseError
from pylcm.isg.isgf.tripleops import TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.freemonoid import FreeMonoid
from pylcm.monoid.mmodel.gridmonoid import GridMonoid


class ExpressionTest(unittest.TestCase):
    """"""

    def setUp(self):
        self.M = FreeMonoid(2)

    def test_parse_tree(self):
        tree = parse_expression("adj(v(0)) * v(1)", self.M)
        self.assertEqual(
            tree,
            Product([Adjoint(Product([Generator("0")])), Generator("1")]),
        )

    def test_generators(self):
        self.assertEqual(format_value(eval_expr("v(0) * v(1)", self.M)), "[01,01,01]")
        self.assertEqual(format_value(eval_expr("v(01)", self.M)), "[01,01,01]")

    def test_adjoint(self):
        self.assertEqual(format_value(eval_expr("adj(v(0)) * v(0)", self.M)), "[ε,0,0]")
        self.assertEqual(format_value(eval_expr("adj(v(0))", self.M)), "[ε,0,ε]")

    def test_zero(self):
        value = eval_expr("adj(v(0)) * v(1)", self.M)
        self.assertTrue(value.is_zero())
        self.assertEqual(format_value(value), "0")

    def test_identity(self):
        self.assertEqual(eval_expr("v()", self.M), TripleOps.top(self.M))
        self.assertEqual(eval_expr("v(ε)", self.M), TripleOps.top(self.M))

    def test_whitespace(self):
        self.assertEqual(
            eval_expr("  v( 0 )*adj( v(1) ) ", self.M),
            eval_expr("v(0)*adj(v(1))", self.M),
        )

    def test_literal(self):
        self.assertEqual(eval_expr("[0,00,0]", self.M), Triple(self.M, "0", "00", "0"))

    def test_invalid_literal(self):
        with self.assertRaises(InvalidTriple) as ctx:
            eval_expr("[0,1,1]", self.M)
        self.assertEqual(ctx.exception.reason, "q not in Pp")

    def test_sets(self):
        value = eval_expr("e(0;1) * e(01;11)", self.M)
        self.assertIsInstance(value, ConstructibleSet)
        self.assertEqual(value, ConstructibleSet(self.M, "01", "11"))
        self.assertEqual(format_value(value), "e(01;11)")
        self.assertEqual(format_value(eval_expr("e(0;ε) * e(1;ε)", self.M)), "∅")

    def test_set_times_triple(self):
        value = eval_expr("e(0;ε) * v(0)", self.M)
        self.assertIsInstance(value, Triple)
        self.assertEqual(value, TripleOps.product(
            TripleOps.idempotent(self.M, "0", ""), TripleOps.generator(self.M, "0")
        ))

    def test_incomplete(self):
        with self.assertRaises(ParseError):
            eval_expr("v(0) *", self.M)
        with self.assertRaises(ParseError):
            eval_expr("", self.M)

    def test_bad_letter(self):
        with self.assertRaises(ParseError) as ctx:
            eval_expr("v(0) * v(2)", self.M)
        self.assertEqual(ctx.exception.position, 9)

    def test_unexpected_character(self):
        with self.assertRaises(ParseError) as ctx:
            eval_expr("w(0)", self.M)
        self.assertEqual(ctx.exception.position, 0)

    def test_round_trip(self):
        for s in TripleOps.enumerate_triples(self.M, 1):
            self.assertEqual(eval_expr(str(s), self.M), s)

    def test_grid(self):
        M = GridMonoid(2)
        value = eval_expr("v((1,0)) * v((0,1))", M)
        self.assertEqual(format_value(value), "[(1,1),(1,1),(1,1)]")


if __name__ == "__main__":
    unittest.main()
