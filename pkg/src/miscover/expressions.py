"""Expressions built from 1s with + and *, plus a parser and printer.

Grammar (whitespace ignored):

    expr   := term ('+' expr)?
    term   := factor ('*'? term)?          juxtaposition multiplies
    factor := '1' | '(' expr ')'

Both operators parse right-associatively, products bind tighter than
sums, and juxtaposed factors such as ``(1+1)(1+1+1)`` multiply.  The
printer emits '+' and juxtaposition only; '*' is accepted on input but
never produced.  Printing then re-parsing reproduces the tree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

ONE = "one"
SUM = "sum"
PRODUCT = "product"


@dataclass(frozen=True)
class Expression:
    """Binary tree of 1-leaves with cached value and leaf count.

    Build through one()/add()/mul() so value and ones stay consistent.
    """

    kind: str
    left: "Expression | None"
    right: "Expression | None"
    value: int
    ones: int


_ONE = Expression(ONE, None, None, 1, 1)


def one() -> Expression:
    return _ONE


def add(a: Expression, b: Expression) -> Expression:
    return Expression(SUM, a, b, a.value + b.value, a.ones + b.ones)


def mul(a: Expression, b: Expression) -> Expression:
    return Expression(PRODUCT, a, b, a.value * b.value, a.ones + b.ones)


class ExpressionSyntaxError(ValueError):
    """Malformed expression text; ``position`` is the 0-based offset."""

    def __init__(self, position: int, message: str):
        super().__init__(f"position {position}: {message}")
        self.position = position


def parse_expression(text: str) -> Expression:
    """Parse expression text; only the digit '1' is a valid literal."""
    tokens: list[tuple[str, int]] = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch in "1+*()":
            tokens.append((ch, pos))
        elif ch.isdigit():
            raise ExpressionSyntaxError(pos, f"digit {ch!r} is not allowed, only '1'")
        else:
            raise ExpressionSyntaxError(pos, f"unexpected character {ch!r}")

    idx = 0

    def peek() -> str | None:
        return tokens[idx][0] if idx < len(tokens) else None

    def error_pos() -> int:
        return tokens[idx][1] if idx < len(tokens) else len(text)

    def parse_expr() -> Expression:
        nonlocal idx
        node = parse_term()
        if peek() == "+":
            idx += 1
            return add(node, parse_expr())
        return node

    def parse_term() -> Expression:
        nonlocal idx
        node = parse_factor()
        nxt = peek()
        if nxt == "*":
            idx += 1
            if peek() not in ("1", "("):
                raise ExpressionSyntaxError(error_pos(), "expected '1' or '(' after '*'")
            return mul(node, parse_term())
        if nxt in ("1", "("):
            return mul(node, parse_term())
        return node

    def parse_factor() -> Expression:
        nonlocal idx
        tok = peek()
        if tok == "1":
            idx += 1
            return one()
        if tok == "(":
            idx += 1
            node = parse_expr()
            if peek() != ")":
                raise ExpressionSyntaxError(error_pos(), "expected ')'")
            idx += 1
            return node
        raise ExpressionSyntaxError(error_pos(), "expected '1' or '('")

    if not tokens:
        raise ExpressionSyntaxError(0, "empty expression")
    result = parse_expr()
    if idx < len(tokens):
        raise ExpressionSyntaxError(error_pos(), f"unexpected {tokens[idx][0]!r}")
    return result


def format_expression(e: Expression) -> str:
    """Minimal-parenthesization rendering; parse(format(e)) == e.

    Products juxtapose their operands.  Parentheses appear exactly where
    the right-associative grammar would otherwise regroup: around sums
    inside products, and around left children that repeat the parent
    operator.
    """
    if e.kind == ONE:
        return "1"
    left, right = e.left, e.right
    if e.kind == SUM:
        ls = format_expression(left)
        if left.kind == SUM:
            ls = f"({ls})"
        return f"{ls}+{format_expression(right)}"
    ls = format_expression(left)
    if left.kind != ONE:
        ls = f"({ls})"
    rs = format_expression(right)
    if right.kind == SUM:
        rs = f"({rs})"
    return ls + rs
