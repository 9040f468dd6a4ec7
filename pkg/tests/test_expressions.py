import random

import pytest

from miscover import (
    ExpressionSyntaxError,
    add,
    format_expression,
    mul,
    one,
    parse_expression,
)


def test_parse_sum_of_products():
    e = parse_expression("(1+1+1)(1+1+1)+1")
    assert e.value == 10 and e.ones == 7


def test_parse_single_one():
    e = parse_expression("1")
    assert e.value == 1 and e.ones == 1


def test_parse_nested_product():
    e = parse_expression("(1+1)((1+1)(1+1)+1)")
    assert e.value == 10 and e.ones == 7


def test_explicit_star_and_whitespace():
    assert parse_expression("(1+1)*(1+1+1)").value == 6
    assert parse_expression("  ( 1 + 1 ) ( 1 + 1 + 1 )  ").value == 6
    assert parse_expression("(1+1)*(1+1+1)") == parse_expression("(1+1)(1+1+1)")


def test_format_examples():
    assert format_expression(one()) == "1"
    t = mul(add(one(), one()), add(one(), add(one(), one())))
    assert format_expression(t) == "(1+1)(1+1+1)"
    four = mul(add(one(), one()), add(one(), one()))
    fig = mul(add(one(), one()), add(four, one()))
    assert format_expression(fig) == "(1+1)((1+1)(1+1)+1)"


def test_cached_value_and_ones_consistency():
    e = mul(add(one(), one()), add(one(), mul(one(), one())))
    assert e.value == 2 * (1 + 1) and e.ones == 5
    assert e.left.ones + e.right.ones == e.ones


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("2", 0),
        ("1+2", 2),
        ("1+", 2),
        ("(1+1", 4),
        ("1)", 1),
        ("1+*1", 2),
        ("x", 0),
        ("()", 1),
    ],
)
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse_expression(text)
    assert exc.value.position == position


def random_tree(rng, ones):
    if ones == 1:
        return one()
    split = rng.randint(1, ones - 1)
    build = add if rng.random() < 0.5 else mul
    return build(random_tree(rng, split), random_tree(rng, ones - split))


def test_round_trip_on_random_trees():
    rng = random.Random(2024)
    for _ in range(10_000):
        t = random_tree(rng, rng.randint(1, 30))
        assert parse_expression(format_expression(t)) == t


def all_trees(n):
    if n == 1:
        yield one()
        return
    for k in range(1, n):
        for left in all_trees(k):
            for right in all_trees(n - k):
                yield add(left, right)
                yield mul(left, right)


def test_round_trip_exhaustive_small_trees():
    for n in range(1, 8):
        for t in all_trees(n):
            assert parse_expression(format_expression(t)) == t
