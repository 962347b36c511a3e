import random
from fractions import Fraction

import pytest

from prenov.lincomb import LinComb
from prenov.scalars import format_scalar, parse_scalar, scalar_arith
from prenov.terms import (
    DiffVar,
    Permutation,
    Term,
    apply_permutation,
    parse_var,
)


def test_scalar_arith_examples():
    assert scalar_arith(Fraction(1, 3), Fraction(2, 3), "+") == 1
    assert scalar_arith(Fraction(1, 2), Fraction(2, 3), "*") == Fraction(1, 3)
    with pytest.raises(ZeroDivisionError):
        scalar_arith(5, 0, "/")


def test_scalar_field_properties():
    rng = random.Random(1)

    def rand():
        return Fraction(rng.randint(-20, 20), rng.randint(1, 12))

    for _ in range(200):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if b:
            assert scalar_arith(a, b, "/") * b == a


def test_scalar_serialization_round_trip():
    for text in ("3/4", "-2", "0", "17/5", "-9/8"):
        assert format_scalar(parse_scalar(text)) == text
    assert format_scalar(Fraction(4, 8)) == "1/2"


def test_parse_var_forms():
    assert parse_var("b''") == DiffVar("b", 2)
    assert parse_var("x^(4)") == DiffVar("x", 4)
    assert parse_var("y^(1,2)") == DiffVar("y", 1, 2)
    assert str(DiffVar("b", 3)) == "b'''"
    assert str(DiffVar("b", 4)) == "b^(4)"
    assert str(DiffVar("y", 1, 2)) == "y^(1,2)"
    with pytest.raises(ValueError):
        parse_var("3x")


def test_diffvar_weight():
    assert DiffVar("a").weight == -1
    assert DiffVar("a", 1).weight == 0
    assert DiffVar("a", 3).weight == 2


def _mul(a, b):
    return Term.node("mul", a, b)


def _leaf(name):
    return Term.leaf(name)


def test_term_order_is_total_and_by_degree_first():
    x1, x2 = _leaf("x1"), _leaf("x2")
    terms = [_mul(x1, _mul(x1, x2)), x1, _mul(x1, x2), x2]
    ordered = sorted(terms)
    degrees = [t.degree for t in ordered]
    assert degrees == sorted(degrees)
    assert ordered[0] == x1 and ordered[1] == x2


def test_lincomb_cancellation_and_order():
    x1, x2 = _leaf("x1"), _leaf("x2")
    p = LinComb([(x1, 1), (x2, 2)]) + LinComb([(x1, -1)])
    assert p == LinComb.single(x2, 2)
    assert (p - p).is_zero
    assert str(LinComb.zero()) == "0"


def test_lincomb_scalar_action():
    x1 = _leaf("x1")
    p = LinComb.single(x1, Fraction(1, 3))
    assert 3 * p == LinComb.single(x1)
    assert (p * 0).is_zero


def test_apply_permutation_examples():
    x1, x2, x3 = (_leaf(f"x{i}") for i in (1, 2, 3))
    p = LinComb.single(_mul(_mul(x1, x2), x3))
    swap = Permutation([2, 1, 3])
    moved = apply_permutation(p, swap)
    assert moved == LinComb.single(_mul(_mul(x2, x1), x3))
    ident = Permutation.identity(3)
    assert apply_permutation(p, ident) == p
    twice = apply_permutation(apply_permutation(p, swap), swap)
    assert twice == p


def test_apply_permutation_rejects_non_multilinear():
    x1 = _leaf("x1")
    with pytest.raises(ValueError):
        apply_permutation(LinComb.single(_mul(x1, x1)), Permutation.identity(1))


def _random_multilinear(rng, n):
    variables = [_leaf(f"x{i}") for i in range(1, n + 1)]

    def tree(leaves):
        if len(leaves) == 1:
            return leaves[0]
        k = rng.randint(1, len(leaves) - 1)
        return _mul(tree(leaves[:k]), tree(leaves[k:]))

    out = LinComb.zero()
    for _ in range(rng.randint(1, 3)):
        perm = list(variables)
        rng.shuffle(perm)
        out = out + LinComb.single(tree(perm), rng.choice((-2, -1, 1, 2)))
    return out


def test_permutation_right_action_property():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(2, 4)
        f = _random_multilinear(rng, n)
        if f.is_zero:
            continue
        perms = Permutation.all(n)
        s, t = rng.choice(perms), rng.choice(perms)
        variables = [f"x{i}" for i in range(1, n + 1)]
        lhs = apply_permutation(f, s * t, variables)
        rhs = apply_permutation(apply_permutation(f, s, variables), t, variables)
        assert lhs == rhs


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])
    assert Permutation([2, 3, 1]).inverse() == Permutation([3, 1, 2])
