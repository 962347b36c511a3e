import random
from fractions import Fraction
from math import comb, factorial

import pytest

from prenov.identities import pre_novikov_system
from prenov.lincomb import LinComb
from prenov.terms import DiffVar, Term
from prenov.zinbiel import (
    ZWord,
    all_rewrite_normal_forms,
    multilinear_zwords,
    z_d,
    z_eval_prenov,
    z_mul,
    z_normalize,
    z_prec,
    z_succ,
    z_weight,
    zw,
    zword,
)

STRATEGIES = ("leftmost-innermost", "leftmost-outermost", "rightmost-innermost", "rightmost-outermost")


def _mul(a, b):
    return Term.node("mul", a, b)


def _leaf(name):
    return Term.leaf(name)


def _random_zlin(rng, letters=("a", "b"), max_len=3, max_order=2, terms=2):
    out = LinComb.zero()
    for _ in range(rng.randint(1, terms)):
        word = ZWord(
            DiffVar(rng.choice(letters), rng.randint(0, max_order))
            for _ in range(rng.randint(1, max_len))
        )
        out = out + LinComb.single(word, rng.choice((-2, -1, 1, 2)))
    return out


def _random_mul_term(rng, degree):
    leaves = [
        Term.leaf(DiffVar(rng.choice("ab"), rng.randint(0, 1))) for _ in range(degree)
    ]

    def tree(parts):
        if len(parts) == 1:
            return parts[0]
        k = rng.randint(1, len(parts) - 1)
        return _mul(tree(parts[:k]), tree(parts[k:]))

    return tree(leaves)


def test_z_mul_single_letters():
    assert z_mul(zw("x1"), zw("x2")) == zw("x1 x2")


def test_z_mul_zinbiel_identity_instance():
    assert z_mul(zw("x1 x2"), zw("x3")) == zw("x1 x2 x3") + zw("x1 x3 x2")


def test_z_mul_two_by_two():
    prod = z_mul(zw("x1 x2"), zw("x3 x4"))
    assert len(prod) == 3
    assert all(c == 1 for _, c in prod.items())
    assert all(w.letters[0] == DiffVar("x1") for w in prod.support())
    # cross-check against normalization of the corresponding term
    t = _mul(_mul(_leaf("x1"), _leaf("x2")), _mul(_leaf("x3"), _leaf("x4")))
    assert z_normalize(t) == prod


def test_shuffle_term_count():
    rng = random.Random(3)
    for n, m in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (4, 4)]:
        u = ZWord(DiffVar(f"u{i}") for i in range(n))
        v = ZWord(DiffVar(f"v{i}") for i in range(m))
        prod = z_mul(LinComb.single(u), LinComb.single(v))
        assert len(prod) == comb(n + m - 1, m)
        assert all(c == 1 for _, c in prod.items())
        assert all(w.letters[0] == u.letters[0] for w in prod.support())


def test_z_normalize_examples():
    assert z_normalize(_leaf("x1")) == zw("x1")
    t = _mul(_mul(_leaf("x1"), _leaf("x2")), _leaf("x3"))
    assert z_normalize(t) == zw("x1 x2 x3") + zw("x1 x3 x2")


def test_z_normalize_idempotent_on_right_normed():
    t = _mul(_leaf("x1"), _mul(_leaf("x2"), _leaf("x3")))
    assert z_normalize(t) == zw("x1 x2 x3")


def test_z_normalize_confluent_all_orders_degree_four():
    t = _mul(_mul(_mul(_leaf("x1"), _leaf("x2")), _leaf("x3")), _leaf("x4"))
    reference = all_rewrite_normal_forms(t)
    for strategy in STRATEGIES:
        assert z_normalize(t, strategy) == reference


def test_z_normalize_strategy_independent_random():
    rng = random.Random(5)
    for _ in range(100):
        t = _random_mul_term(rng, rng.randint(2, 6))
        results = {z_normalize(t, s).frozen() for s in STRATEGIES}
        results.add(z_normalize(t, "random", random.Random(99)).frozen())
        assert len(results) == 1


def test_z_normalize_matches_shuffle_route():
    rng = random.Random(6)
    for _ in range(100):
        t = _random_mul_term(rng, rng.randint(2, 5))

        def by_shuffle(node):
            if node.is_leaf:
                return LinComb.single(ZWord((node.var,)))
            return z_mul(by_shuffle(node.left), by_shuffle(node.right))

        assert z_normalize(t) == by_shuffle(t)


def test_zinbiel_identity_closure():
    rng = random.Random(8)
    for _ in range(100):
        f = _random_zlin(rng)
        g = _random_zlin(rng)
        h = _random_zlin(rng)
        assoc = z_mul(z_mul(f, g), h) - z_mul(f, z_mul(g, h)) - z_mul(f, z_mul(h, g))
        assert assoc.is_zero


def test_z_d_examples():
    assert z_d(zw("b")) == zw("b'")
    assert z_d(zw("b b'")) == zw("b' b'") + zw("b b''")


def test_z_d_leibniz():
    rng = random.Random(9)
    for _ in range(100):
        u = _random_zlin(rng)
        v = _random_zlin(rng)
        assert z_d(z_mul(u, v)) == z_mul(z_d(u), v) + z_mul(u, z_d(v))


def test_z_d_raises_weight_by_one():
    rng = random.Random(10)
    for _ in range(100):
        w = ZWord(DiffVar(rng.choice("ab"), rng.randint(0, 2)) for _ in range(rng.randint(1, 4)))
        p = LinComb.single(w)
        assert z_weight(z_d(p)) == z_weight(p) + 1


def test_derived_ops_examples():
    b = zw("b")
    assert z_prec(b, b) == zw("b b'")
    f = zw("b b'")
    a = zw("a")
    assert z_succ(a, z_prec(b, f)) == zw("a' b b' b'") + zw("a' b b b''")


def test_derived_ops_weight():
    rng = random.Random(12)
    for _ in range(100):
        u = _random_zlin(rng, terms=1)
        v = _random_zlin(rng, terms=1)
        wu, wv = z_weight(u), z_weight(v)
        res = z_prec(u, v)
        if res:
            assert z_weight(res) == wu + wv + 1


def test_z_weight_examples():
    assert z_weight(zw("a b' b' b'")) == -1
    assert z_weight(zw("x''")) == 1
    assert z_weight(zw("a") + zw("a'")) is None


def test_eval_prenov_examples():
    prec = lambda a, b: Term.node("prec", a, b)
    a, b = _leaf("a"), _leaf("b")
    assert z_eval_prenov(prec(a, b)) == zw("a b'")
    chain = LinComb.single(prec(prec(prec(a, b), b), b), Fraction(1, 3))
    assert z_eval_prenov(chain) == zw("a b' b' b'", 2)


def test_eval_prenov_rejects_derived_leaves():
    with pytest.raises(ValueError):
        z_eval_prenov(Term.node("prec", Term.leaf("a'"), _leaf("b")))


def test_eval_prenov_weight_minus_one():
    rng = random.Random(14)
    ops = ("prec", "succ")

    def random_term(degree):
        if degree == 1:
            return Term.leaf(DiffVar(rng.choice("abc")))
        k = rng.randint(1, degree - 1)
        return Term.node(rng.choice(ops), random_term(k), random_term(degree - k))

    for _ in range(100):
        value = z_eval_prenov(random_term(rng.randint(1, 4)))
        if value:
            assert z_weight(value) == -1


def test_pre_novikov_identities_evaluate_to_zero():
    for identity in pre_novikov_system():
        assert z_eval_prenov(identity).is_zero


def test_multilinear_basis_count():
    for n in range(1, 7):
        words = multilinear_zwords(n)
        assert len(words) == factorial(n)
        assert len(set(words)) == factorial(n)


def test_symmetrized_product_commutative_associative():
    rng = random.Random(15)

    def star(u, v):
        return z_mul(u, v) + z_mul(v, u)

    for _ in range(100):
        f = _random_zlin(rng, terms=1)
        g = _random_zlin(rng, terms=1)
        h = _random_zlin(rng, terms=1)
        assert star(f, g) == star(g, f)
        assert star(star(f, g), h) == star(f, star(g, h))


def test_zword_validation_and_printing():
    with pytest.raises(ValueError):
        ZWord([])
    assert str(zword("a b' b' b'")) == "[a b' b' b']"
    assert zword("a b'") == zword("a b'")
    assert zword("a b'") != zword("b' a")
