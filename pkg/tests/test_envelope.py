import json
from fractions import Fraction
from importlib import resources

import pytest

from prenov.envelope import (
    AWord,
    MaxOrderExceeded,
    StructureAlgebra,
    a_d,
    a_normalize,
    build_rules,
    composition_check,
    verify_embedding,
)
from prenov.lincomb import LinComb
from prenov.terms import DiffVar


def _bundled(name):
    text = resources.files("prenov.data").joinpath(f"envelope_{name}.json").read_text()
    return StructureAlgebra.from_json(text)


def _aw(*letters):
    return AWord(letters)


def _single(*letters):
    return LinComb.single(_aw(*letters))


def test_structure_algebra_parsing_and_validation():
    alg = _bundled("dim2")
    assert alg.basis == ["u", "v"]
    assert alg.nu[("u", "v")] == {"v": Fraction(1, 2)}
    with pytest.raises(ValueError):
        StructureAlgebra(["a", "a"], {})
    with pytest.raises(ValueError):
        StructureAlgebra(["a"], {("a", "b"): {"a": 1}})
    with pytest.raises(ValueError):
        StructureAlgebra(["a"], {("a", "a"): {"b": 1}})


def test_rule_shapes():
    alg = _bundled("dim1")
    rules = build_rules(alg, 3)
    lead, rhs = rules.rules[("e", "e", 1)]
    assert lead == _aw(DiffVar("e", 1), DiffVar("e"))
    assert rhs == -_single(DiffVar("e"), DiffVar("e", 1)) + _single(DiffVar("e"))
    lead2, rhs2 = rules.rules[("e", "e", 2)]
    assert lead2 == _aw(DiffVar("e", 2), DiffVar("e"))
    expected2 = (
        -_single(DiffVar("e", 1), DiffVar("e", 1)) * 2
        - _single(DiffVar("e"), DiffVar("e", 2))
        + _single(DiffVar("e", 1))
    )
    assert rhs2 == expected2


def test_leading_words_have_expected_shape():
    alg = _bundled("dim3")
    rules = build_rules(alg, 4)
    for lead in rules.leading_words():
        first, second = lead.letters
        assert first.d_order >= 1
        assert second.d_order == 0
    assert rules.check_leading_words() == []


def test_normalize_examples():
    alg = _bundled("dim2")
    rules = build_rules(alg, 4)
    u1, v0 = DiffVar("u", 1), DiffVar("v")
    p = _single(u1, v0) + _single(v0, u1)
    assert a_normalize(p, rules) == alg.nu_word("u", "v")
    single = _single(DiffVar("u"))
    assert a_normalize(single, rules) == single


def test_normalize_idempotent():
    import random

    alg = _bundled("dim2")
    rules = build_rules(alg, 4)
    rng = random.Random(61)
    letters = [DiffVar(b, n) for b in alg.basis for n in range(3)]
    for _ in range(40):
        word = AWord(rng.choice(letters) for _ in range(rng.randint(1, 4)))
        once = a_normalize(LinComb.single(word), rules)
        assert a_normalize(once, rules) == once
        for w in once.support():
            assert rules.find_redex(w) is None


def test_normalize_overflow_guard():
    alg = _bundled("dim1")
    rules = build_rules(alg, 2)
    bad = _single(DiffVar("e", 3), DiffVar("e"))
    with pytest.raises(MaxOrderExceeded):
        a_normalize(bad, rules)


def test_composition_check_empty_for_bundled():
    for name in ("dim1", "dim2", "dim3"):
        rules = build_rules(_bundled(name), 5)
        assert composition_check(rules) == []


def test_composition_check_single_rule():
    assert composition_check([_aw(DiffVar("a", 1), DiffVar("b"))]) == []


def test_composition_check_adversarial_overlap():
    words = [
        _aw(DiffVar("a", 1), DiffVar("b")),
        _aw(DiffVar("b"), DiffVar("a", 1)),
    ]
    findings = composition_check(words)
    assert findings
    assert any(kind == "intersection" for kind, *_ in findings)


def test_composition_check_inclusion():
    words = [
        _aw(DiffVar("a", 1)),
        _aw(DiffVar("b"), DiffVar("a", 1), DiffVar("c")),
    ]
    findings = composition_check(words)
    assert any(kind == "inclusion" for kind, *_ in findings)


def test_reduction_strictly_decreases_deglex():
    import random

    alg = _bundled("dim2")
    rules = build_rules(alg, 4)
    rng = random.Random(62)
    letters = [DiffVar(b, n) for b in alg.basis for n in range(3)]
    checked = 0
    for _ in range(60):
        word = AWord(rng.choice(letters) for _ in range(rng.randint(2, 4)))
        i = rules.find_redex(word)
        if i is None:
            continue
        replaced = rules.reduce_once(word, i)
        for w in replaced.support():
            assert alg.word_key(w) < alg.word_key(word)
        checked += 1
    assert checked > 10


def test_derivation_compatibility():
    alg = _bundled("dim2")
    max_order = 4
    rules = build_rules(alg, max_order)
    for (a, b, n) in list(rules.rules):
        if n < max_order:
            derived = a_d(rules.rule_polynomial(a, b, n))
            assert a_normalize(derived, rules).is_zero


def test_verify_embedding_bundled():
    assert verify_embedding(_bundled("dim1"), trials=10)
    assert verify_embedding(_bundled("dim2"), trials=25)
    assert verify_embedding(_bundled("dim3"), trials=25)


def test_embedding_detects_wrong_table():
    # deliberately inconsistent: normalization of d(u)v + v d(u) gives the
    # table value, so lying about nu must be caught
    alg = _bundled("dim1")
    broken = StructureAlgebra(["e"], {("e", "e"): {"e": Fraction(2)}})
    rules = build_rules(alg, 2)
    u1, e0 = DiffVar("e", 1), DiffVar("e")
    value = a_normalize(_single(u1, e0) + _single(e0, u1), rules)
    assert value != broken.nu_word("e", "e")


def test_json_errors():
    with pytest.raises((KeyError, ValueError, json.JSONDecodeError)):
        StructureAlgebra.from_json("{\"basis\": [\"a\"], \"nu\": {\"a,a\": {\"c\": \"1\"}}}")
