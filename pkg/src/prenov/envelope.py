"""Differential associative envelope of an arbitrary nonassociative algebra.

Given structure constants nu on a basis B, the free associative algebra on
the derived letters B^(omega) is rewritten by the rules

    a^(n) b  ->  - sum_{s>=1} C(n-1,s) (a^(n-s) b^(s) + b^(s) a^(n-s))
                 - b a^(n) + nu(a,b)^(n-1),        a, b in B, n >= 1,

all of which are formal derivatives of a'b + ba' - nu(a,b).  Their leading
words a^(n)b (derived letter followed by a naked one) admit no inclusion or
intersection compositions, so the system is a Gröbner-Shirshov basis and
normal forms are unique: the original algebra sits inside the quotient via
nu(u,v) = d(u)v + v d(u).
"""

import json
from fractions import Fraction
from math import comb

from .lincomb import LinComb
from .scalars import parse_scalar
from .terms import DiffVar


class AWord:
    """A word in the free associative algebra over derived letters."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters):
        letters = tuple(letters)
        if not all(isinstance(v, DiffVar) for v in letters):
            raise TypeError("AWord letters must be DiffVars")
        self.letters = letters
        self._hash = hash(("aw", letters))

    def __len__(self):
        return len(self.letters)

    def sort_key(self):
        # deg-lex with letters compared as (order, base)
        return (len(self.letters), tuple((v.d_order, v.base) for v in self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return isinstance(other, AWord) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " ".join(str(v) for v in self.letters)

    def __repr__(self):
        return f"AWord({self})"


class MaxOrderExceeded(Exception):
    """Reduction hit a derivative order with no rule; raise max_order."""


class StructureAlgebra:
    """An arbitrary nonassociative algebra: ordered basis plus the
    multiplication table nu(a,b) as rational combinations of basis symbols."""

    def __init__(self, basis, nu):
        self.basis = list(basis)
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("basis symbols must be distinct")
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.nu = {}
        for (a, b), val in nu.items():
            if a not in self.index or b not in self.index:
                raise ValueError(f"nu({a},{b}) uses symbols outside the basis")
            self.nu[(a, b)] = {
                sym: Fraction(c) for sym, c in val.items() if Fraction(c)
            }
            for sym in self.nu[(a, b)]:
                if sym not in self.index:
                    raise ValueError(f"nu({a},{b}) maps outside the basis: {sym}")

    @classmethod
    def from_json_obj(cls, obj) -> "StructureAlgebra":
        basis = obj["basis"]
        nu = {}
        for key, val in obj.get("nu", {}).items():
            a, _, b = key.partition(",")
            nu[(a.strip(), b.strip())] = {
                sym: parse_scalar(c) for sym, c in val.items()
            }
        return cls(basis, nu)

    @classmethod
    def from_json(cls, text: str) -> "StructureAlgebra":
        return cls.from_json_obj(json.loads(text))

    def nu_word(self, a: str, b: str, order: int = 0) -> LinComb:
        """nu(a,b) as a combination of single-letter words of the given
        derivative order."""
        out = LinComb.zero()
        for sym, c in self.nu.get((a, b), {}).items():
            out = out + LinComb.single(AWord((DiffVar(sym, order),)), c)
        return out

    def letter_key(self, v: DiffVar):
        return (v.d_order, self.index[v.base])

    def word_key(self, w: AWord):
        return (len(w.letters), tuple(self.letter_key(v) for v in w.letters))


class RuleSystem:
    """The rewriting rules of the envelope, up to a derivative-order bound."""

    def __init__(self, alg: StructureAlgebra, max_order: int):
        if max_order < 1:
            raise ValueError("max_order must be at least 1")
        self.alg = alg
        self.max_order = max_order
        self.rules = {}
        for a in alg.basis:
            for b in alg.basis:
                for n in range(1, max_order + 1):
                    self.rules[(a, b, n)] = self._make_rule(a, b, n)

    def _make_rule(self, a: str, b: str, n: int):
        lead = AWord((DiffVar(a, n), DiffVar(b)))
        rhs = LinComb.zero()
        for s in range(1, n):
            coeff = comb(n - 1, s)
            rhs = rhs - LinComb.single(AWord((DiffVar(a, n - s), DiffVar(b, s))), coeff)
            rhs = rhs - LinComb.single(AWord((DiffVar(b, s), DiffVar(a, n - s))), coeff)
        rhs = rhs - LinComb.single(AWord((DiffVar(b), DiffVar(a, n))))
        rhs = rhs + self.alg.nu_word(a, b, n - 1)
        return lead, rhs

    def rule_polynomial(self, a: str, b: str, n: int) -> LinComb:
        """The rule as the polynomial lead - rhs (a relation equal to zero)."""
        lead, rhs = self.rules[(a, b, n)]
        return LinComb.single(lead) - rhs

    def leading_words(self):
        return [lead for lead, _ in self.rules.values()]

    def check_leading_words(self):
        """Mechanically confirm each designated leading word is the strict
        deg-lex maximum of its rule polynomial."""
        bad = []
        for key in self.rules:
            poly = self.rule_polynomial(*key)
            lead = self.rules[key][0]
            top = max(poly.support(), key=self.alg.word_key)
            if top != lead:
                bad.append((key, lead, top))
        return bad

    def find_redex(self, word: AWord):
        """Position of the first subword a^(n) b with n >= 1 and b naked."""
        for i in range(len(word.letters) - 1):
            u, v = word.letters[i], word.letters[i + 1]
            if u.d_order >= 1 and v.d_order == 0:
                if u.d_order > self.max_order:
                    raise MaxOrderExceeded(
                        f"word {word} needs rules of order {u.d_order}; "
                        f"rebuild with max_order >= {u.d_order}"
                    )
                return i
        return None

    def reduce_once(self, word: AWord, i: int) -> LinComb:
        u, v = word.letters[i], word.letters[i + 1]
        _, rhs = self.rules[(u.base, v.base, u.d_order)]
        prefix = word.letters[:i]
        suffix = word.letters[i + 2 :]
        return LinComb(
            [(AWord(prefix + w.letters + suffix), c) for w, c in rhs.items()]
        )


def build_rules(alg: StructureAlgebra, max_order: int) -> RuleSystem:
    return RuleSystem(alg, max_order)


def a_normalize(p: LinComb, rules: RuleSystem) -> LinComb:
    """Fixed point of the rewriting; contains no leading word as a subword."""
    work = list(p.items())
    out = LinComb.zero()
    while work:
        word, coeff = work.pop()
        i = rules.find_redex(word)
        if i is None:
            out = out + LinComb.single(word, coeff)
        else:
            replaced = rules.reduce_once(word, i)
            work.extend((w, c * coeff) for w, c in replaced.items())
    return out


def a_d(p: LinComb) -> LinComb:
    """Formal derivation of the free associative algebra (Leibniz rule)."""
    out = LinComb.zero()
    for w, c in p.items():
        for i, letter in enumerate(w.letters):
            letters = w.letters[:i] + (letter.d(),) + w.letters[i + 1 :]
            out = out + LinComb.single(AWord(letters), c)
    return out


def composition_check(rules_or_words) -> list:
    """Scan all pairs of leading words for intersection and inclusion
    compositions.  Empty result = the rewriting system is a
    Gröbner-Shirshov basis (all s-polynomials are trivially absent)."""
    if isinstance(rules_or_words, RuleSystem):
        words = rules_or_words.leading_words()
    else:
        words = list(rules_or_words)
    findings = []
    for w1 in words:
        for w2 in words:
            l1, l2 = w1.letters, w2.letters
            # proper overlap: a suffix of w1 equals a prefix of w2
            for k in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - k :] == l2[:k]:
                    findings.append(("intersection", w1, w2, k))
            # inclusion of a strictly shorter word
            if len(l1) < len(l2):
                for i in range(len(l2) - len(l1) + 1):
                    if l2[i : i + len(l1)] == l1:
                        findings.append(("inclusion", w1, w2, i))
    return findings


def _random_element(alg: StructureAlgebra, rng) -> dict:
    return {b: Fraction(rng.randint(-3, 3)) for b in alg.basis}


def _element_word(vec: dict, order: int = 0) -> LinComb:
    return LinComb(
        [(AWord((DiffVar(b, order),)), c) for b, c in vec.items() if c]
    )


def _nu_of_elements(alg: StructureAlgebra, u: dict, v: dict) -> LinComb:
    out = LinComb.zero()
    for a, cu in u.items():
        if not cu:
            continue
        for b, cv in v.items():
            if not cv:
                continue
            out = out + alg.nu_word(a, b) * (cu * cv)
    return out


def _concat(u: LinComb, v: LinComb) -> LinComb:
    out = LinComb.zero()
    for wu, cu in u.items():
        for wv, cv in v.items():
            out = out + LinComb.single(AWord(wu.letters + wv.letters), cu * cv)
    return out


def verify_embedding(alg: StructureAlgebra, trials: int, max_order: int = 4, seed: int = 20240228) -> bool:
    """For random u, v in the span of the basis, check that
    d(u)v + v d(u) normalizes to nu(u, v), and that basis letters stay
    linearly independent (each is its own normal form)."""
    import random

    if trials < 1:
        raise ValueError("trials must be at least 1")
    rules = build_rules(alg, max_order)
    for b in alg.basis:
        single = LinComb.single(AWord((DiffVar(b),)))
        if a_normalize(single, rules) != single:
            return False
    rng = random.Random(seed)
    for _ in range(trials):
        u = _random_element(alg, rng)
        v = _random_element(alg, rng)
        du = _element_word(u, order=1)
        vv = _element_word(v)
        lhs = a_normalize(_concat(du, vv) + _concat(vv, du), rules)
        if lhs != _nu_of_elements(alg, u, v):
            return False
    return True
