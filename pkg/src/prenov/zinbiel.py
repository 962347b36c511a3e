"""The free differential Zinbiel algebra on right-normed words.

A `ZWord` [x1 x2 ... xn] stands for x1·(x2·(...(x_{n-1}·xn)...)); these words
form a linear basis.  The product of two basis words is the half-shuffle

    [u]·[v] = sum over shuffles w of (u2..un) with v of [u1 w],

and `z_normalize` independently computes the same normal form by orienting
the Zinbiel identity (x·y)·z -> x·(y·z) + x·(z·y) as a rewrite rule.  The
two routes are kept separate on purpose so they can check each other.
"""

import itertools

from .lincomb import LinComb
from .terms import DiffVar, Term, parse_var


class ZWord:
    """A right-normed basis word of the free Zinbiel algebra."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters):
        letters = tuple(letters)
        if not letters:
            raise ValueError("ZWord needs at least one letter")
        if not all(isinstance(v, DiffVar) for v in letters):
            raise TypeError("ZWord letters must be DiffVars")
        self.letters = letters
        self._hash = hash(letters)

    def __len__(self):
        return len(self.letters)

    @property
    def weight(self) -> int:
        return sum(v.weight for v in self.letters)

    def sort_key(self):
        return (len(self.letters), tuple((v.base, v.d_order, v.dd_order) for v in self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return isinstance(other, ZWord) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "[" + " ".join(str(v) for v in self.letters) + "]"

    def __repr__(self):
        return f"ZWord({self})"


def zword(text: str) -> ZWord:
    """Build a ZWord from space-separated letters, e.g. "a b' b'"."""
    return ZWord(parse_var(tok) for tok in text.split())


def zw(text: str, coeff=1) -> LinComb:
    return LinComb.single(zword(text), coeff)


def shuffles(u, v):
    """All interleavings of the sequences u and v, preserving both orders."""
    if not u:
        yield tuple(v)
        return
    if not v:
        yield tuple(u)
        return
    for rest in shuffles(u[1:], v):
        yield (u[0],) + rest
    for rest in shuffles(u, v[1:]):
        yield (v[0],) + rest


def _word_mul(u: ZWord, v: ZWord) -> LinComb:
    head = u.letters[0]
    out = {}
    for tail in shuffles(u.letters[1:], v.letters):
        w = ZWord((head,) + tail)
        out[w] = out.get(w, 0) + 1
    return LinComb(out.items())


def z_mul(u: LinComb, v: LinComb) -> LinComb:
    """Half-shuffle product, extended bilinearly; result is in normal form."""
    out = LinComb.zero()
    for wu, cu in u.items():
        for wv, cv in v.items():
            out = out + _word_mul(wu, wv) * (cu * cv)
    return out


def z_d(p: LinComb) -> LinComb:
    """The derivation d: acts on a word letter by letter (Leibniz rule)."""
    out = LinComb.zero()
    for w, c in p.items():
        for i, letter in enumerate(w.letters):
            bumped = w.letters[:i] + (letter.d(),) + w.letters[i + 1 :]
            out = out + LinComb.single(ZWord(bumped), c)
    return out


def z_prec(u: LinComb, v: LinComb) -> LinComb:
    """u ≺ v = u · d(v)."""
    return z_mul(u, z_d(v))


def z_succ(u: LinComb, v: LinComb) -> LinComb:
    """u ≻ v = d(u) · v."""
    return z_mul(z_d(u), v)


def z_weight(p: LinComb):
    """Common weight of all words of p, or None if mixed (or p = 0)."""
    weights = {w.weight for w in p.support()}
    if len(weights) == 1:
        return weights.pop()
    return None


# --- rewriting-based normalization, kept independent of the shuffle route ---

def _redex_paths(t: Term):
    """Paths (tuples of 0/1) to subterms of shape (a·b)·c, in preorder."""
    out = []

    def walk(node, path):
        if node.is_leaf:
            return
        if not node.left.is_leaf:
            out.append(path)
        walk(node.left, path + (0,))
        walk(node.right, path + (1,))

    walk(t, ())
    return out


def _subterm(t: Term, path):
    for step in path:
        t = t.left if step == 0 else t.right
    return t


def _replace(t: Term, path, repl: Term) -> Term:
    if not path:
        return repl
    if path[0] == 0:
        return Term.node(t.op, _replace(t.left, path[1:], repl), t.right)
    return Term.node(t.op, t.left, _replace(t.right, path[1:], repl))


def _rewrite_at(t: Term, path):
    """One application of (a·b)·c -> a·(b·c) + a·(c·b) at the given path."""
    sub = _subterm(t, path)
    a, b, c = sub.left.left, sub.left.right, sub.right
    t1 = _replace(t, path, Term.node("mul", a, Term.node("mul", b, c)))
    t2 = _replace(t, path, Term.node("mul", a, Term.node("mul", c, b)))
    return t1, t2


STRATEGIES = ("leftmost-innermost", "leftmost-outermost", "rightmost-innermost", "rightmost-outermost")


def _pick_redex(paths, strategy, rng=None):
    if strategy == "random":
        return paths[rng.randrange(len(paths))]
    if strategy == "leftmost-innermost":
        return max(paths, key=lambda p: (len(p), [-s for s in p]))
    if strategy == "leftmost-outermost":
        return min(paths)
    if strategy == "rightmost-innermost":
        return max(paths)
    if strategy == "rightmost-outermost":
        return min(paths, key=lambda p: (len(p), [-s for s in p]))
    raise ValueError(f"unknown rewrite strategy {strategy!r}")


def _term_to_zword(t: Term) -> ZWord:
    letters = []
    node = t
    while not node.is_leaf:
        if not node.left.is_leaf:
            raise ValueError("term is not right-normed")
        letters.append(node.left.var)
        node = node.right
    letters.append(node.var)
    return ZWord(letters)


def z_normalize(t, strategy="leftmost-innermost", rng=None) -> LinComb:
    """Normal form of a Term (or LinComb of Terms) over the `mul` signature.

    Rewrites the Zinbiel identity left to right until no subterm has the
    shape (a·b)·c, then reads off the right-normed words.  The result does
    not depend on the strategy; that confluence is checked in the tests.
    """
    if isinstance(t, Term):
        t = LinComb.single(t)
    stack = [(term, coeff) for term, coeff in t.items()]
    for term, _ in stack:
        for op in term.ops_used():
            if op != "mul":
                raise ValueError(f"z_normalize expects terms over 'mul', got {op!r}")
    out = LinComb.zero()
    while stack:
        term, coeff = stack.pop()
        paths = _redex_paths(term)
        if not paths:
            out = out + LinComb.single(_term_to_zword(term), coeff)
            continue
        t1, t2 = _rewrite_at(term, _pick_redex(paths, strategy, rng))
        stack.append((t1, coeff))
        stack.append((t2, coeff))
    return out


def all_rewrite_normal_forms(t: Term, _memo=None) -> LinComb:
    """Normalize while exploring every redex choice; raises if orders disagree.

    Exponential; intended for small terms as a confluence oracle.
    """
    if _memo is None:
        _memo = {}
    if t in _memo:
        return _memo[t]
    paths = _redex_paths(t)
    if not paths:
        result = LinComb.single(_term_to_zword(t))
    else:
        outcomes = set()
        result = None
        for path in paths:
            t1, t2 = _rewrite_at(t, path)
            candidate = all_rewrite_normal_forms(t1, _memo) + all_rewrite_normal_forms(t2, _memo)
            outcomes.add(candidate.frozen())
            result = candidate
        if len(outcomes) != 1:
            raise AssertionError(f"rewriting is not confluent on {t}")
    _memo[t] = result
    return result


def z_eval_prenov(t) -> LinComb:
    """Evaluate a term over {prec, succ} with underived leaves in the
    free differential Zinbiel algebra."""
    if isinstance(t, Term):
        t = LinComb.single(t)
    out = LinComb.zero()
    for term, coeff in t.items():
        out = out + _eval_prenov_term(term) * coeff
    return out


def _eval_prenov_term(t: Term) -> LinComb:
    if t.is_leaf:
        if t.var.d_order or t.var.dd_order:
            raise ValueError(f"derived leaf {t.var} not allowed here")
        return LinComb.single(ZWord((t.var,)))
    left = _eval_prenov_term(t.left)
    right = _eval_prenov_term(t.right)
    if t.op == "prec":
        return z_prec(left, right)
    if t.op == "succ":
        return z_succ(left, right)
    raise ValueError(f"expected prec/succ, got {t.op!r}")


def multilinear_zwords(n: int) -> list:
    """All ZWords in x1..xn, one underived occurrence of each variable."""
    letters = [DiffVar(f"x{i}") for i in range(1, n + 1)]
    return sorted(ZWord(p) for p in itertools.permutations(letters))
