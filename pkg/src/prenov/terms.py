"""Differential variables, operation-labeled binary trees and permutations.

A `DiffVar` is a symbol together with derivative orders under one derivation
(d) and optionally a second commuting one (dd).  A `Term` is a binary tree
whose internal nodes carry operation names from a fixed `OpSignature` and
whose leaves are differential variables.  Terms are immutable and totally
ordered: first by degree, then structurally (left subtree before right),
then by operation name, with leaves compared as (base, d_order, dd_order).
"""

import re
from dataclasses import dataclass

_VAR_RE = re.compile(
    r"^([A-Za-z_][A-Za-z0-9_]*)(?:('+)|\^\((\d+)(?:,(\d+))?\))?$"
)

PRETTY_OPS = {"mul": "·", "prec": "≺", "succ": "≻", "lprod": "⊢", "rprod": "⊣", "nov": "∘"}


@dataclass(frozen=True, order=True)
class DiffVar:
    """A differential variable x^(n) or, in bi-differential mode, x^(n,m)."""

    base: str
    d_order: int = 0
    dd_order: int = 0

    @property
    def weight(self) -> int:
        return self.d_order - 1

    def d(self) -> "DiffVar":
        return DiffVar(self.base, self.d_order + 1, self.dd_order)

    def dd(self) -> "DiffVar":
        return DiffVar(self.base, self.d_order, self.dd_order + 1)

    def __str__(self):
        if self.dd_order:
            return f"{self.base}^({self.d_order},{self.dd_order})"
        if self.d_order > 3:
            return f"{self.base}^({self.d_order})"
        return self.base + "'" * self.d_order


def parse_var(text: str) -> DiffVar:
    """Parse "b", "b''", "x^(4)" or "x^(1,2)" into a DiffVar."""
    m = _VAR_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a variable: {text!r}")
    base, primes, d_str, dd_str = m.groups()
    if primes:
        return DiffVar(base, len(primes))
    if d_str is not None:
        return DiffVar(base, int(d_str), int(dd_str) if dd_str else 0)
    return DiffVar(base)


@dataclass(frozen=True)
class OpSignature:
    """An ordered set of binary operation names."""

    ops: tuple[str, ...]

    def __post_init__(self):
        if not self.ops or len(set(self.ops)) != len(self.ops):
            raise ValueError("signature must be a nonempty list of distinct names")

    def __contains__(self, name):
        return name in self.ops

    def index(self, name: str) -> int:
        return self.ops.index(name)


SIG_MUL = OpSignature(("mul",))
SIG_PRENOV = OpSignature(("prec", "succ"))
SIG_DENDRIFORM = OpSignature(("lprod", "rprod"))


class Term:
    """An operation-labeled binary tree over differential variables."""

    __slots__ = ("op", "left", "right", "var", "_hash")

    def __init__(self, op, left, right, var):
        self.op = op
        self.left = left
        self.right = right
        self.var = var
        self._hash = None

    @classmethod
    def leaf(cls, var) -> "Term":
        if isinstance(var, str):
            var = parse_var(var)
        return cls(None, None, None, var)

    @classmethod
    def node(cls, op: str, left: "Term", right: "Term") -> "Term":
        if not isinstance(left, Term) or not isinstance(right, Term):
            raise TypeError("node children must be Terms")
        return cls(op, left, right, None)

    @property
    def is_leaf(self) -> bool:
        return self.op is None

    @property
    def degree(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.degree + self.right.degree

    @property
    def weight(self) -> int:
        return sum(v.weight for v in self.leaves())

    def leaves(self):
        if self.is_leaf:
            yield self.var
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()

    def ops_used(self):
        if not self.is_leaf:
            yield self.op
            yield from self.left.ops_used()
            yield from self.right.ops_used()

    def map_leaves(self, fn) -> "Term":
        """Rebuild the tree with every leaf variable replaced by fn(var)."""
        if self.is_leaf:
            return Term.leaf(fn(self.var))
        return Term.node(self.op, self.left.map_leaves(fn), self.right.map_leaves(fn))

    def sort_key(self):
        if self.is_leaf:
            v = self.var
            return (1, 0, (v.base, v.d_order, v.dd_order))
        return (self.degree, 1, self.left.sort_key(), self.right.sort_key(), self.op)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        if self.is_leaf:
            return other.is_leaf and self.var == other.var
        return (
            not other.is_leaf
            and self.op == other.op
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        if self._hash is None:
            if self.is_leaf:
                self._hash = hash(("leaf", self.var))
            else:
                self._hash = hash((self.op, self.left, self.right))
        return self._hash

    def __str__(self):
        if self.is_leaf:
            return str(self.var)
        return f"({self.op} {self.left} {self.right})"

    def __repr__(self):
        return f"Term({self})"

    def _pretty(self):
        if self.is_leaf:
            return str(self.var)
        sym = PRETTY_OPS.get(self.op, f" {self.op} ")
        return f"({self.left._pretty()}{sym}{self.right._pretty()})"

    def pretty(self) -> str:
        """Infix rendering with the outermost parentheses dropped."""
        s = self._pretty()
        if not self.is_leaf:
            s = s[1:-1]
        return s


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images.

    The product is read left to right: (s * t)(i) = t(s(i)), so that the
    term action `f^s` below satisfies (f^s)^t = f^(s*t).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(images)

    @staticmethod
    def all(n: int):
        import itertools

        return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(other(self(i)) for i in range(1, self.size + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def natural_variable_order(bases) -> list[str]:
    """Sort variable names so that x2 precedes x10."""
    return sorted(set(bases), key=lambda b: (len(b), b))


def check_multilinear(p, variables=None) -> list[str]:
    """Check each monomial of a LinComb over Terms uses each variable once.

    Returns the ordered variable list; raises ValueError otherwise.
    """
    bases = set()
    for t in p.support():
        for v in t.leaves():
            bases.add(v.base)
    if variables is None:
        variables = natural_variable_order(bases)
    expected = sorted(variables)
    for t in p.support():
        seen = sorted(v.base for v in t.leaves())
        if seen != expected:
            raise ValueError(
                f"not multilinear in {variables}: monomial {t} uses {seen}"
            )
    return list(variables)


def apply_permutation(p, sigma: Permutation, variables=None):
    """Right action of a permutation on a multilinear polynomial.

    Substitutes x_{sigma(i)} for x_i in every monomial; with the left-to-right
    product on permutations this satisfies (f^s)^t = f^(s*t).
    """
    variables = check_multilinear(p, variables)
    if len(variables) != sigma.size:
        raise ValueError(
            f"permutation size {sigma.size} does not match {len(variables)} variables"
        )
    index = {b: i + 1 for i, b in enumerate(variables)}
    mapping = {b: variables[sigma(index[b]) - 1] for b in variables}

    def rename(v: DiffVar) -> DiffVar:
        return DiffVar(mapping[v.base], v.d_order, v.dd_order)

    return p.map_basis(lambda t: type(p).single(t.map_leaves(rename)))
