"""Dendriform splitting, operation renaming and the Perm-tensor test.

`split` tracks the position of one marked variable through a multilinear
monomial and replaces each product by ⊣ or ⊢ accordingly; applied to the
defining identities of a variety it produces the identities of the split
(pre-) variety.  `rename_to_prenov` is the formal change of operations
x⊣y = x≺y, x⊢y = y≻x.  A Perm algebra tensored with a split algebra
carries a single product again; checking the original identities for that
product is an independent route to the split axioms.
"""

import itertools
from fractions import Fraction

from .lincomb import LinComb
from .matrix import ExactMatrix
from .terms import DiffVar, Permutation, Term, apply_permutation, check_multilinear
from .zinbiel import ZWord, z_mul, z_prec, z_succ
from . import operads


def split(f: LinComb, k: int) -> LinComb:
    """Split a multilinear polynomial over {mul} at the k-th variable.

    Leaves stay leaves; v·w becomes v⊣w, v⊢w or their sum according to
    whether the marked variable sits in v, in w, or in neither.
    """
    variables = check_multilinear(f)
    for t in f.support():
        for op in t.ops_used():
            if op != "mul":
                raise ValueError(f"split expects terms over 'mul', got {op!r}")
    if not 1 <= k <= len(variables):
        raise ValueError(f"k must be in 1..{len(variables)}, got {k}")
    marked = variables[k - 1]
    out = LinComb.zero()
    for t, c in f.items():
        out = out + _split_term(t, marked) * c
    return out


def _split_term(t: Term, marked: str) -> LinComb:
    if t.is_leaf:
        return LinComb.single(t)
    left = _split_term(t.left, marked)
    right = _split_term(t.right, marked)
    in_left = any(v.base == marked for v in t.left.leaves())
    in_right = any(v.base == marked for v in t.right.leaves())
    if in_left:
        return _combine("rprod", left, right)
    if in_right:
        return _combine("lprod", left, right)
    return _combine("rprod", left, right) + _combine("lprod", left, right)


def _combine(op: str, left: LinComb, right: LinComb) -> LinComb:
    out = LinComb.zero()
    for tl, cl in left.items():
        for tr, cr in right.items():
            out = out + LinComb.single(Term.node(op, tl, tr), cl * cr)
    return out


def split_all(f: LinComb) -> list:
    """f^[k] for every k."""
    n = len(check_multilinear(f))
    return [split(f, k) for k in range(1, n + 1)]


def _rename_term_to_prenov(t: Term) -> Term:
    if t.is_leaf:
        return t
    left = _rename_term_to_prenov(t.left)
    right = _rename_term_to_prenov(t.right)
    if t.op == "rprod":
        return Term.node("prec", left, right)
    if t.op == "lprod":
        return Term.node("succ", right, left)
    raise ValueError(f"expected lprod/rprod, got {t.op!r}")


def _rename_term_to_dendriform(t: Term) -> Term:
    if t.is_leaf:
        return t
    left = _rename_term_to_dendriform(t.left)
    right = _rename_term_to_dendriform(t.right)
    if t.op == "prec":
        return Term.node("rprod", left, right)
    if t.op == "succ":
        return Term.node("lprod", right, left)
    raise ValueError(f"expected prec/succ, got {t.op!r}")


def rename_to_prenov(p: LinComb) -> LinComb:
    """x⊣y -> x≺y (same operand order), x⊢y -> y≻x (swapped)."""
    return p.map_basis(lambda t: LinComb.single(_rename_term_to_prenov(t)))


def rename_to_dendriform(p: LinComb) -> LinComb:
    """Inverse of rename_to_prenov."""
    return p.map_basis(lambda t: LinComb.single(_rename_term_to_dendriform(t)))


def _closure_matrix(system, n, monomial_index):
    rows = []
    variables = [f"x{i}" for i in range(1, n + 1)]
    for elt in system:
        for sigma in Permutation.all(n):
            moved = apply_permutation(elt, sigma, variables)
            row = [Fraction(0)] * len(monomial_index)
            for t, c in moved.items():
                if t not in monomial_index:
                    raise ValueError(f"term {t} outside the multilinear space")
                row[monomial_index[t]] = c
            rows.append(row)
    return rows


def span_equal(system_a, system_b, n: int, op_names=("lprod", "rprod")) -> bool:
    """Do the S_n-closures of the two identity systems span the same
    subspace of the free multilinear space of arity n?"""
    for elt in itertools.chain(system_a, system_b):
        variables = check_multilinear(elt)
        if len(variables) != n:
            raise ValueError(f"element has arity {len(variables)}, expected {n}")
        for t in elt.support():
            for op in t.ops_used():
                if op not in op_names:
                    raise ValueError(f"operation {op!r} not in signature {op_names}")
    monomials = operads.enumerate_monomials(n, op_names)
    index = {m: j for j, m in enumerate(monomials)}
    rows_a = _closure_matrix(system_a, n, index)
    rows_b = _closure_matrix(system_b, n, index)
    if not rows_a and not rows_b:
        return True
    if not rows_a or not rows_b:
        return ExactMatrix(rows_a or rows_b).rank() == 0
    rank_a = ExactMatrix(rows_a).rank()
    rank_b = ExactMatrix(rows_b).rank()
    rank_ab = ExactMatrix(rows_a + rows_b).rank()
    return rank_a == rank_b == rank_ab


class PermAlgebra:
    """A finite-dimensional associative algebra with left commutativity
    x1 x2 x3 = x2 x1 x3, given by structure constants."""

    def __init__(self, constants):
        self.constants = [
            [[Fraction(c) for c in vec] for vec in row] for row in constants
        ]
        self.dimension = len(self.constants)
        for row in self.constants:
            if len(row) != self.dimension or any(len(v) != self.dimension for v in row):
                raise ValueError("structure constant cube has wrong shape")
        self._validate()

    def _validate(self):
        n = self.dimension
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    assoc_l = self._mul_vec(self.constants[i][j], self._unit(k))
                    assoc_r = self._mul_vec(self._unit(i), self.constants[j][k])
                    if assoc_l != assoc_r:
                        raise ValueError(f"not associative on basis triple ({i},{j},{k})")
                    left_comm = self._mul_vec(self.constants[j][i], self._unit(k))
                    if assoc_l != left_comm:
                        raise ValueError(f"not left-commutative on basis triple ({i},{j},{k})")

    def _unit(self, i):
        vec = [Fraction(0)] * self.dimension
        vec[i] = Fraction(1)
        return vec

    def _mul_vec(self, u, v):
        out = [Fraction(0)] * self.dimension
        for i, cu in enumerate(u):
            if not cu:
                continue
            for j, cv in enumerate(v):
                if not cv:
                    continue
                for k, c in enumerate(self.constants[i][j]):
                    out[k] += cu * cv * c
        return out

    def mul(self, i: int, j: int):
        """Product of basis elements as a coefficient vector."""
        return list(self.constants[i][j])


def perm_one() -> PermAlgebra:
    """One-dimensional: e·e = e."""
    return PermAlgebra([[[1]]])


def perm_two() -> PermAlgebra:
    """Two-dimensional with e_i e_j = e_j."""
    return PermAlgebra(
        [
            [[1, 0], [0, 1]],
            [[1, 0], [0, 1]],
        ]
    )


def _dendriform_lprod(u: LinComb, v: LinComb) -> LinComb:
    """u ⊢ v = v ≻ u = d(v)·u in the differential Zinbiel realization."""
    return z_succ(v, u)


def _dendriform_rprod(u: LinComb, v: LinComb) -> LinComb:
    """u ⊣ v = u ≺ v = u·d(v)."""
    return z_prec(u, v)


def perm_tensor_product(P: PermAlgebra, u: LinComb, v: LinComb) -> LinComb:
    """The single product on P⊗V:

        (p⊗x)(q⊗y) = pq ⊗ (x ⊢ y) + qp ⊗ (x ⊣ y)

    where elements of P⊗V are LinCombs over pairs (basis index, ZWord) and
    V is the differential Zinbiel realization of the split operations.
    """
    out = LinComb.zero()
    for (i, wu), cu in u.items():
        for (j, wv), cv in v.items():
            xu = LinComb.single(wu)
            xv = LinComb.single(wv)
            up = _dendriform_lprod(xu, xv)
            down = _dendriform_rprod(xu, xv)
            scale = cu * cv
            for k, c in enumerate(P.mul(i, j)):
                if c:
                    out = out + _tensor(k, up) * (c * scale)
            for k, c in enumerate(P.mul(j, i)):
                if c:
                    out = out + _tensor(k, down) * (c * scale)
    return out


def _tensor(k: int, value: LinComb) -> LinComb:
    return LinComb([((k, w), c) for w, c in value.items()])


def random_perm_tensor_element(P: PermAlgebra, rng) -> LinComb:
    """A small random element of P⊗V (fixed-seed rng supplied by caller)."""
    out = LinComb.zero()
    for _ in range(rng.randint(1, 2)):
        k = rng.randrange(P.dimension)
        letters = []
        for _ in range(rng.randint(1, 2)):
            base = rng.choice(("a", "b", "c"))
            letters.append(DiffVar(base, rng.randint(0, 2)))
        coeff = rng.choice((-2, -1, 1, 2))
        out = out + LinComb.single((k, ZWord(letters)), coeff)
    return out


def perm_tensor_novikov_check(P: PermAlgebra, trials: int, seed: int = 20240228, product=perm_tensor_product) -> bool:
    """Left symmetry and right commutativity for the P⊗V product on
    `trials` random triples."""
    import random

    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_perm_tensor_element(P, rng)
        y = random_perm_tensor_element(P, rng)
        z = random_perm_tensor_element(P, rng)
        xy_z = product(P, product(P, x, y), z)
        x_yz = product(P, x, product(P, y, z))
        yx_z = product(P, product(P, y, x), z)
        y_xz = product(P, y, product(P, x, z))
        if xy_z - x_yz - yx_z + y_xz:
            return False
        xz_y = product(P, product(P, x, z), y)
        if xy_z - xz_y:
            return False
    return True


def collapse_to_zinbiel(u: LinComb) -> LinComb:
    """Forget the 1-dimensional Perm factor: (0, w) -> w."""
    return LinComb([(w, c) for (_, w), c in u.items()])


def symmetrized_product(u: LinComb, v: LinComb) -> LinComb:
    """u ★ v = u·v + v·u, the shuffle product of the Zinbiel algebra."""
    return z_mul(u, v) + z_mul(v, u)
