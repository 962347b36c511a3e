"""Multilinear-component calculus at low arity.

Degree-n monomials over the two derived operations are enumerated and
evaluated in a free differential algebra of the chosen variety; the row
space of the resulting coordinate matrix is the arity-n component of the
sub-operad those operations generate, and its left kernel is the space of
degree-n identities of the derived variety.
"""

import itertools
from dataclasses import dataclass
from math import comb, factorial

from . import novikov as nov
from . import zinbiel as zb
from .lincomb import LinComb
from .matrix import ExactMatrix
from .terms import DiffVar, Permutation, Term, apply_permutation

VARIETIES = ("com", "zinb", "nov")

MIN_ARITY, MAX_ARITY = 2, 4


class _ZinbEngine:
    name = "zinb"

    @staticmethod
    def leaf(v: DiffVar) -> LinComb:
        if v.dd_order:
            raise ValueError("Zinbiel realization has a single derivation")
        return LinComb.single(zb.ZWord((v,)))

    ops = {"mul": zb.z_mul, "prec": zb.z_prec, "succ": zb.z_succ}
    unary = {"d": zb.z_d}


class _ComEngine:
    name = "com"

    @staticmethod
    def leaf(v: DiffVar) -> LinComb:
        if v.dd_order:
            raise ValueError("commutative realization has a single derivation")
        return LinComb.single(nov.CMonomial((v,)))

    ops = {
        "mul": nov.c_mul,
        "nov": nov.nov_mul,
        "prec": lambda u, v: nov.c_mul(u, nov.c_d(v)),
        "succ": lambda u, v: nov.c_mul(nov.c_d(u), v),
    }
    unary = {"d": nov.c_d}


class _NovEngine:
    """Free differential Novikov algebra, realized inside the free
    bi-differential commutative algebra: the Novikov product is u * d(v)
    and the Novikov-level derivation is dd."""

    name = "nov"

    @staticmethod
    def leaf(v: DiffVar) -> LinComb:
        if v.dd_order:
            raise ValueError("use single-derivation leaves; dd is internal here")
        return LinComb.single(nov.CMonomial((DiffVar(v.base, 0, v.d_order),)))

    ops = {
        "mul": nov.c_mul,
        "nov": nov.nov_mul,
        "prec": nov.dnov_prec,
        "succ": nov.dnov_succ,
    }
    unary = {"d": nov.c_dd}


ENGINES = {"zinb": _ZinbEngine, "com": _ComEngine, "nov": _NovEngine}


def engine_for(variety: str):
    try:
        return ENGINES[variety]
    except KeyError:
        raise ValueError(f"unknown variety {variety!r}; pick one of {VARIETIES}") from None


def eval_term(t, variety: str) -> LinComb:
    """Evaluate a Term (or LinComb of Terms) in the free differential
    algebra of the given variety."""
    engine = engine_for(variety)
    if isinstance(t, Term):
        t = LinComb.single(t)
    out = LinComb.zero()
    for term, coeff in t.items():
        out = out + _eval(term, engine) * coeff
    return out


def _eval(t: Term, engine) -> LinComb:
    if t.is_leaf:
        return engine.leaf(t.var)
    fn = engine.ops.get(t.op)
    if fn is None:
        raise ValueError(f"variety {engine.name!r} cannot evaluate operation {t.op!r}")
    return fn(_eval(t.left, engine), _eval(t.right, engine))


def _tree_shapes(n: int):
    """Binary tree shapes with n leaves; a shape is None or a pair."""
    if n == 1:
        return [None]
    shapes = []
    for k in range(1, n):
        for left in _tree_shapes(k):
            for right in _tree_shapes(n - k):
                shapes.append((left, right))
    return shapes


def _label_shape(shape, labels, leaves):
    """Build a Term from a shape, a preorder op-label iterator and a leaf
    iterator."""
    if shape is None:
        return Term.leaf(next(leaves))
    op = next(labels)
    left = _label_shape(shape[0], labels, leaves)
    right = _label_shape(shape[1], labels, leaves)
    return Term.node(op, left, right)


def enumerate_monomials(n: int, op_names=("prec", "succ")) -> list:
    """All multilinear degree-n terms: tree shapes x op labelings x leaf
    permutations, in that (deterministic) order."""
    if not MIN_ARITY <= n <= MAX_ARITY:
        raise ValueError(f"arity must be between {MIN_ARITY} and {MAX_ARITY}, got {n}")
    variables = [DiffVar(f"x{i}") for i in range(1, n + 1)]
    out = []
    for shape in _tree_shapes(n):
        for labels in itertools.product(op_names, repeat=n - 1):
            for perm in itertools.permutations(variables):
                out.append(_label_shape(shape, iter(labels), iter(perm)))
    return out


@dataclass
class EvalResult:
    variety: str
    arity: int
    monomials: list
    basis: list
    matrix: ExactMatrix


def eval_matrix(variety: str, n: int) -> EvalResult:
    """Coordinate matrix of all degree-n monomials over the basis of
    differential-algebra elements they hit (assembled lazily, then sorted)."""
    monomials = enumerate_monomials(n)
    values = [eval_term(m, variety) for m in monomials]
    basis = sorted({b for val in values for b in val.support()})
    index = {b: j for j, b in enumerate(basis)}
    rows = []
    for val in values:
        row = [0] * len(basis)
        for b, c in val.items():
            row[index[b]] = c
        rows.append(row)
    return EvalResult(variety, n, monomials, basis, ExactMatrix(rows))


def relation_kernel(variety: str, n: int, result: EvalResult | None = None) -> list:
    """A canonical basis of the degree-n multilinear identities of the
    derived variety, as linear combinations of the enumerated monomials."""
    if result is None:
        result = eval_matrix(variety, n)
    kernel = result.matrix.left_kernel()
    out = []
    for row in kernel.rows:
        out.append(LinComb(zip(result.monomials, row)))
    return out


def verify_identity(identity, variety: str) -> bool:
    """True iff the identity evaluates to zero in the free differential
    algebra of the variety."""
    return eval_term(identity, variety).is_zero


def dim_zinb(n: int) -> int:
    return factorial(n)


def dim_nov(n: int) -> int:
    return comb(2 * n - 2, n - 1)


def dim_com(n: int) -> int:
    return 1


CLOSED_DIMS = {"zinb": dim_zinb, "nov": dim_nov, "com": dim_com}


def enumerated_dim(variety: str, n: int) -> int:
    if variety == "zinb":
        return len(zb.multilinear_zwords(n))
    if variety == "nov":
        return len(nov.nov_basis(n))
    if variety == "com":
        return len(nov.multilinear_cmonomials(n))
    raise ValueError(f"unknown variety {variety!r}")


def hadamard_dim(variety: str, n: int) -> int:
    """dim of the arity-n Hadamard-product component: dim Nov(n) x dim Var(n)."""
    if n < 1:
        raise ValueError("arity must be positive")
    return dim_nov(n) * CLOSED_DIMS[variety](n)


def white_vs_hadamard(variety: str, n: int, result: EvalResult | None = None) -> dict:
    """Compare the generated (white product) component dimension at arity n
    with the full Hadamard dimension."""
    if result is None:
        result = eval_matrix(variety, n)
    white = result.matrix.rank()
    hadamard = hadamard_dim(variety, n)
    return {"variety": variety, "arity": n, "white_dim": white, "hadamard_dim": hadamard, "equal": white == hadamard}


def kernel_is_symmetric(variety: str, n: int, result: EvalResult | None = None) -> bool:
    """Check the degree-n relation space is stable under the S_n action."""
    if result is None:
        result = eval_matrix(variety, n)
    kernel_elts = relation_kernel(variety, n, result)
    if not kernel_elts:
        return True
    index = {m: j for j, m in enumerate(result.monomials)}
    kernel_rows = []
    for elt in kernel_elts:
        row = [0] * len(result.monomials)
        for t, c in elt.items():
            row[index[t]] = c
        kernel_rows.append(row)
    kmat = ExactMatrix(kernel_rows)
    variables = [f"x{i}" for i in range(1, n + 1)]
    for sigma in Permutation.all(n):
        for elt in kernel_elts:
            moved = apply_permutation(elt, sigma, variables)
            row = [0] * len(result.monomials)
            for t, c in moved.items():
                if t not in index:
                    return False
                row[index[t]] = c
            if not kmat.in_row_space(row):
                return False
    return True
