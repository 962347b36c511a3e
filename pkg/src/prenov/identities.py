"""The defining identity systems used throughout, built as linear
combinations of terms (always in the form LHS - RHS = 0)."""

from .lincomb import LinComb
from .terms import Term

X1, X2, X3 = (Term.leaf(f"x{i}") for i in (1, 2, 3))


def _n(op, a, b):
    return Term.node(op, a, b)


def _lc(*pairs):
    return LinComb([(t, c) for c, t in pairs])


def mul(a, b):
    return _n("mul", a, b)


def prec(a, b):
    return _n("prec", a, b)


def succ(a, b):
    return _n("succ", a, b)


def lp(a, b):  # x ⊢ y
    return _n("lprod", a, b)


def rp(a, b):  # x ⊣ y
    return _n("rprod", a, b)


def zinbiel_identity() -> LinComb:
    """(x1 x2) x3 - x1 (x2 x3) - x1 (x3 x2)."""
    return _lc((1, mul(mul(X1, X2), X3)), (-1, mul(X1, mul(X2, X3))), (-1, mul(X1, mul(X3, X2))))


def left_symmetry() -> LinComb:
    """(x1 x2) x3 - x1 (x2 x3) - (x2 x1) x3 + x2 (x1 x3)."""
    return _lc(
        (1, mul(mul(X1, X2), X3)),
        (-1, mul(X1, mul(X2, X3))),
        (-1, mul(mul(X2, X1), X3)),
        (1, mul(X2, mul(X1, X3))),
    )


def right_commutativity() -> LinComb:
    """(x1 x2) x3 - (x1 x3) x2."""
    return _lc((1, mul(mul(X1, X2), X3)), (-1, mul(mul(X1, X3), X2)))


def novikov_system() -> list:
    return [left_symmetry(), right_commutativity()]


def pre_associative_system() -> list:
    """The three splittings of associativity (dendriform algebra axioms)."""
    f1 = _lc(
        (1, rp(rp(X1, X2), X3)),
        (-1, rp(X1, rp(X2, X3))),
        (-1, rp(X1, lp(X2, X3))),
    )
    f2 = _lc((1, rp(lp(X1, X2), X3)), (-1, lp(X1, rp(X2, X3))))
    f3 = _lc(
        (1, lp(lp(X1, X2), X3)),
        (1, lp(rp(X1, X2), X3)),
        (-1, lp(X1, lp(X2, X3))),
    )
    return [f1, f2, f3]


def pre_novikov_dendriform_system() -> list:
    """The four pre-Novikov identities in the ⊢/⊣ presentation."""
    j1 = _lc((1, rp(rp(X1, X2), X3)), (-1, rp(rp(X1, X3), X2)))
    j2 = _lc(
        (1, rp(lp(X1, X2), X3)),
        (-1, lp(lp(X1, X3), X2)),
        (-1, lp(rp(X1, X3), X2)),
    )
    j3 = _lc(
        (1, rp(rp(X1, X2), X3)),
        (-1, rp(X1, rp(X2, X3))),
        (-1, rp(X1, lp(X2, X3))),
        (-1, rp(lp(X2, X1), X3)),
        (1, lp(X2, rp(X1, X3))),
    )
    j4 = _lc(
        (1, rp(lp(X1, X3), X2)),
        (-1, lp(X1, lp(X2, X3))),
        (-1, rp(lp(X2, X3), X1)),
        (1, lp(X2, lp(X1, X3))),
    )
    return [j1, j2, j3, j4]


def pre_novikov_system() -> list:
    """The four pre-Novikov identities in the ≺/≻ presentation."""
    i1 = _lc((1, prec(prec(X1, X2), X3)), (-1, prec(prec(X1, X3), X2)))
    i2 = _lc(
        (1, succ(X1, succ(X2, X3))),
        (-1, prec(succ(X1, X3), X2)),
        (1, succ(X1, prec(X3, X2))),
    )
    i3 = _lc(
        (1, succ(succ(X1, X2), X3)),
        (-1, succ(succ(X1, X3), X2)),
        (-1, prec(succ(X1, X3), X2)),
        (1, prec(succ(X1, X2), X3)),
    )
    i4 = _lc(
        (1, succ(prec(X1, X2), X3)),
        (-1, prec(X1, succ(X2, X3))),
        (-1, prec(X1, prec(X3, X2))),
        (-1, prec(succ(X1, X3), X2)),
        (1, prec(prec(X1, X3), X2)),
    )
    return [i1, i2, i3, i4]
