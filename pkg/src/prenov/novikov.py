"""The free differential commutative algebra and its Novikov structure.

A `CMonomial` is a multiset of differential variables.  With one derivation
d, the product a * d(b) makes the span of weight -1 multilinear monomials a
realization of the free Novikov algebra; with a second commuting derivation
dd, the derived operations of that Novikov algebra become computable too.
"""

from math import comb

from .lincomb import LinComb
from .terms import DiffVar, parse_var


class CMonomial:
    """A commutative monomial: letters stored sorted, multiset semantics."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters):
        letters = tuple(sorted(letters))
        if not all(isinstance(v, DiffVar) for v in letters):
            raise TypeError("CMonomial letters must be DiffVars")
        self.letters = letters
        self._hash = hash(letters)

    def __len__(self):
        return len(self.letters)

    @property
    def weight(self) -> int:
        """Weight in the d-grading: sum of (d_order - 1) over letters."""
        return sum(v.weight for v in self.letters)

    @property
    def dd_weight(self) -> int:
        return sum(v.dd_order - 1 for v in self.letters)

    def sort_key(self):
        return (len(self.letters), tuple((v.base, v.d_order, v.dd_order) for v in self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return isinstance(other, CMonomial) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " ".join(str(v) for v in self.letters)

    def __repr__(self):
        return f"CMonomial({self})"


def cmono(text: str) -> CMonomial:
    return CMonomial(parse_var(tok) for tok in text.split())


def cm(text: str, coeff=1) -> LinComb:
    return LinComb.single(cmono(text), coeff)


def c_mul(u: LinComb, v: LinComb) -> LinComb:
    """Free commutative product: bilinear multiset union."""
    out = LinComb.zero()
    for mu, cu in u.items():
        for mv, cv in v.items():
            out = out + LinComb.single(CMonomial(mu.letters + mv.letters), cu * cv)
    return out


def _leibniz(p: LinComb, bump) -> LinComb:
    out = LinComb.zero()
    for m, c in p.items():
        for i, letter in enumerate(m.letters):
            letters = m.letters[:i] + (bump(letter),) + m.letters[i + 1 :]
            out = out + LinComb.single(CMonomial(letters), c)
    return out


def c_d(p: LinComb) -> LinComb:
    """First derivation: raises d_order of one letter per summand."""
    return _leibniz(p, DiffVar.d)


def c_dd(p: LinComb) -> LinComb:
    """Second derivation, commuting with the first."""
    return _leibniz(p, DiffVar.dd)


def nov_mul(u: LinComb, v: LinComb) -> LinComb:
    """The product a * d(b); satisfies left symmetry and right commutativity."""
    return c_mul(u, c_d(v))


def nov_basis(n: int) -> list:
    """Multilinear monomials in x1..xn with derivative orders summing to n-1.

    These span the degree-n multilinear part of the free Novikov algebra;
    there are C(2n-2, n-1) of them.
    """
    if not 1 <= n <= 8:
        raise ValueError(f"n must be between 1 and 8, got {n}")
    basis = []
    for orders in _compositions(n - 1, n):
        letters = [DiffVar(f"x{i + 1}", orders[i]) for i in range(n)]
        basis.append(CMonomial(letters))
    assert len(basis) == comb(2 * n - 2, n - 1)
    return sorted(basis)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def dnov_prec(u: LinComb, v: LinComb) -> LinComb:
    """u ≺ v = u * d(dd(v)) in the bi-differential realization."""
    return nov_mul(u, c_dd(v))


def dnov_succ(u: LinComb, v: LinComb) -> LinComb:
    """u ≻ v = dd(u) * d(v) in the bi-differential realization."""
    return nov_mul(c_dd(u), v)


def dnov_ops(u: LinComb, v: LinComb):
    """The pair (u ≺ v, u ≻ v) of derived Novikov operations."""
    return dnov_prec(u, v), dnov_succ(u, v)


def verify_case1(k: int) -> bool:
    """Check the rewriting step that trades a k-th derivative on the left
    factor for a new product letter:

        dd^k(a) b = dd^(k-1)(a' b) - sum_{s>=1} C(k-1, s) dd^(k-s)(a) dd^s(b)

    with a' b the Novikov product of dd(a) and b, expanded in the
    bi-differential commutative realization.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    a = LinComb.single(CMonomial([DiffVar("a")]))
    b = LinComb.single(CMonomial([DiffVar("b")]))

    def dd_pow(p, m):
        for _ in range(m):
            p = c_dd(p)
        return p

    lhs = nov_mul(dd_pow(a, k), b)
    rhs = dd_pow(nov_mul(dd_pow(a, 1), b), k - 1)
    for s in range(1, k):
        rhs = rhs - nov_mul(dd_pow(a, k - s), dd_pow(b, s)) * comb(k - 1, s)
    return lhs == rhs


def c_weight(p: LinComb):
    """Common d-weight of all monomials, or None if mixed (or p = 0)."""
    weights = {m.weight for m in p.support()}
    if len(weights) == 1:
        return weights.pop()
    return None


def multilinear_cmonomials(n: int) -> list:
    """The single multilinear commutative monomial x1...xn (no derivatives)."""
    return [CMonomial(DiffVar(f"x{i}") for i in range(1, n + 1))]
