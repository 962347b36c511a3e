"""Sparse linear combinations with exact rational coefficients.

The basis elements may be Terms, ZWords, CMonomials or AWords; anything
hashable and totally ordered works.  Zero coefficients are never stored and
iteration always follows the canonical order of the basis, so equal values
print identically.
"""

from fractions import Fraction

from .scalars import format_scalar


class LinComb:
    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for basis, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                acc = data.get(basis)
                new = coeff if acc is None else acc + coeff
                if new:
                    data[basis] = new
                elif acc is not None:
                    del data[basis]
        self._terms = data

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def single(cls, basis, coeff=1) -> "LinComb":
        return cls([(basis, coeff)])

    def items(self):
        """Pairs (basis, coefficient) in canonical basis order."""
        return [(b, self._terms[b]) for b in sorted(self._terms)]

    def support(self):
        return list(self._terms)

    def coeff(self, basis) -> Fraction:
        return self._terms.get(basis, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        data = dict(self._terms)
        for basis, coeff in other._terms.items():
            new = data.get(basis, 0) + coeff
            if new:
                data[basis] = new
            else:
                data.pop(basis, None)
        out = LinComb.__new__(LinComb)
        out._terms = data
        return out

    def __neg__(self):
        out = LinComb.__new__(LinComb)
        out._terms = {b: -c for b, c in self._terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scale):
        scale = Fraction(scale)
        out = LinComb.__new__(LinComb)
        out._terms = {} if not scale else {b: c * scale for b, c in self._terms.items()}
        return out

    __rmul__ = __mul__

    def __truediv__(self, scale):
        return self * (Fraction(1) / Fraction(scale))

    def __eq__(self, other):
        return isinstance(other, LinComb) and self._terms == other._terms

    def __hash__(self):
        raise TypeError("LinComb is not hashable; use frozen() for set membership")

    def frozen(self):
        return tuple(self.items())

    def map_basis(self, fn) -> "LinComb":
        """Linear extension of a map from basis elements to LinCombs."""
        out = LinComb.zero()
        for basis, coeff in self._terms.items():
            out = out + fn(basis) * coeff
        return out

    def _format(self, render):
        if not self._terms:
            return "0"
        pieces = []
        for basis, coeff in self.items():
            body = render(basis)
            if coeff == 1:
                text = body
            elif coeff == -1:
                text = "-" + body
            else:
                sep = "" if body.startswith(("[", "(")) else " "
                text = f"{format_scalar(coeff)}{sep}{body}"
            pieces.append(text)
        out = pieces[0]
        for text in pieces[1:]:
            if text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out

    def __str__(self):
        return self._format(str)

    def pretty(self) -> str:
        return self._format(lambda b: b.pretty() if hasattr(b, "pretty") else str(b))

    def __repr__(self):
        return f"LinComb({self})"
