"""Dense exact rational matrices.

Rank is computed by fraction-free integer elimination: rows are first scaled
to integers, and after every cross-multiplication step the updated row is
divided by its content (gcd).  Pivots are chosen as the first nonzero entry
in row-major order, so all results are deterministic.  Everything stays in
arbitrary-precision arithmetic; there is no floating point here.
"""

from fractions import Fraction
from math import gcd, lcm

from .scalars import format_scalar, parse_scalar


def _int_rows(rows):
    """Scale each row by the lcm of denominators; preserves the row space."""
    out = []
    for row in rows:
        mult = lcm(*(c.denominator for c in row)) if row else 1
        out.append([int(c * mult) for c in row])
    return out


def _normalize_int_row(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, abs(x))
            if g == 1:
                break
    if g > 1:
        return [x // g for x in row]
    return row


def _int_echelon(rows):
    """In-place fraction-free row echelon form; returns pivot column list."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        pc = prow[c]
        for i in range(r + 1, nrows):
            ric = rows[i][c]
            if ric:
                row = rows[i]
                rows[i] = _normalize_int_row(
                    [pc * x - ric * y for x, y in zip(row, prow)]
                )
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _reduce_against_echelon(vec, echelon, pivots):
    """Reduce a Fraction vector against an integer echelon; returns residual."""
    vec = list(vec)
    for row, c in zip(echelon, pivots):
        if vec[c]:
            factor = Fraction(vec[c], row[c])
            vec = [v - factor * x for v, x in zip(vec, row)]
    return vec


class ExactMatrix:
    """A rectangular matrix of exact rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [[Fraction(x) for x in row] for row in rows]
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("rows have unequal lengths")
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(map(list, zip(*self.rows)))) if self.rows else ExactMatrix([])

    def with_row(self, vec) -> "ExactMatrix":
        if self.rows and len(vec) != self.ncols:
            raise ValueError("row length mismatch")
        return ExactMatrix(self.rows + [list(vec)])

    def rank(self) -> int:
        if not self.rows or not self.rows[0]:
            return 0
        work = _int_rows(self.rows)
        return len(_int_echelon(work))

    def in_row_space(self, vec) -> bool:
        vec = [Fraction(x) for x in vec]
        if len(vec) != self.ncols:
            raise ValueError(f"vector length {len(vec)} != {self.ncols} columns")
        work = _int_rows(self.rows)
        pivots = _int_echelon(work)
        echelon = work[: len(pivots)]
        residual = _reduce_against_echelon(vec, echelon, pivots)
        return not any(residual)

    def rank_mod_p(self, p: int) -> int:
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        reduced = []
        for row in self.rows:
            out = []
            for x in row:
                if x.denominator % p == 0:
                    raise ValueError(
                        f"denominator of {format_scalar(x)} vanishes mod {p}"
                    )
                out.append(x.numerator * pow(x.denominator, -1, p) % p)
            reduced.append(out)
        rank = 0
        ncols = self.ncols
        r = 0
        for c in range(ncols):
            pivot = None
            for i in range(r, len(reduced)):
                if reduced[i][c]:
                    pivot = i
                    break
            if pivot is None:
                continue
            reduced[r], reduced[pivot] = reduced[pivot], reduced[r]
            inv = pow(reduced[r][c], -1, p)
            prow = [x * inv % p for x in reduced[r]]
            reduced[r] = prow
            for i in range(r + 1, len(reduced)):
                f = reduced[i][c]
                if f:
                    reduced[i] = [(x - f * y) % p for x, y in zip(reduced[i], prow)]
            rank += 1
            r += 1
            if r == len(reduced):
                break
        return rank

    def rref(self):
        """Reduced row echelon form over the rationals.

        Returns (rows, pivot_columns); zero rows are dropped.
        """
        rows = [list(r) for r in self.rows]
        nrows, ncols = len(rows), self.ncols
        pivots = []
        r = 0
        for c in range(ncols):
            pivot = None
            for i in range(r, nrows):
                if rows[i][c]:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = Fraction(1) / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return rows[:r], pivots

    def left_kernel(self) -> "ExactMatrix":
        """A canonical (RREF) basis of {x : x M = 0}, as rows."""
        if not self.rows:
            return ExactMatrix([])
        rref_rows, pivots = self.transpose().rref()
        n = self.nrows
        pivot_set = set(pivots)
        basis = []
        for j in range(n):
            if j in pivot_set:
                continue
            vec = [Fraction(0)] * n
            vec[j] = Fraction(1)
            for prow, pc in zip(rref_rows, pivots):
                vec[pc] = -prow[j]
            basis.append(vec)
        if not basis:
            return ExactMatrix([])
        canon, _ = ExactMatrix(basis).rref()
        return ExactMatrix(canon)

    def cell_diff(self, other: "ExactMatrix"):
        """All (row, col, self_value, other_value) triples that differ."""
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return [(-1, -1, f"{self.nrows}x{self.ncols}", f"{other.nrows}x{other.ncols}")]
        diffs = []
        for i, (ra, rb) in enumerate(zip(self.rows, other.rows)):
            for j, (a, b) in enumerate(zip(ra, rb)):
                if a != b:
                    diffs.append((i, j, format_scalar(a), format_scalar(b)))
        return diffs

    def to_json_obj(self):
        return [[format_scalar(x) for x in row] for row in self.rows]

    def to_csv(self) -> str:
        return "".join(",".join(format_scalar(x) for x in row) + "\n" for row in self.rows)

    @classmethod
    def from_strings(cls, rows) -> "ExactMatrix":
        return cls([[parse_scalar(x) for x in row] for row in rows])

    @classmethod
    def from_csv(cls, text: str) -> "ExactMatrix":
        rows = [line.split(",") for line in text.strip().splitlines() if line.strip()]
        return cls.from_strings(rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"
