"""The non-embeddability pipeline.

Inside the free differential Zinbiel algebra on {a, b}, the element
f = b ≺ b generates an ideal I of the derived-operation algebra, and
h = a·(f'·b') - a·(f·b'') normalizes to 2[a b' b' b'].  Membership of
[a b' b' b'] in I reduces to a row-space question for the 16 products of
a, b, f listed below.  The coordinate matrix is recomputed from scratch
and must match the vendored copy cell for cell; its rank is 10, and
adjoining the unit vector e1 raises the rank, so the quotient algebra
cannot be realized by derived operations in any differential Zinbiel
algebra.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .lincomb import LinComb
from .matrix import ExactMatrix
from .scalars import format_scalar
from .zinbiel import z_d, z_mul, z_prec, z_succ, zw, zword

DEFAULT_MOD_PRIMES = (2, 3, 5, 7)

COLUMN_WORDS = [
    "a b' b' b'",
    "a b' b b''",
    "a b b' b''",
    "a b b'' b'",
    "a b'' b b'",
    "a b'' b' b",
    "a b' b'' b",
    "a b b b'''",
    "a b b''' b",
    "a'' b b' b",
    "a'' b b b'",
    "a' b b' b'",
    "a' b' b b'",
    "a' b' b' b",
    "a' b b b''",
    "a' b b'' b",
]


H_FORM_LABELS = (
    "a·(f'·b') - a·(f·b'')",
    "a·((b'·b')·b')",
    "(1/3)((a≺b)≺b)≺b",
    "2[a b' b' b']",
)


class GoldenMatrixMismatch(Exception):
    """Recomputed counterexample matrix disagrees with the vendored one."""

    def __init__(self, diffs):
        self.diffs = diffs
        lines = [
            f"  row {i + 1}, col {j + 1}: computed {a}, vendored {b}"
            for i, j, a, b in diffs
        ]
        super().__init__("matrix mismatch:\n" + "\n".join(lines))


class ExpansionOutsideColumns(Exception):
    """An expansion produced a basis word outside the 16 fixed columns."""


def build_f() -> LinComb:
    """f = b ≺ b = b·b' = [b b']."""
    b = zw("b")
    return z_prec(b, b)


def build_h() -> list:
    """The chain of equal forms of h, ending in the literal 2[a b' b' b']."""
    a, b = zw("a"), zw("b")
    f = build_f()
    defining = z_mul(a, z_mul(z_d(f), zw("b'"))) - z_mul(a, z_mul(f, zw("b''")))
    cubed = z_mul(a, z_mul(z_mul(zw("b'"), zw("b'")), zw("b'")))
    third = z_prec(z_prec(z_prec(a, b), b), b) * Fraction(1, 3)
    literal = zw("a b' b' b'", 2)
    return [defining, cubed, third, literal]


def expand_sixteen() -> list:
    """The sixteen products of a, b and f, in the fixed order, normalized."""
    a, b = zw("a"), zw("b")
    f = build_f()
    p, s = z_prec, z_succ
    return [
        ("(a≺f)≺b", p(p(a, f), b)),
        ("(a≺f)≻b", s(p(a, f), b)),
        ("(a≻f)≺b", p(s(a, f), b)),
        ("(a≻f)≻b", s(s(a, f), b)),
        ("a≺(f≺b)", p(a, p(f, b))),
        ("a≺(f≻b)", p(a, s(f, b))),
        ("a≻(f≺b)", s(a, p(f, b))),
        ("a≻(f≻b)", s(a, s(f, b))),
        ("(a≺b)≺f", p(p(a, b), f)),
        ("(a≺b)≻f", s(p(a, b), f)),
        ("(a≻b)≺f", p(s(a, b), f)),
        ("(a≻b)≻f", s(s(a, b), f)),
        ("a≺(b≺f)", p(a, p(b, f))),
        ("a≺(b≻f)", p(a, s(b, f))),
        ("a≻(b≺f)", s(a, p(b, f))),
        ("a≻(b≻f)", s(a, s(b, f))),
    ]


def columns() -> list:
    return [zword(w) for w in COLUMN_WORDS]


def assemble_matrix(expansions=None):
    """Coordinate matrix of the sixteen expansions over the fixed columns."""
    if expansions is None:
        expansions = expand_sixteen()
    cols = columns()
    index = {w: j for j, w in enumerate(cols)}
    rows = []
    for label, value in expansions:
        row = [Fraction(0)] * len(cols)
        for w, c in value.items():
            if w not in index:
                raise ExpansionOutsideColumns(
                    f"expansion {label} contains {w}, which is not a column"
                )
            row[index[w]] = c
        rows.append(row)
    return ExactMatrix(rows), cols


def golden_matrix() -> ExactMatrix:
    text = resources.files("prenov.data").joinpath("counterexample_matrix.csv").read_text()
    return ExactMatrix.from_csv(text)


@dataclass
class CounterexampleReport:
    f: LinComb
    h_forms: list
    expansions: list
    columns: list
    matrix: ExactMatrix
    rank: int
    augmented_rank: int
    special: bool
    mod_ranks: dict

    def to_json_obj(self):
        return {
            "f": str(self.f),
            "h_forms": [
                {"form": label, "normal_form": str(h)}
                for label, h in zip(H_FORM_LABELS, self.h_forms)
            ],
            "expansions": [
                {"label": label, "normal_form": str(value)}
                for label, value in self.expansions
            ],
            "columns": [str(w) for w in self.columns],
            "matrix": self.matrix.to_json_obj(),
            "rank": self.rank,
            "augmented_rank": self.augmented_rank,
            "special": self.special,
            "mod_ranks": {str(p): r for p, r in sorted(self.mod_ranks.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, ensure_ascii=False)

    def transcript(self) -> str:
        out = []
        out.append(f"f = b≺b = {self.f}")
        out.append("h equality chain:")
        for label, h in zip(H_FORM_LABELS, self.h_forms):
            out.append(f"  {label:<24} = {h}")
        out.append("")
        out.append("the sixteen products, in normal form:")
        for label, value in self.expansions:
            out.append(f"  {label} = {value}")
        out.append("")
        out.append("column order: " + ", ".join(str(w) for w in self.columns))
        out.append("coordinate matrix:")
        for row in self.matrix.rows:
            out.append("  " + " ".join(f"{format_scalar(x):>2}" for x in row))
        out.append("")
        out.append(f"rank = {self.rank}")
        out.append(f"rank with the extra row e1 = {self.augmented_rank}")
        for p, r in sorted(self.mod_ranks.items()):
            out.append(f"rank mod {p} = {r}")
        verdict = "IS" if self.special else "is NOT"
        out.append(
            f"e1 in row space: {self.special} -> the quotient algebra {verdict} special"
        )
        return "\n".join(out) + "\n"


def run_counterexample(mod_primes=DEFAULT_MOD_PRIMES, verify_golden=True) -> CounterexampleReport:
    """Recompute the whole pipeline; raises GoldenMatrixMismatch if the
    matrix does not equal the vendored copy."""
    expansions = expand_sixteen()
    matrix, cols = assemble_matrix(expansions)
    if verify_golden:
        diffs = matrix.cell_diff(golden_matrix())
        if diffs:
            raise GoldenMatrixMismatch(diffs)
    e1 = [Fraction(1)] + [Fraction(0)] * (len(cols) - 1)
    rank = matrix.rank()
    augmented_rank = matrix.with_row(e1).rank()
    return CounterexampleReport(
        f=build_f(),
        h_forms=build_h(),
        expansions=expansions,
        columns=cols,
        matrix=matrix,
        rank=rank,
        augmented_rank=augmented_rank,
        special=augmented_rank == rank,
        mod_ranks={p: matrix.rank_mod_p(p) for p in mod_primes},
    )
