"""Exact computer algebra for free differential Zinbiel, commutative and
Novikov algebras: normal forms, derived operations, low-arity relation
extraction, dendriform splitting, and the non-embeddability pipeline."""

from .lincomb import LinComb
from .matrix import ExactMatrix
from .scalars import Scalar, format_scalar, parse_scalar, scalar_arith
from .terms import (
    DiffVar,
    OpSignature,
    Permutation,
    SIG_DENDRIFORM,
    SIG_MUL,
    SIG_PRENOV,
    Term,
    apply_permutation,
    parse_var,
)
from .zinbiel import (
    ZWord,
    z_d,
    z_eval_prenov,
    z_mul,
    z_normalize,
    z_prec,
    z_succ,
    z_weight,
    zword,
)
from .novikov import (
    CMonomial,
    c_d,
    c_dd,
    c_mul,
    cmono,
    dnov_ops,
    dnov_prec,
    dnov_succ,
    nov_basis,
    nov_mul,
    verify_case1,
)
from .operads import (
    enumerate_monomials,
    eval_matrix,
    hadamard_dim,
    relation_kernel,
    verify_identity,
    white_vs_hadamard,
)
from .dendriform import (
    PermAlgebra,
    perm_one,
    perm_tensor_novikov_check,
    perm_tensor_product,
    perm_two,
    rename_to_dendriform,
    rename_to_prenov,
    span_equal,
    split,
    split_all,
)
from .speciality import (
    CounterexampleReport,
    build_f,
    build_h,
    expand_sixteen,
    run_counterexample,
)
from .envelope import (
    AWord,
    StructureAlgebra,
    a_normalize,
    build_rules,
    composition_check,
    verify_embedding,
)
from .sexpr import ParseError, parse_term

__version__ = "0.1.0"
