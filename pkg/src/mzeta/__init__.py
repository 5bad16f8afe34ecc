"""Exact permutation statistics and genus zeta numerators for multiset,
admissible, signed, and even-signed permutations, with verification sweeps
for the identities connecting them."""

from .admissible import (
    admissible_perms,
    admissible_to_word,
    block_index,
    den,
    i_set,
    iexc,
    is_admissible,
    m_sets,
    n_minus_set,
    n_plus_set,
    n_plus_split,
    project_perm,
    u_inv_set,
    u_set,
    word_to_admissible,
)
from .poly import BiPoly, UniPoly, cyclotomic, gaussian_binomial
from .signed import (
    b_stats,
    d_stats,
    even_signed_perms,
    excabs,
    nden,
    nsp,
    signed_perms,
    type_a_stats,
)
from .multiset import (
    Composition,
    denh,
    des,
    descent_set,
    exc,
    exc_set,
    exceeding_subword,
    imv,
    inv,
    inverse,
    maj,
    nonexceeding_subword,
    standardize,
    words,
)
from .zeta import (
    BudgetError,
    RationalW,
    conjecture_report,
    default_bounds,
    hadamard_check,
    joint_distribution,
    reciprocity_check,
    unitary_factor_scan,
    w_numerator,
    zeta_eval,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BudgetError",
    "Composition",
    "RationalW",
    "UniPoly",
    "admissible_perms",
    "admissible_to_word",
    "b_stats",
    "block_index",
    "conjecture_report",
    "cyclotomic",
    "d_stats",
    "default_bounds",
    "den",
    "denh",
    "des",
    "descent_set",
    "even_signed_perms",
    "exc",
    "exc_set",
    "excabs",
    "exceeding_subword",
    "gaussian_binomial",
    "hadamard_check",
    "i_set",
    "iexc",
    "imv",
    "inv",
    "inverse",
    "is_admissible",
    "joint_distribution",
    "m_sets",
    "maj",
    "n_minus_set",
    "n_plus_set",
    "n_plus_split",
    "nden",
    "nonexceeding_subword",
    "nsp",
    "project_perm",
    "reciprocity_check",
    "signed_perms",
    "standardize",
    "type_a_stats",
    "u_inv_set",
    "u_set",
    "unitary_factor_scan",
    "w_numerator",
    "word_to_admissible",
    "words",
    "zeta_eval",
]
