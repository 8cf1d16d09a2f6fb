"""Odd-linkage combinatorics for GL(m|n) with exact arithmetic."""

from .errors import DomainError, ParseError, PreconditionError
from .indices import (
    MultiIndex,
    Permutation,
    ab_counts,
    enumerate_admissible,
    enumerate_all_with_content,
    is_admissible,
    is_robust,
    permute,
)
from .linalg import det, is_upper_triangular, rank_mod_p, rank_rational
from .linkage import (
    FactorVerdict,
    LinkChain,
    OSet,
    chain_for_label,
    chain_from_collection,
    collections_and_osets,
    factor_candidate,
    odd_linked,
    simply_odd_linked,
)
from .omega import OmegaExpr, legend, sym, tie_rules
from .orders import clausen_row_less, induced_eta_less, rev_semitic_less
from .psi import (
    NotInSpanError,
    PiCombination,
    PsiMatrix,
    basis_matrix,
    diagonal_alpha,
    normalize_target,
    psi_image,
    psi_matrix,
    psi_on_combination,
)
from .tableaux import (
    SkewDiagram,
    Tableau,
    enumerate_marked,
    leading_label,
    reading_word,
    skew_shapes_from,
)
from .weights import (
    ContentVector,
    Weight,
    content,
    ell_stats,
    is_dominant,
    is_hook_pair,
    is_polynomial,
    omega,
    shift,
)
