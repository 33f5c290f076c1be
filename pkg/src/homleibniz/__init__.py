"""Exact computations for finite-dimensional Hom-Leibniz algebras over Q.

Tensor and exterior products, homology, Schur multipliers, centers and
capability, with every result in exact rational arithmetic.
"""

from .algebra import (
    CrossedModule,
    CrossedModulePair,
    HomAction,
    HomLeibnizAlgebra,
    Morphism,
    SubIdeal,
    Violation,
    abelianization,
    alpha_center,
    center,
    derived_ideal,
    direct_sum,
    higgins_commutator,
    is_perfect,
    quotient_algebra,
    semidirect_product,
    validate_action,
    validate_algebra,
    validate_crossed_module,
)
from .capability import (
    CenterReport,
    capability_consistency_suite,
    exterior_center,
    is_capable,
    smallest_center_characterization_check,
    tensor_center,
)
from .errors import AmbientMismatch, CapExceeded, HomLeibnizError, IntegrityError, ValidationError
from .exactla import Mat, QuotientMap, Subspace
from .homology import HomologyResult, chain_complex, hl2_dim, homology_dims, induced_map_on_homology
from .products import (
    ProductPresentation,
    direct_sum_formulas_check,
    eight_term_check,
    exterior_product,
    extension,
    pair_from_ideals,
    schur_multiplier,
    self_pair,
    split_extension_from_action,
    split_injectivity_check,
    tensor_product,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
