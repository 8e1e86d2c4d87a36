"""Exact computations around tensor invariants of simple algebraic groups."""

from .errors import BudgetExceeded, WeylInvError
from .rootsystem import (
    RootSystem,
    build_root_system,
    cartan_matrix,
    dominant_representative,
    from_epsilon,
    is_dominant,
    to_epsilon,
    weyl_orbit,
)
from .weyl import (
    BalancedCollection,
    WeylElement,
    canonical_balanced_collection,
    coxeter_element,
    element_order,
    enumerate_weyl_group,
    exponents,
    is_balanced,
    longest_element,
    minus_identity_in_weyl,
    search_balanced,
    weyl_group_order,
)
from .semigroup import (
    GroupSpec,
    SemigroupDescriptor,
    center_exponent,
    intersect,
    m_of_semisimple,
    m_of_simple,
    verify_membership,
)
from .characters import (
    CharacterCache,
    DecompositionResult,
    FormalCharacter,
    dual_weight,
    invariant_dimension,
    irrep_dimension,
    tensor_decompose,
    weight_multiplicities,
)
from .spin import (
    SpinTableau,
    enumerate_standard_tableaux,
    half_spin_closed_form,
    is_invariant_free_triple,
    lr_tensor_decompose,
    shape_of_weight,
)
from .hv import hv_dimension, is_minuscule, tuple_orbit_dimension, tuple_stabilizer

__version__ = "0.1.0"
