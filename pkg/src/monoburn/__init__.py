"""Exact computer algebra for monomial Burnside rings and their invariants."""

from .groups import (
    FiniteGroup,
    GroupError,
    GSet,
    Subgroup,
    all_subgroups,
    build_group,
    catalog_group,
    catalog_names,
    coset_gset,
    direct_product,
    double_cosets,
    normalizer,
)
from .subchars import (
    Character,
    CoefficientGroup,
    SubcharTable,
    Subcharacter,
    all_characters,
    conj_subchar,
    leq_subchar,
    restrict_character,
    subchar_table,
    trivial_character,
)
from .burnside import (
    BurnsideElement,
    RawFibredSet,
    basis_element,
    decompose_fibred,
    find_units,
    is_unit,
    mark,
    mark_matrix,
    mark_vector,
    monomial_tensor_oracle,
    one,
    tensor_fibred,
    zero,
)
from .posets import (
    MonomialPoset,
    MonomialPosetMap,
    PosetError,
    chains_poset,
    disjoint_union,
    empty_poset,
    enumerate_morphisms,
    euler_char,
    fiber_above,
    fiber_below,
    find_isomorphism,
    five_point_poset,
    fixed_subposet,
    fibred_to_monomial,
    hom_count,
    induce,
    is_isomorphic,
    join,
    monomial_set_to_fibred,
    mu_hat_poset,
    open_interval_above,
    open_interval_below,
    opposite,
    point_poset,
    product,
    restrict,
    trivial_monomial_poset,
)
from .lefschetz import (
    LefschetzReport,
    equal_by_marks,
    fixed_point_marks,
    induce_element,
    lefschetz,
    lefschetz_by_vertices,
    quillen_report,
    realize,
    reduced_lefschetz,
)
from .tensor_induction import (
    MonomialBiset,
    biset_disjoint_union,
    bisets_isomorphic,
    compose_bisets,
    composition_law_report,
    empty_biset,
    identity_biset,
    nonfree_counterexample,
    tensor_induce_marks,
    tensor_induce_poset,
    tensor_induce_ring,
)
from .randgen import (
    random_biset,
    random_element,
    random_monomial_gset,
    random_monomial_poset,
    random_morphism,
)

__version__ = "0.1.0"
