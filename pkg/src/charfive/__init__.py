"""Exact-arithmetic toolkit for even lattices, discriminant forms and
sextic double planes in characteristic 5."""

__version__ = "0.1.0"

from .lattice import (
    DegenerateLatticeError,
    DiscriminantGroup,
    DivisibilityError,
    EvennessViolation,
    GramLattice,
    IndefiniteLatticeError,
    Overlattice,
    RootSystemType,
    coset_vectors_of_norm,
    discriminant_group,
    dual_gram,
    e_set,
    overlattice_from_generators,
    root_type_orthogonal_to,
    roots_orthogonal_to,
    short_vectors_box,
    short_vectors_of_norm,
)
from .intmat import smith_normal_form
from .discform import (
    AutElement,
    DeltaType,
    IsotropicSubgroup,
    REFERENCE_SUBGROUPS,
    STARRED_TYPES,
    aut_apply,
    aut_compose,
    all_aut,
    b_value,
    build_S0,
    canonical_key,
    classify_isotropic_subgroups,
    condition_II,
    delta,
    isotropic_table,
    max_isotropic_dimension,
    q_value,
    subgroup_overlattice,
    verify_q_consistency,
)
from .ffpoly import (
    GF,
    GFPoly,
    MODULI,
    RootInExtension,
    SplittingFieldError,
    embedding,
    field_arithmetic,
    fifth_root,
    format_poly_literal,
    is_squarefree,
    parse_poly_literal,
    poly_gcd,
    roots_in_extension,
    roots_in_field,
    subfield_degree,
)
from .curvecheck import (
    GenericityError,
    Poly2,
    SexticModel,
    SingularPointReport,
    WallReport,
    check_infinity,
    is_in_U,
    local_intersection_multiplicity,
    ns_gram_model,
    random_in_U,
    singular_points,
    verify_A4,
    wall_invariant,
    wall_product_from_parts,
)
