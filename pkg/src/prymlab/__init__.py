"""Exact invariants of bielliptic Picard curves y^3 = x^4 + a x^2 + b and
their Prym surfaces: duality, twists, endomorphism structure, CM detection,
rational torsion, and a finite-field point-counting oracle."""

from .curves import (
    Curve,
    EllipticModel,
    Genus2Model,
    bigonal_dual,
    curve_from_dict,
    curve_to_dict,
    discriminant,
    elliptic_quotients,
    genus2_model,
    integral_model,
    is_geometrically_isomorphic,
    is_isomorphic_marked,
    is_special,
    j_invariant,
    new_curve,
    quartic_f,
    quartic_fhat,
    sextic_twist,
)
from .endomorphisms import (
    CM_TABLE,
    EndoFieldDescriptor,
    EndRing,
    cm_discriminant,
    elkies_t,
    end_ring,
    endo_field,
    is_gl2_type,
    is_principally_polarizable,
    lifts_to_Y,
    ns_rank,
    sato_tate_label,
)
from .errors import (
    BadPrime,
    CMNotSupported,
    DegenerateCurve,
    DegenerateParameters,
    InternalInconsistency,
    NonExactDivision,
    NotACube,
    PrymlabError,
    UnknownFamily,
    WeilBoundViolation,
)
from .families import (
    FamilySpec,
    expected_torsion,
    get_family,
    instantiate,
    list_families,
)
from .oracle import (
    LPolynomial,
    PrymCount,
    count_points_C,
    count_points_E,
    good_primes,
    l_polynomial,
    prym_order,
    torsion_multiplicative_bound,
)
from .records import classify_record, endo_profile, oracle_summary
from .torsion import (
    ThreePartReport,
    TorsionReport,
    TwoTorsionReport,
    end_module_structure,
    p_torsion_rank,
    three_part,
    torsion_group,
    torsion_to_dict,
    two_torsion,
)

__version__ = "0.1.0"

__all__ = [
    "BadPrime",
    "CMNotSupported",
    "CM_TABLE",
    "Curve",
    "DegenerateCurve",
    "DegenerateParameters",
    "EllipticModel",
    "EndRing",
    "EndoFieldDescriptor",
    "FamilySpec",
    "Genus2Model",
    "InternalInconsistency",
    "LPolynomial",
    "NonExactDivision",
    "NotACube",
    "PrymCount",
    "PrymlabError",
    "ThreePartReport",
    "TorsionReport",
    "TwoTorsionReport",
    "UnknownFamily",
    "WeilBoundViolation",
    "bigonal_dual",
    "classify_record",
    "cm_discriminant",
    "count_points_C",
    "count_points_E",
    "curve_from_dict",
    "curve_to_dict",
    "discriminant",
    "elkies_t",
    "elliptic_quotients",
    "end_module_structure",
    "end_ring",
    "endo_field",
    "endo_profile",
    "expected_torsion",
    "genus2_model",
    "get_family",
    "good_primes",
    "instantiate",
    "integral_model",
    "is_geometrically_isomorphic",
    "is_gl2_type",
    "is_isomorphic_marked",
    "is_principally_polarizable",
    "is_special",
    "j_invariant",
    "l_polynomial",
    "lifts_to_Y",
    "list_families",
    "new_curve",
    "ns_rank",
    "oracle_summary",
    "p_torsion_rank",
    "prym_order",
    "quartic_f",
    "quartic_fhat",
    "sato_tate_label",
    "sextic_twist",
    "three_part",
    "torsion_group",
    "torsion_multiplicative_bound",
    "torsion_to_dict",
    "two_torsion",
]
