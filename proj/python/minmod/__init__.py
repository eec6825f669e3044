"""Exact modular data of Virasoro minimal models Vir(a,b), their C_a
subcategories, and the category of ordinary modules of affine sl2 at
admissible level -2 + a/b.

All arithmetic is exact (arbitrary-precision rationals and cyclotomic
integers); floats appear only as advisory approximations.
"""

from ._core import (
    AdmissibleLevel,
    AffineCategory,
    BranchingEntry,
    ConsistencyError,
    CosetSetup,
    Cyclotomic,
    FusionRing,
    InducedLabel,
    MinimalModel,
    ModularDatum,
    NotClosedError,
    affine_category,
    affine_is_modular,
    affine_weight,
    branching,
    cg_bound,
    check_locality,
    cos_pi,
    coset_setup,
    document_json,
    induce,
    minimal_model,
    modular_datum,
    run_verification,
    simple_current_row,
    sin_pi,
    subcategory_ca,
    verify_axioms,
    verify_ring_hom,
    verify_twist_relation,
    verify_weight_congruence,
    verlinde_eigencheck,
)

__all__ = [
    "AdmissibleLevel",
    "AffineCategory",
    "BranchingEntry",
    "ConsistencyError",
    "CosetSetup",
    "Cyclotomic",
    "FusionRing",
    "InducedLabel",
    "MinimalModel",
    "ModularDatum",
    "NotClosedError",
    "affine_category",
    "affine_is_modular",
    "affine_weight",
    "branching",
    "cg_bound",
    "check_locality",
    "cos_pi",
    "coset_setup",
    "document_json",
    "induce",
    "minimal_model",
    "modular_datum",
    "run_verification",
    "simple_current_row",
    "sin_pi",
    "subcategory_ca",
    "verify_axioms",
    "verify_ring_hom",
    "verify_twist_relation",
    "verify_weight_congruence",
    "verlinde_eigencheck",
]
