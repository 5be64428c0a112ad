"""Exact normality analysis for group-based tripod model polytopes."""

from .groups import (
    DivisibilityError,
    GroupError,
    GroupSpec,
    abelian_groups_of_order,
    make_group,
)
from .polytope import (
    GPresentation,
    PolytopeError,
    PolytopeModel,
    build_model,
    dilation_weights,
    from_lattice_coords,
    halve,
    in_dilation,
    in_lattice,
    lattice_basis,
    point_to_presentation,
    presentation,
    to_lattice_coords,
    vertices,
)
from .normality import (
    CertificateError,
    DecompositionWitness,
    NonNormalityCertificate,
    NormalityReport,
    canonical_presentation,
    check_degree,
    check_normality,
    decompose,
    enumerate_degree,
    find_witness,
    verify_certificate,
    z11_witness_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
