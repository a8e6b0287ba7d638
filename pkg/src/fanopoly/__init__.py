"""Exact-arithmetic computations with Fano polygons.

Core objects: validated Fano polygons, their rational duals, the
Kahler-Einstein barycenter test, GL(2,Z) automorphism groups, cyclic
quotient singularity data, and a bounded exhaustive census with a
theorem-verification harness. Everything is exact; no floating point is
used anywhere.
"""

from .errors import FanoError, InternalCheckError
from .kernel import (
    LatticePoint,
    UnimodularMap,
    cone_order,
    is_primitive,
    normalize_cone_basis,
    primitive_index,
)
from .polygon import (
    FanoPolygon,
    RationalPolygon,
    are_equivalent,
    barycenter,
    canonical_form,
    dual,
    is_kahler_einstein,
    make_fano_polygon,
    make_rational_polygon,
    transform,
)
from .symmetry import AutGroup, automorphisms, is_symmetric, recognize_smn
from .invariants import (
    SingularityType,
    SurfaceInvariants,
    cone_singularity,
    cone_types,
    hj_resolution,
    k2_from_dual_area,
    k2_from_resolution,
    my_report,
    surface_invariants,
    types_isomorphic,
)
from .families import (
    ke_triangle_types,
    make_ke_triangle,
    make_smn,
    recognize_ke_triangle,
    smn_dual_closed_form,
)
from .census import (
    CensusConfig,
    PolygonReport,
    VerificationReport,
    build_report,
    enumerate_classes,
    iter_raw_polygons,
    primitive_points,
    store_read,
    store_write,
    verify_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "AutGroup",
    "CensusConfig",
    "FanoError",
    "FanoPolygon",
    "InternalCheckError",
    "LatticePoint",
    "PolygonReport",
    "RationalPolygon",
    "SingularityType",
    "SurfaceInvariants",
    "UnimodularMap",
    "VerificationReport",
    "are_equivalent",
    "automorphisms",
    "barycenter",
    "build_report",
    "canonical_form",
    "cone_order",
    "cone_singularity",
    "cone_types",
    "dual",
    "enumerate_classes",
    "hj_resolution",
    "is_kahler_einstein",
    "is_primitive",
    "is_symmetric",
    "iter_raw_polygons",
    "k2_from_dual_area",
    "k2_from_resolution",
    "ke_triangle_types",
    "make_fano_polygon",
    "make_ke_triangle",
    "make_rational_polygon",
    "make_smn",
    "my_report",
    "normalize_cone_basis",
    "primitive_index",
    "primitive_points",
    "recognize_ke_triangle",
    "recognize_smn",
    "smn_dual_closed_form",
    "store_read",
    "store_write",
    "surface_invariants",
    "transform",
    "types_isomorphic",
    "verify_theorems",
]
