"""Exact topological invariants and Hitchin-Thorpe screening of toric instantons."""

__version__ = "0.1.0"

from .admissibility import AdmissibilityReport, ECandidate, check, check_ale, check_alf
from .boundary import (
    AsymptoticClass,
    Compatibility,
    Geometry,
    Kind,
    LensBoundary,
    Reason,
    boundary_lens,
    classify_compatibility,
)
from .catalog import CatalogEntry, catalog_entries, get_entry
from .eta import eta_closed_form_3pt, eta_lens
from .families import (
    GridCell,
    Marker,
    enumerate_d_box,
    scan_four_point_af,
    scan_three_point,
    three_point_structure,
)
from .invariants import (
    Inertia,
    IntersectionData,
    euler_characteristic,
    inertia,
    inertia_oracle,
    intersection_matrix,
    signature,
)
from .rods import (
    RodStructure,
    RodVector,
    UnimodularMap,
    canonicalize,
    from_d_vector,
    normalize_signs,
    reverse,
    to_d_vector,
    validate,
)
