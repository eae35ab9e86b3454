"""Pointed triangulations of convex polytopes and their figurate sequences.

The package constructs face lattices of rational convex polytopes, pointed
triangulations induced by a generic linear functional, visibility partitions
from a generic interior point, the f/h/k/e vectors those partitions count,
and the polytope number sequences generated by several provably-equal
methods. Everything is exact: rationals for geometry, arbitrary-precision
integers for counts.
"""
from .geometry import (
    Hyperplane,
    Point,
    Rational,
    affine_hull_contains,
    affine_rank,
    evaluate_functional,
    rational,
    rational_str,
    segment_first_hit,
    side_of_hyperplane,
)
from .lattice import (
    Face,
    FaceLattice,
    Polytope,
    build_face_lattice,
    builtin,
    enumerate_facets,
    parse_builtin,
    polytope_from_json,
    polytope_from_vertices,
    polytope_to_json,
)
from .triangulation import (
    ApexAssignment,
    ComplexSplit,
    GenericityError,
    PointedTriangulation,
    assign_apexes,
    build_pointed_triangulation,
    generic_functional,
    link,
    maximal_simplices,
    split_boundary_interior,
    star,
    verify_pointed,
)
from .partitions import (
    GenericPoint,
    Interval,
    Partition,
    VectorSet,
    compute_vectors,
    e_vector,
    euler_characteristic,
    exterior_partition,
    f_from_h,
    f_vector,
    generic_point,
    h_from_f,
    h_from_partition,
    interior_partition,
    k_from_partition,
    verify_partition,
    visible_facets,
)
from .sequences import (
    Decomposition,
    SequenceResult,
    cross_number,
    eulerian_number,
    facet_cut_check,
    interior_from_h_reversed,
    interior_from_k,
    measure_number,
    polytope_number_from_h,
    polytope_number_recursive,
    polytope_number_simplex_sum,
    simplex_interior,
    simplex_number,
    vandermonde_check,
)
from .pipeline import run_pipeline

__version__ = "0.1.0"
