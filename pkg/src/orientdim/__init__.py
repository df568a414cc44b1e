"""Exact directed metric dimension for oriented wheels, fans and
amalgamations of directed cycles."""
from .digraph import (
    UNREACHABLE,
    Digraph,
    DigraphError,
    DistanceMatrix,
    build_digraph,
    distance_matrix,
    is_strongly_connected,
    parse_digraph,
    serialize_digraph,
    to_dot,
)
from .families import (
    CenterPartition,
    FamilyError,
    FamilySpec,
    build_family,
    center_partition,
    check_cn_simple,
    fan_dim2_orientation,
    oriented_fan_c3simple,
    oriented_wheel_c3simple,
    oriented_wheel_odd,
    path_amal_cycles,
    two_dimensional_wheel,
    wheel_dim2_orientation,
)
from .orientations import (
    OrdReport,
    UndirectedGraph,
    dim_spectrum,
    enumerate_orientations,
    ord_report,
)
from .resolver import (
    BasisResult,
    DimensionUndefinedError,
    Representation,
    is_dim_one_by_characterization,
    is_resolving,
    lower_bound_mandatory_pairs,
    metric_dimension,
    representation,
)

__version__ = "0.1.0"
