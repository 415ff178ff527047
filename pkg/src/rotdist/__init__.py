"""Elimination trees, rotations between them, and exact distance decisions."""

from .elimtree import (
    ROOT,
    ElimTree,
    apply_sequence,
    equals,
    from_ordering,
    from_parent_vector,
    load_tree,
    rotate,
    save_tree,
    validate,
    validity_violations,
)
from .errors import (
    DisconnectedGraph,
    InstanceTooLarge,
    InvalidOrdering,
    InvalidParameter,
    InvalidTree,
    InvalidVertex,
    NotATreeEdge,
    NotInComponent,
    OrderViolation,
    RotDistError,
    SelfLoop,
)
from .flip import (
    OVER_CAP,
    FlipGraph,
    bfs_distance,
    bfs_witness,
    diameter,
    enumerate_all,
    enumerate_orderings,
    neighbors,
    restricted_bfs_distance,
)
from .fpt import (
    SAME,
    WANT_ROOT,
    BadnessReport,
    Component,
    Decision,
    MarkedSet,
    TypeTable,
    check_early_no,
    classify_bad,
    components,
    compute_bcb,
    compute_marking,
    fpt_decide,
    mark,
    premark,
    trace_of,
    type_of,
    want_parent,
)
from .graphs import Graph, ball, from_edge_list, generate, is_connected, load_graph, save_graph

__version__ = "0.1.0"
