"""Edge partition of sparse hereditary graph classes into two degree-capped
forests plus a bounded-degree leftover subgraph."""

from .decompose import (
    ReductionStep,
    decompose,
    extend_case1,
    extend_case2,
    extend_case3,
)
from .errors import (
    BadParameterError,
    DuplicateEdgeError,
    ExtraLabelError,
    GraphError,
    InternalInvariantViolation,
    MalformedLineError,
    MissingLabelError,
    SelfLoopError,
    TooLargeError,
    UnknownEdgeError,
    UnknownNameError,
    UnknownVertexError,
)
from .generate import (
    SplitMix64,
    derive_seed,
    gen_edge_subgraph,
    gen_named,
    gen_random_apollonian,
    gen_series_parallel,
)
from .graph import (
    Edge,
    EdgeLabel,
    EdgePartition,
    Graph,
    canonical_edge,
    format_edge_list,
    parse_edge_list,
    parse_partition,
    remove_elements,
    serialize_partition,
)
from .params import ClassParams, forest_cap
from .structures import (
    AltCycle,
    AuxMultigraph,
    Configuration,
    LightEdge,
    NotInClassWitness,
    SmallVertex,
    build_auxiliary_multigraph,
    find_configuration,
    find_light_edge,
    find_small_vertex,
    find_two_alternating_cycle,
    is_valid_alt_cycle,
)
from .verify import (
    CycleInForest,
    ForestCapExceeded,
    HDegreeExceeded,
    NotAPartition,
    VerificationReport,
    brute_force_partition,
    enumerate_simple_cycles,
    has_two_alternating_cycle_brute_force,
    is_forest,
    is_k4_minor_free,
    verify_partition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
