"""1-perfect orientations of graphs: oracles, class recognisers and structural certificates."""

from .graph import (
    BlockDecomposition,
    Graph,
    GraphError,
    PreconditionError,
    blocks_and_cut_vertices,
    build_graph,
    chordless_cycles,
    complement,
    contract,
    delete_vertex,
    induce,
    paste,
    rooted_tree_orientation,
)
from .oracles import (
    Orientation,
    cyclic_orientation_exists,
    enumerate_one_perfect,
    is_1po_2sat,
    is_in_tree,
    is_one_perfect,
    sinks,
)
from .patterns import MinorModel, Pattern, catalog, contains, find_containment, pattern, verify_model
from .classes import (
    CLASS_RECOGNIZERS,
    EliminationOrdering,
    ReductionTrace,
    is_2tree,
    is_block_cactus,
    is_chordal,
    is_cyclically_orientable,
    is_hollowed_2tree,
    is_k4_minor_free,
    is_outerplanar,
    peo_starting_at,
    separability_at_most_2,
)
from .structural import (
    BuildSequence,
    Certificate,
    Witness,
    apply_steps,
    build_sequence,
    orient_chordal_with_sink,
    orient_sink_free,
    recognize,
    recognize_biconnected,
    recognize_biconnected_rooted,
    recognize_block_cactus,
)

__version__ = "0.1.0"
