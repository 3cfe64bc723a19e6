"""Degree-sequence toolkit.

Graphicality testing (Erdos-Gallai), graph realization with a bounded
component-size guarantee, regularity-count encodings, and decision
procedures for the induced-subgraph order on graphic sequences, plus a
stream harness that hunts for comparable pairs.
"""

from .errors import (
    CapExceededError,
    GoodPairNotFound,
    NotGraphicError,
    PlanNotApplicableError,
)
from .graphs import (
    SimpleGraph,
    adjacency,
    components,
    degree_sequence,
    disjoint_union,
    from_edge_list_text,
    from_json_dict,
    graph_from_edges,
    sorted_edges,
    to_edge_list_text,
    to_json_dict,
)
from .harness import (
    GoodPairReport,
    StreamConfig,
    enumerate_graphic,
    find_good_pair,
    generate_stream,
    mine_antichain,
    report_to_json,
)
from .rao import (
    ComponentDecomposition,
    RaoWitness,
    canonical_form,
    decompose,
    higman_embeds,
    is_induced_subgraph,
    labeled_realizations,
    rao_leq_oracle,
    rao_leq_sufficient,
    rao_leq_via_components,
    witness_to_json,
)
from .realization import (
    RealizationPlan,
    plan_bounded,
    realize,
    realize_bounded,
)
from .sequences import (
    GraphicalityVerdict,
    IntegerSequence,
    RegularitySequence,
    erdos_gallai_check,
    erdos_gallai_sides,
    from_regularity,
    leq_pointwise,
    parse_sequence,
    sufficient_by_length,
    to_regularity,
)

__all__ = [
    "CapExceededError",
    "ComponentDecomposition",
    "GoodPairNotFound",
    "GoodPairReport",
    "GraphicalityVerdict",
    "IntegerSequence",
    "NotGraphicError",
    "PlanNotApplicableError",
    "RaoWitness",
    "RealizationPlan",
    "RegularitySequence",
    "SimpleGraph",
    "StreamConfig",
    "adjacency",
    "canonical_form",
    "components",
    "decompose",
    "degree_sequence",
    "disjoint_union",
    "enumerate_graphic",
    "erdos_gallai_check",
    "erdos_gallai_sides",
    "find_good_pair",
    "from_edge_list_text",
    "from_json_dict",
    "from_regularity",
    "generate_stream",
    "graph_from_edges",
    "higman_embeds",
    "is_induced_subgraph",
    "labeled_realizations",
    "leq_pointwise",
    "mine_antichain",
    "parse_sequence",
    "plan_bounded",
    "rao_leq_oracle",
    "rao_leq_sufficient",
    "rao_leq_via_components",
    "realize",
    "realize_bounded",
    "report_to_json",
    "sorted_edges",
    "sufficient_by_length",
    "to_edge_list_text",
    "to_json_dict",
    "to_regularity",
    "witness_to_json",
]

__version__ = "0.1.0"
