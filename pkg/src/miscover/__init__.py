"""Maximal independent sets, separating covers, and integer complexity.

One chain of equalities ties this library together: the largest product
of positive integers summing to n equals the largest number of maximal
independent sets an n-vertex graph can carry, its left inverse is the
minimum size of a separating cover, and the same quantity caps the
integers expressible with n ones.  Every closed form ships next to a
brute-force oracle and an explicit construction attaining it.
"""

from .closedforms import (
    max_partition_product,
    max_with_ones,
    min_separating_sets,
    perrin,
)
from .complexity import (
    ComplexityTable,
    complexity_csv,
    complexity_table,
    graph_from_expression,
    minimal_expression,
)
from .covers import (
    CoverReport,
    CoverValidationError,
    SeparatingCover,
    cover_from_graph,
    cover_from_json,
    cover_to_json,
    graph_from_cover,
    greedy_mis_witnesses,
    minimal_cover,
    read_cover_json,
    validate_cover,
    write_cover_json,
)
from .expressions import (
    Expression,
    ExpressionSyntaxError,
    add,
    format_expression,
    mul,
    one,
    parse_expression,
)
from .graphs import (
    DEFAULT_MIS_CAP,
    MAX_VERTICES,
    Graph,
    MisCapError,
    Variant,
    VertexSet,
    closed_neighborhood,
    complete_graph,
    count_mis,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    enumerate_mis,
    extremal_graph,
    from_edges,
    graph_from_text,
    graph_to_text,
    induced_subgraph,
    is_independent,
    is_maximal_independent,
    join,
    read_graph_text,
    write_graph_text,
)
from .oracles import (
    OracleReport,
    brute_complexity,
    brute_max_mis_count,
    brute_max_partition_product,
    brute_min_separating_sets,
    canonical_form,
    extremal_graphs_up_to_iso,
    run_verification,
)

__version__ = "0.1.0"
