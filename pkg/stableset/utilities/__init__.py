from .corpus import (
    MAX_N,
    atlas_graphs,
    augment_by_vertex,
    graphs_of_order,
    iter_graph6_file,
    iter_graphs,
)
from .suites import (
    SUITES,
    Bounds,
    Diagram,
    Divisibility,
    StabilityIffClawfree,
    Suite,
    SuiteReport,
    run_suites,
)
