try:
    from .version import version
except ImportError:
    # running from a source tree that was never installed
    version = "unknown"

from .errors import ClawPresent, GraphFormatError, NodeCapExceeded, NotSimplicialClique
from .graph import *
from .hypergraph import Hypergraph, random_hypergraph, reduce_hypergraph
from .named import fig_p_graph, named_graph, named_graph_names, schlafli_graph, srg_parameters, w6_graph, c6_graph
from .graph_io import (
    dump_json,
    dumps_json,
    exact_str,
    format_edge_list,
    from_graph6,
    load_graph,
    parse_edge_list,
    parse_hyperedge_list,
    read_graph6_file,
    to_dot,
    to_graph6,
)
from .write_log import pre, post
from .config import load_config, node_cap, set_config
