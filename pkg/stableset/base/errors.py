"""
Structured errors raised by graph and tree constructions.

Each error carries the witness that caused it as attributes so callers (and the
command line front end) can report it without parsing the message.
"""


class GraphFormatError(ValueError):
    """Error in a graph or hypergraph input file."""

    def __init__(self, msg, line=None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class ClawPresent(ValueError):
    """Graph contains an induced claw where a claw-free graph is required."""

    def __init__(self, claw):
        self.claw = tuple(claw)
        center, *leaves = self.claw
        super().__init__(f"graph has a claw centered at {center} with leaves {tuple(leaves)}")


class NotSimplicialClique(ValueError):
    """
    Clique is not simplicial.

    Attributes
    ----------
    u : int
        Clique vertex whose outside neighborhood is not a clique.
    pair : tuple
        Two non-adjacent outside neighbors of `u`. Empty when the failing set
        is not a clique at all.
    """

    def __init__(self, u, pair=(), msg=None):
        self.u = u
        self.pair = tuple(pair)
        if msg is None:
            msg = f"neighborhood of {u} outside the clique is not a clique, {self.pair} not adjacent"
        super().__init__(msg)


class NodeCapExceeded(RuntimeError):
    """Tree construction would exceed the configured node cap."""

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"tree has at least {count} nodes, cap is {cap}")
