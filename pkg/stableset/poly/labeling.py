from dataclasses import dataclass


@dataclass(frozen=True)
class Labeling:
    """
    Vertex map from a source graph into a target graph.

    Attributes
    ----------
    map : tuple
        ``map[u]`` is the target vertex of source vertex ``u``.
    target_names : tuple, default=None
        Names of the target vertices, used to print relative polynomials.
    """

    map: tuple
    target_names: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        if self.target_names is not None:
            object.__setattr__(self, "target_names", tuple(self.target_names))

    def __call__(self, u):
        return self.map[u]

    def __len__(self):
        return len(self.map)

    def label_name(self, u):
        t = self.map[u]
        if self.target_names is None or t >= len(self.target_names):
            return str(t)
        return self.target_names[t]

    def is_homomorphism(self, source, target):
        """True iff every source edge maps to a target edge."""
        if len(self.map) != source.n:
            return False
        return all(target.has_edge(self.map[u], self.map[v]) for u, v in source.edges)


def relative_poly(p, labeling):
    """
    Relative form of a polynomial along a labeling.

    Each variable ``x_u`` becomes ``x_{labeling(u)}``; exponents of variables
    with the same label accumulate.

    Parameters
    ----------
    p : MultivariatePoly
        Polynomial over the source vertices.
    labeling : Labeling
        Map into the target graph.

    Returns
    -------
    MultivariatePoly
        Polynomial over the target vertices.

    Raises
    ------
    ValueError
        If a variable of `p` is not labeled.
    """
    mapping = {u: labeling.map[u] for u in p.variables if 0 <= u < len(labeling.map)}
    names = None
    if labeling.target_names is not None:
        names = dict(enumerate(labeling.target_names))
    return p.rename(mapping, names=names)
