from dataclasses import dataclass, field

from .multivariate import MultivariatePoly, SplitViolation


@dataclass(frozen=True)
class Splitting:
    """
    Proper splitting ``p = f0 + sum of var_i f_i``.

    Attributes
    ----------
    f0 : MultivariatePoly
        `p` with the split variables set to zero.
    parts : tuple
        ``(var_i, f_i)`` pairs, ``f_i`` the partial derivative in ``var_i``.
    """

    f0: MultivariatePoly
    parts: tuple = field(default_factory=tuple)

    def polys(self):
        """``[f0, var_1 f_1, ...]``, the summands of the splitting."""
        out = [self.f0]
        for v, f in self.parts:
            out.append(MultivariatePoly.variable(v) * f)
        return out

    def reassemble(self):
        total = self.f0
        for v, f in self.parts:
            total = total + MultivariatePoly.variable(v) * f
        return total


def proper_splitting(p, variables):
    """
    Split a multi-affine polynomial over a set of variables.

    Parameters
    ----------
    p : MultivariatePoly
        Multi-affine polynomial.
    variables : iterable
        Split variables. No term of `p` may contain two of them.

    Returns
    -------
    Splitting

    Raises
    ------
    ValueError
        If `p` is not multi-affine.
    SplitViolation
        Naming the first term (in display order) with two split variables.
    """
    if not p.multi_affine:
        raise ValueError("proper splittings need a multi-affine polynomial")

    variables = sorted(set(variables))
    vset = set(variables)
    for mono, _ in p.sorted_terms():
        hit = [v for v, _ in mono if v in vset]
        if len(hit) > 1:
            raise SplitViolation(MultivariatePoly({mono: 1}, names=p.names).to_text(), hit)

    split = Splitting(p.set_zero(variables), tuple((v, p.partial(v)) for v in variables))

    if split.reassemble() != p:
        raise RuntimeError(f"splitting of {p} over {variables} does not reassemble")

    return split
