"""Limits of families of subspaces spanned by Laurent-vector curves.

A SubspaceFamily holds generators x_1(t), ..., x_r(t); for t != 0 they span
an r-plane E_t, and ``limit_subspace`` computes a basis of the flat limit
E_0 = lim_{t->0} E_t by repeatedly replacing generators whose t = 0 values
become dependent with t-normalized combinations.  Each replacement strictly
decreases the t-valuation of the gcd of maximal minors, so the loop
terminates with r independent rational vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DependentFamilyError
from .laurent import (
    t_content_normalize,
    vec_at_zero,
    vec_combination,
    vec_is_zero,
)
from .linalg import RatMatrix

_MAX_ROUNDS = 100_000


@dataclass(frozen=True)
class SubspaceFamily:
    """Generators of a moving subspace of Q^ambient_dim, over Q[t, 1/t]."""

    ambient_dim: int
    generators: tuple = field(default_factory=tuple)

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.ambient_dim:
                raise ValueError("generator length %d != ambient dim %d"
                                 % (len(g), self.ambient_dim))
            if vec_is_zero(g):
                raise DependentFamilyError("zero generator in subspace family")


def limit_subspace(family: SubspaceFamily):
    """Basis of the limit plane at t = 0; one vector per generator."""
    basis, _ = limit_subspace_witnesses(family)
    return basis


def limit_subspace_witnesses(family: SubspaceFamily):
    """Limit basis together with the Laurent combinations that realize it.

    Returns (basis, witnesses): basis[i] is a rational vector, witnesses[i]
    a t-content-normalized combination of the input generators whose value
    at t = 0 is basis[i].
    """
    gens = [t_content_normalize(g)[1] for g in family.generators]
    r = len(gens)
    if r == 0:
        return [], []
    for _ in range(_MAX_ROUNDS):
        evals = [vec_at_zero(g) for g in gens]
        dep = _first_dependency(evals, family.ambient_dim)
        if dep is None:
            return evals, gens
        high = max(i for i, c in enumerate(dep) if c)
        combined = vec_combination(dep, gens)
        if vec_is_zero(combined):
            raise DependentFamilyError(
                "generators are linearly dependent over Q(t)")
        _, gens[high] = t_content_normalize(combined)
    raise RuntimeError("limit_subspace did not converge")


def _first_dependency(evals, ambient_dim):
    """First kernel vector of the matrix with the evaluations as columns."""
    entries = {}
    for j, v in enumerate(evals):
        for i, x in enumerate(v):
            if x:
                entries[(i, j)] = x
    ker = RatMatrix(ambient_dim, len(evals), entries).kernel_basis()
    return ker[0] if ker else None
