"""Representation-level geometry of a torus action.

Nullcone decomposition, closed-orbit tests, the coarse separating-variety
decomposition and the partial graph-closure classification of nullcone
component pairs.  Everything is decided by honest subset enumeration over the
weight columns, behind a configurable dimension cap.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .convexgeom import in_convex_hull, in_relative_interior, separating_functional
from .errors import DimensionTooLarge, InvariantViolation, NotNullconeComponent
from .lattice import IntMatrix, rank, restrict_kernel

__all__ = [
    "DEFAULT_MAX_DIM",
    "TorusRep",
    "Classification",
    "NullconeDecomposition",
    "SepVarDecomposition",
    "nullcone",
    "is_orbit_closed",
    "sepvar_is_simple",
    "graph_closure_classify",
    "sepvar_decompose",
]

DEFAULT_MAX_DIM = 16

IndexSet = tuple[int, ...]


@dataclass(frozen=True)
class TorusRep:
    """A torus representation given by its integer weight matrix.

    Column i of `weights` is the weight of the i-th coordinate.  The matrix
    must have full row rank and no zero column.
    """

    weights: IntMatrix

    def __post_init__(self) -> None:
        r, n = self.weights.rows, self.weights.cols
        if r > n:
            raise ValueError(f"rank {r} exceeds dimension {n}")
        if rank(self.weights) != r:
            raise ValueError("weight matrix does not have full row rank")
        for j in range(n):
            if not any(self.weights.col(j)):
                raise ValueError(f"zero weight column at index {j}")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "TorusRep":
        cols = [tuple(int(x) for x in c) for c in columns]
        if not cols:
            raise ValueError("a representation needs at least one weight")
        return cls(IntMatrix.from_rows(zip(*cols)))

    @property
    def rank(self) -> int:
        return self.weights.rows

    @property
    def dim(self) -> int:
        return self.weights.cols

    def weight(self, i: int) -> tuple[int, ...]:
        return self.weights.col(i)

    def weight_set(self, indices: Iterable[int]) -> list[tuple[int, ...]]:
        return [self.weights.col(i) for i in sorted(indices)]


class Classification(enum.Enum):
    CONTAINED = "contained"
    NOT_CONTAINED = "not-contained"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class NullconeDecomposition:
    components: tuple[IndexSet, ...]


@dataclass(frozen=True)
class SepVarDecomposition:
    """Certificate for the separating-variety decomposition.

    The graph closure is always a piece; `simple` records whether the nullcone
    product is all that remains, in which case `triples` is empty.
    """

    simple: bool
    nullcone_pairs: tuple[tuple[IndexSet, IndexSet, Classification], ...]
    triples: tuple[tuple[IndexSet, IndexSet, IndexSet], ...]
    includes_graph: bool = field(default=True)


def _check_cap(rep: TorusRep, max_dim: int) -> None:
    if rep.dim > max_dim:
        raise DimensionTooLarge(
            f"subset enumeration capped at {max_dim} coordinates, got {rep.dim}"
        )


@functools.lru_cache(maxsize=None)
def nullcone(rep: TorusRep, *, max_dim: int = DEFAULT_MAX_DIM) -> NullconeDecomposition:
    """Maximal index sets whose weights keep 0 outside their convex hull.

    Each component is cross-checked by a strictly separating functional; a
    failure there would mean the two convex-geometry routes disagree.
    """
    _check_cap(rep, max_dim)
    n = rep.dim
    origin = (0,) * rep.rank
    maximal: list[IndexSet] = []
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            if any(set(subset) <= set(big) for big in maximal):
                continue
            if not in_convex_hull(rep.weight_set(subset), origin):
                maximal.append(subset)
    for comp in maximal:
        if separating_functional(rep.weight_set(comp)) is None:
            raise InvariantViolation(f"component {comp} admits no separating functional")
    return NullconeDecomposition(tuple(sorted(maximal)))


def is_orbit_closed(rep: TorusRep, support: Iterable[int]) -> bool:
    """Whether points with the given support have a closed orbit.

    The empty support is the origin, whose orbit is closed by convention.
    """
    idx = sorted(set(support))
    for i in idx:
        if not 0 <= i < rep.dim:
            raise ValueError(f"support index {i} out of range")
    if not idx:
        return True
    origin = (0,) * rep.rank
    return in_relative_interior(rep.weight_set(idx), origin)


def _relint_zero(rep: TorusRep, subset: Sequence[int]) -> bool:
    return in_relative_interior(rep.weight_set(subset), (0,) * rep.rank)


@functools.lru_cache(maxsize=None)
def sepvar_is_simple(rep: TorusRep, *, max_dim: int = DEFAULT_MAX_DIM) -> bool:
    """Whether every subset holding 0 in its relative interior spans full rank."""
    _check_cap(rep, max_dim)
    n, r = rep.dim, rep.rank
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            if _relint_zero(rep, subset):
                if rank(IntMatrix.from_rows(zip(*rep.weight_set(subset)))) != r:
                    return False
    return True


def graph_closure_classify(
    rep: TorusRep, comp_i: Iterable[int], comp_j: Iterable[int], *, max_dim: int = DEFAULT_MAX_DIM
) -> Classification:
    """Classify whether V_I x V_J lies in the graph closure.

    Disjoint components are contained; a nonzero kernel on the intersection
    rules containment out; no criterion applies in the remaining case.
    """
    i_set = tuple(sorted(set(comp_i)))
    j_set = tuple(sorted(set(comp_j)))
    components = set(nullcone(rep, max_dim=max_dim).components)
    for s in (i_set, j_set):
        if s not in components:
            raise NotNullconeComponent(f"{s} is not a nullcone component")
    meet = sorted(set(i_set) & set(j_set))
    if not meet:
        return Classification.CONTAINED
    if not restrict_kernel(rep.weights, meet).is_zero():
        return Classification.NOT_CONTAINED
    return Classification.UNKNOWN


@functools.lru_cache(maxsize=None)
def sepvar_decompose(rep: TorusRep, *, max_dim: int = DEFAULT_MAX_DIM) -> SepVarDecomposition:
    """Structured decomposition certificate for the separating variety.

    Pairs of nullcone components are listed with their graph-closure
    classification.  When the decomposition is not simple, the mixed pieces are
    reported as (K, I, J): K ranges over inclusion-minimal sets holding 0 in
    the relative interior of their weights (one representative per weight set),
    and (I, J) over componentwise-maximal pairs in the complement for which
    adjoining K keeps 0 off the relative interior.
    """
    _check_cap(rep, max_dim)
    simple = sepvar_is_simple(rep, max_dim=max_dim)
    components = nullcone(rep, max_dim=max_dim).components
    pairs = tuple(
        (ci, cj, graph_closure_classify(rep, ci, cj, max_dim=max_dim))
        for ci in components
        for cj in components
    )
    triples: list[tuple[IndexSet, IndexSet, IndexSet]] = []
    if not simple:
        n = rep.dim
        interior_sets: list[IndexSet] = []
        for size in range(1, n + 1):
            for subset in itertools.combinations(range(n), size):
                if _relint_zero(rep, subset):
                    interior_sets.append(subset)
        family = set(interior_sets)
        minimal = [
            k
            for k in interior_sets
            if not any(
                set(other) < set(k) for other in family if other != k
            )
        ]
        seen_weight_sets: dict[frozenset[tuple[int, ...]], IndexSet] = {}
        for k in sorted(minimal):
            key = frozenset(rep.weight_set(k))
            seen_weight_sets.setdefault(key, k)
        for k in sorted(seen_weight_sets.values()):
            complement = [i for i in range(n) if i not in k]
            valid: list[IndexSet] = []
            for size in range(len(complement), -1, -1):
                for extra in itertools.combinations(complement, size):
                    if not extra and size == 0:
                        continue  # K itself has 0 in the relative interior
                    if any(set(extra) <= set(big) for big in valid):
                        continue
                    if not _relint_zero(rep, tuple(sorted(k + extra))):
                        valid.append(extra)
            for part_i in sorted(valid):
                for part_j in sorted(valid):
                    triples.append((k, part_i, part_j))
    return SepVarDecomposition(simple, pairs, tuple(triples))
