"""The invariant monomial semigroup L = ker_Z(A) intersect N^n.

Hilbert bases are computed by a completion-style frontier search over
nonnegative vectors: extend a vector by one coordinate only when that step
shrinks the image squared norm, prune anything dominating a known minimal
element.  Adequate for the dimension cap enforced here.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionTooLarge, GeneratorNotInvariant
from .lattice import IntMatrix, LatticeBasis, lattice_member

__all__ = [
    "DEFAULT_MAX_DIM",
    "MonomialSemigroup",
    "HilbertBasis",
    "hilbert_basis",
    "hilbert_basis_restricted",
    "member",
    "generated_lattice",
    "restrict_semigroup",
]

DEFAULT_MAX_DIM = 12

Vector = tuple[int, ...]


def _grlex_key(v: Vector) -> tuple[int, Vector]:
    return (sum(v), v)


def _support(v: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(v) if x)


def _check_exponent_vector(v: Sequence[int], dim: int) -> Vector:
    t = tuple(int(x) for x in v)
    if len(t) != dim:
        raise ValueError("exponent vector length does not match ambient dimension")
    if any(x < 0 for x in t):
        raise ValueError("exponent vectors must be nonnegative")
    return t


@dataclass(frozen=True)
class MonomialSemigroup:
    """A subsemigroup of N^n presented by an explicit generator list.

    Generators are deduplicated, sorted graded-lexicographically, and must be
    nonzero with nonnegative entries.  The presentation is the object: no
    saturation or completion is ever implied.
    """

    ambient_dim: int
    generators: tuple[Vector, ...]

    def __post_init__(self) -> None:
        gens = sorted(
            {_check_exponent_vector(g, self.ambient_dim) for g in self.generators},
            key=_grlex_key,
        )
        if any(not any(g) for g in gens):
            raise ValueError("the zero vector is not a valid generator")
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def for_rep(cls, rep, generators: Iterable[Sequence[int]]) -> "MonomialSemigroup":
        """Build a presentation validated against a representation's weight matrix."""
        sg = cls(rep.dim, tuple(tuple(g) for g in generators))
        for g in sg.generators:
            if any(rep.weights.mul_vector(g)):
                raise GeneratorNotInvariant(f"generator {g} is not in the kernel of the weight matrix")
        return sg


@dataclass(frozen=True)
class HilbertBasis:
    """The minimal generating set of L, in graded-lexicographic order."""

    ambient_dim: int
    elements: tuple[Vector, ...]

    def __post_init__(self) -> None:
        elems = tuple(sorted((_check_exponent_vector(e, self.ambient_dim) for e in self.elements), key=_grlex_key))
        object.__setattr__(self, "elements", elems)

    def as_semigroup(self) -> MonomialSemigroup:
        return MonomialSemigroup(self.ambient_dim, self.elements)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


@functools.lru_cache(maxsize=None)
def _minimal_kernel_elements(entries: tuple[tuple[int, ...], ...]) -> tuple[Vector, ...]:
    """All componentwise-minimal nonzero elements of ker(A) intersect N^n."""
    m = len(entries)
    n = len(entries[0])
    columns = [tuple(entries[i][j] for i in range(m)) for j in range(n)]
    zero_img = (0,) * m

    minimal: list[Vector] = []

    def dominated(t: Vector) -> bool:
        return any(all(a >= b for a, b in zip(t, h)) for h in minimal)

    frontier: dict[Vector, Vector] = {}
    for j in range(n):
        e = [0] * n
        e[j] = 1
        frontier[tuple(e)] = columns[j]

    while frontier:
        nxt: dict[Vector, Vector] = {}
        for t, img in sorted(frontier.items()):
            if img == zero_img:
                if not dominated(t):
                    minimal.append(t)
                continue
            for j in range(n):
                if _dot(img, columns[j]) < 0:
                    t2 = list(t)
                    t2[j] += 1
                    t2 = tuple(t2)
                    if t2 in nxt or dominated(t2):
                        continue
                    nxt[t2] = tuple(a + b for a, b in zip(img, columns[j]))
        frontier = nxt
    return tuple(sorted(minimal, key=_grlex_key))


def hilbert_basis(matrix: IntMatrix, *, max_dim: int = DEFAULT_MAX_DIM) -> HilbertBasis:
    """The unique minimal generating set of ker_Z(matrix) intersect N^n."""
    if matrix.cols > max_dim:
        raise DimensionTooLarge(
            f"Hilbert basis enumeration capped at {max_dim} variables, got {matrix.cols}"
        )
    return HilbertBasis(matrix.cols, _minimal_kernel_elements(matrix.entries))


def hilbert_basis_restricted(
    matrix: IntMatrix, support: Iterable[int], *, max_dim: int = DEFAULT_MAX_DIM
) -> HilbertBasis:
    """Hilbert basis of the elements supported inside `support`, embedded in N^n."""
    idx = sorted(set(support))
    n = matrix.cols
    for j in idx:
        if not 0 <= j < n:
            raise ValueError(f"support index {j} out of range")
    if not idx:
        return HilbertBasis(n, ())
    if len(idx) > max_dim:
        raise DimensionTooLarge(
            f"Hilbert basis enumeration capped at {max_dim} variables, got {len(idx)}"
        )
    sub = tuple(tuple(row[j] for j in idx) for row in matrix.entries)
    embedded = []
    for vec in _minimal_kernel_elements(sub):
        full = [0] * n
        for pos, j in enumerate(idx):
            full[j] = vec[pos]
        embedded.append(tuple(full))
    return HilbertBasis(n, tuple(embedded))


def generated_lattice(semigroup: MonomialSemigroup) -> LatticeBasis:
    """Basis of the sublattice of Z^n spanned by the generators."""
    return LatticeBasis(semigroup.ambient_dim, semigroup.generators)


@functools.lru_cache(maxsize=None)
def _generated_lattice_cached(semigroup: MonomialSemigroup) -> LatticeBasis:
    return generated_lattice(semigroup)


def restrict_semigroup(semigroup: MonomialSemigroup, support: Iterable[int]) -> MonomialSemigroup:
    """Sub-presentation of the generators supported inside `support`."""
    idx = set(support)
    for j in idx:
        if not 0 <= j < semigroup.ambient_dim:
            raise ValueError(f"support index {j} out of range")
    kept = tuple(g for g in semigroup.generators if _support(g) <= idx)
    return MonomialSemigroup(semigroup.ambient_dim, kept)


def member(semigroup: MonomialSemigroup, target: Sequence[int]) -> bool:
    """Whether target is a finite N-combination of the generators.

    Depth-first over generators in decreasing degree, choosing a multiplicity
    for each in turn, with memoization on (generator index, residual).
    """
    t = _check_exponent_vector(target, semigroup.ambient_dim)
    if not any(t):
        return True
    gens = sorted(semigroup.generators, key=_grlex_key, reverse=True)
    if not gens:
        return False
    if not lattice_member(_generated_lattice_cached(semigroup), t):
        return False
    # union of supports of gens[i:], for fast infeasibility detection
    suffix_support: list[frozenset[int]] = [frozenset()] * (len(gens) + 1)
    for i in range(len(gens) - 1, -1, -1):
        suffix_support[i] = suffix_support[i + 1] | _support(gens[i])

    memo: dict[tuple[int, Vector], bool] = {}

    def search(idx: int, residual: Vector) -> bool:
        if not any(residual):
            return True
        if idx == len(gens):
            return False
        key = (idx, residual)
        cached = memo.get(key)
        if cached is not None:
            return cached
        result = False
        if _support(residual) <= suffix_support[idx]:
            g = gens[idx]
            k_max = min(residual[i] // g[i] for i in range(len(g)) if g[i])
            for k in range(k_max, -1, -1):
                nxt = tuple(r - k * x for r, x in zip(residual, g))
                if search(idx + 1, nxt):
                    result = True
                    break
        memo[key] = result
        return result

    return search(0, t)
