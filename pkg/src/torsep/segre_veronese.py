"""Segre-Veronese cones: weight-matrix encodings, separating-size bounds, and
minimal monomial separating sets.

A spec fixes projective factor sizes n_i (>= 2), multidegrees a_i (>= 1) and a
characteristic.  Variables are ordered x_0 first, then the factors in order:
x_{1,1}..x_{1,n_1}, x_{2,1}, and so on.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .errors import InvariantViolation
from .septest import (
    DEFAULT_CHARP_CAP,
    check_separating_char0,
    small_support_generators,
)
from .semigroup import MonomialSemigroup
from .torusrep import TorusRep

__all__ = [
    "SVSpec",
    "BoundsReport",
    "reduce_inseparable",
    "sv_weight_matrix",
    "segre_weight_matrix",
    "separating_size_bounds",
    "monomial_min_size",
    "monomial_min_construction",
    "support_r_plus_2_separates",
    "variable_index",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(math.isqrt(p)) + 1))


@dataclass(frozen=True)
class SVSpec:
    """Parameters of a Segre-Veronese cone: factor sizes, degrees, characteristic."""

    factors: tuple[int, ...]
    degrees: tuple[int, ...]
    characteristic: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(int(x) for x in self.factors))
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        if len(self.factors) != len(self.degrees) or not self.factors:
            raise ValueError("factors and degrees must be nonempty lists of equal length")
        if any(n < 2 for n in self.factors):
            raise ValueError("every factor size must be at least 2")
        if any(a < 1 for a in self.degrees):
            raise ValueError("every degree must be at least 1")
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError("characteristic must be 0 or a prime")

    @property
    def num_factors(self) -> int:
        return len(self.factors)

    @property
    def ambient_dim(self) -> int:
        return 1 + sum(self.factors)


def variable_index(spec: SVSpec, factor: int, slot: int) -> int:
    """Index of x_{factor, slot} in the fixed variable order (both zero-based)."""
    if not 0 <= factor < spec.num_factors:
        raise ValueError("factor out of range")
    if not 0 <= slot < spec.factors[factor]:
        raise ValueError("slot out of range")
    return 1 + sum(spec.factors[:factor]) + slot


def _prime_to_p_part(a: int, p: int) -> int:
    while a % p == 0:
        a //= p
    return a


def reduce_inseparable(spec: SVSpec) -> SVSpec:
    """Strip characteristic powers from the degrees; a no-op in characteristic 0.

    The minimal separating-set size is unchanged by this reduction.
    """
    if spec.characteristic == 0:
        return spec
    p = spec.characteristic
    return replace(spec, degrees=tuple(_prime_to_p_part(a, p) for a in spec.degrees))


def _exceptional_factors(spec: SVSpec) -> set[int]:
    # factors whose degree is 1, or a pure characteristic power in characteristic p
    reduced = reduce_inseparable(spec)
    return {i for i, a in enumerate(reduced.degrees) if a == 1}


def sv_weight_matrix(spec: SVSpec) -> TorusRep:
    """Rank-r cone encoding: one column (-a_1,..,-a_r), then n_i copies of e_i."""
    r = spec.num_factors
    columns = [tuple(-a for a in spec.degrees)]
    for i in range(r):
        e = [0] * r
        e[i] = 1
        columns.extend([tuple(e)] * spec.factors[i])
    return TorusRep.from_columns(columns)


def segre_weight_matrix(factor_sizes: Sequence[int]) -> TorusRep:
    """Rank (r-1) encoding for a product of projective spaces.

    Factor i < r contributes n_i copies of e_i, the last factor n_r copies of
    -(e_1 + .. + e_{r-1}).
    """
    sizes = [int(n) for n in factor_sizes]
    if len(sizes) < 2:
        raise ValueError("the product encoding needs at least two factors")
    if any(n < 1 for n in sizes):
        raise ValueError("factor sizes must be positive")
    r = len(sizes)
    columns = []
    for i in range(r - 1):
        e = [0] * (r - 1)
        e[i] = 1
        columns.extend([tuple(e)] * sizes[i])
    columns.extend([tuple([-1] * (r - 1))] * sizes[r - 1])
    return TorusRep.from_columns(columns)


@dataclass(frozen=True)
class BoundsReport:
    """Case-tagged bounds on the minimal separating-set size.

    s_* bound the affine cone, s_prime_* the projective variety (one less).
    Cases 1 and 2 are exact, so lower and upper agree there.
    """

    case: int
    s_lower: int
    s_upper: int
    s_prime_lower: int
    s_prime_upper: int
    reduced_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.s_lower > self.s_upper:
            raise ValueError("lower bound exceeds upper bound")
        if (self.s_prime_lower, self.s_prime_upper) != (self.s_lower - 1, self.s_upper - 1):
            raise ValueError("projective bounds must be the affine bounds minus one")


def separating_size_bounds(spec: SVSpec) -> BoundsReport:
    """Minimal separating-set size for the cone, as an exact case analysis.

    Case 1: some reduced degree differs from 1 (exact value).
    Case 2: two factors, all reduced degrees 1 (exact value).
    Case 3: the rest; the lower bound drops the smallest factor, so the factor
    list is sorted ascending before it is applied.
    """
    reduced = reduce_inseparable(spec)
    n = reduced.factors
    r = reduced.num_factors
    total = sum(n)
    if any(a != 1 for a in reduced.degrees):
        case = 1
        s_lo = s_hi = 2 * total - 2 * r + 1
    elif r == 2:
        case = 2
        s_lo = s_hi = 2 * total - 4
    else:
        case = 3
        s_hi = 2 * total - 2 * r + 1
        s_lo = 2 * (total - min(n)) - 2 * r + 4
    return BoundsReport(case, s_lo, s_hi, s_lo - 1, s_hi - 1, reduced.degrees)


def monomial_min_size(spec: SVSpec) -> int:
    """Minimal size of a monomial separating set for the cone.

    Evaluates (prod n_h) * (1 + (1/2) * sum over non-exceptional factors of
    (n_i - 1)) exactly; the value is always integral.
    """
    exceptional = _exceptional_factors(spec)
    prod = math.prod(spec.factors)
    total = Fraction(prod)
    for i, n_i in enumerate(spec.factors):
        if i not in exceptional:
            total += Fraction(prod * (n_i - 1), 2)
    if total.denominator != 1:
        raise InvariantViolation(f"monomial bound {total} is not an integer")
    return int(total)


def monomial_min_construction(spec: SVSpec) -> MonomialSemigroup:
    """An explicit monomial separating set of the minimal size.

    One generator per choice of a slot in every factor (exponent a_i on the
    chosen slot, 1 on x_0); plus, for every non-exceptional factor and every
    slot pair j < j' there, one full-support generator per choice of slots in
    the other factors, with exponents 1 and a_i - 1 on the pair.
    """
    r = spec.num_factors
    dim = spec.ambient_dim
    rep = sv_weight_matrix(spec)
    exceptional = _exceptional_factors(spec)
    vectors: list[tuple[int, ...]] = []

    for combo in _slot_tuples(spec.factors):
        vec = [0] * dim
        vec[0] = 1
        for i, j in enumerate(combo):
            vec[variable_index(spec, i, j)] = spec.degrees[i]
        vectors.append(tuple(vec))

    for i0 in range(r):
        if i0 in exceptional:
            continue
        others = [i for i in range(r) if i != i0]
        for j, j_prime in itertools.combinations(range(spec.factors[i0]), 2):
            for combo in _slot_tuples([spec.factors[i] for i in others]):
                vec = [0] * dim
                vec[0] = 1
                vec[variable_index(spec, i0, j)] = 1
                vec[variable_index(spec, i0, j_prime)] = spec.degrees[i0] - 1
                for pos, i in enumerate(others):
                    vec[variable_index(spec, i, combo[pos])] = spec.degrees[i]
                vectors.append(tuple(vec))

    for vec in vectors:
        if any(rep.weights.mul_vector(vec)) or any(x < 0 for x in vec):
            raise InvariantViolation(f"constructed vector {vec} is not an invariant exponent")
    result = MonomialSemigroup(dim, tuple(vectors))
    expected = monomial_min_size(spec)
    if len(result.generators) != expected:
        raise InvariantViolation(
            f"construction produced {len(result.generators)} generators, expected {expected}"
        )
    return result


def _slot_tuples(sizes: Sequence[int]):
    yield from itertools.product(*(range(n) for n in sizes))


def support_r_plus_2_separates(spec: SVSpec, **caps) -> bool:
    """Check that invariants of support at most r+2 separate; guaranteed, so a
    negative outcome raises rather than returning False.

    The combinatorial criterion is used in every characteristic: it is
    sufficient over any field and avoids the exponent cap of the
    characteristic-p test.
    """
    rep = sv_weight_matrix(spec)
    bound = min(spec.num_factors + 2, rep.dim)
    harvest = small_support_generators(rep, bound, **caps)
    verdict = check_separating_char0(rep, harvest)
    if not verdict.separating:
        raise InvariantViolation(
            f"support-{bound} invariants failed the separation check: {verdict.certificate}"
        )
    return True
