"""Decision procedures and constructions for monomial separating algebras.

Characteristic-zero separation is decided by a purely combinatorial criterion
on the presentation: every restricted Hilbert-basis element must lie in the
integer span of the generators sharing its support, and every support pattern
of an invariant must be witnessed by a generator.  In characteristic p the
criterion is the existence of an exponent m with p^m . L inside the semigroup,
searched up to a configurable cap.  A finite evaluation oracle over roots of
unity provides one-sided refutations.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import DimensionTooLarge, InvariantViolation, SearchSpaceTooLarge
from .lattice import lattice_member
from .semigroup import (
    DEFAULT_MAX_DIM as HILBERT_MAX_DIM,
    HilbertBasis,
    MonomialSemigroup,
    _generated_lattice_cached,
    hilbert_basis,
    hilbert_basis_restricted,
    member,
    restrict_semigroup,
)
from .torusrep import DEFAULT_MAX_DIM as SUBSET_MAX_DIM, TorusRep

__all__ = [
    "DEFAULT_CHARP_CAP",
    "DEFAULT_SEARCH_BUDGET",
    "DEFAULT_ORACLE_MODULUS",
    "DEFAULT_ORACLE_BUDGET",
    "LatticeCertificate",
    "SupportCertificate",
    "PPowerCertificate",
    "SeparatingVerdict",
    "CharPVerdict",
    "TorusPoint",
    "Refutation",
    "MinSearchResult",
    "check_separating_char0",
    "check_separating_charp",
    "verify_certificate",
    "small_support_generators",
    "construct_2rplus1",
    "kernel_small_support_spans",
    "minimal_monomial_size",
    "oracle_refute",
]

DEFAULT_CHARP_CAP = 8
DEFAULT_SEARCH_BUDGET = 200_000
DEFAULT_ORACLE_MODULUS = 2 * 3 * 5 * 7
DEFAULT_ORACLE_BUDGET = 5000

Vector = tuple[int, ...]


def _support(v: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(v) if x)


@functools.lru_cache(maxsize=None)
def _rep_hilbert_basis(rep: TorusRep, max_dim: int = HILBERT_MAX_DIM) -> HilbertBasis:
    return hilbert_basis(rep.weights, max_dim=max_dim)


@dataclass(frozen=True)
class LatticeCertificate:
    """Witness alpha in L_I that is not an integer combination of S_I."""

    support: Vector
    witness: Vector


@dataclass(frozen=True)
class SupportCertificate:
    """Invariant alpha and index i with no generator support wedged between them."""

    witness: Vector
    index: int


@dataclass(frozen=True)
class PPowerCertificate:
    """Basis element whose p^m multiples stay outside the semigroup up to the cap."""

    element: Vector
    prime: int
    cap: int


Certificate = Union[LatticeCertificate, SupportCertificate, PPowerCertificate]


@dataclass(frozen=True)
class SeparatingVerdict:
    separating: bool
    certificate: Optional[Certificate] = None


@dataclass(frozen=True)
class CharPVerdict:
    """Yes(m) when p^m . L lands in the semigroup; otherwise NoUpTo(cap)."""

    is_yes: bool
    m: Optional[int]
    cap: int
    certificate: Optional[PPowerCertificate] = None


def _validate_pair(rep: TorusRep, semigroup: MonomialSemigroup) -> MonomialSemigroup:
    if semigroup.ambient_dim != rep.dim:
        raise ValueError("semigroup ambient dimension does not match the representation")
    return MonomialSemigroup.for_rep(rep, semigroup.generators)


def check_separating_char0(
    rep: TorusRep,
    semigroup: MonomialSemigroup,
    *,
    hilbert_max_dim: int = HILBERT_MAX_DIM,
) -> SeparatingVerdict:
    """Combinatorial separation test for the subalgebra presented by `semigroup`.

    For the lattice condition only I = supp(h) is checked per Hilbert-basis
    element h: larger I only enlarge the generator lattice, and restricted
    Hilbert bases are exactly the full-basis elements with support inside I.
    The support condition on generators is equivalent to quantifying over the
    whole semigroup because supports of sums are unions of supports.
    """
    sg = _validate_pair(rep, semigroup)
    basis = _rep_hilbert_basis(rep, hilbert_max_dim).elements
    for h in basis:
        supp = tuple(sorted(_support(h)))
        restricted = restrict_semigroup(sg, supp)
        if not lattice_member(_generated_lattice_cached(restricted), h):
            return SeparatingVerdict(False, LatticeCertificate(supp, h))
    for h in basis:
        h_supp = _support(h)
        for i in sorted(h_supp):
            if not any(i in _support(g) and _support(g) <= h_supp for g in sg.generators):
                return SeparatingVerdict(False, SupportCertificate(h, i))
    return SeparatingVerdict(True)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, int(math.isqrt(p)) + 1):
        if p % d == 0:
            return False
    return True


def check_separating_charp(
    rep: TorusRep,
    semigroup: MonomialSemigroup,
    p: int,
    cap: int = DEFAULT_CHARP_CAP,
    *,
    hilbert_max_dim: int = HILBERT_MAX_DIM,
) -> CharPVerdict:
    """Search for m <= cap with p^m . L inside the semigroup.

    Testing Hilbert-basis elements suffices: once p^m h lies in the semigroup
    so does every higher power, and arbitrary invariants are N-combinations of
    basis elements.  The answer is three-valued; exhausting the cap proves
    nothing beyond it.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if cap < 1:
        raise ValueError("cap must be at least 1")
    sg = _validate_pair(rep, semigroup)
    worst = 1
    for h in _rep_hilbert_basis(rep, hilbert_max_dim).elements:
        found = None
        for m in range(1, cap + 1):
            scaled = tuple(p**m * x for x in h)
            if member(sg, scaled):
                found = m
                break
        if found is None:
            return CharPVerdict(False, None, cap, PPowerCertificate(h, p, cap))
        worst = max(worst, found)
    return CharPVerdict(True, worst, cap)


def verify_certificate(
    rep: TorusRep, semigroup: MonomialSemigroup, certificate: Certificate
) -> bool:
    """Re-check a failure certificate against the raw lattice/semigroup primitives."""
    sg = _validate_pair(rep, semigroup)
    if isinstance(certificate, LatticeCertificate):
        alpha = certificate.witness
        if any(x < 0 for x in alpha) or any(rep.weights.mul_vector(alpha)):
            return False
        if not _support(alpha) <= set(certificate.support):
            return False
        restricted = restrict_semigroup(sg, certificate.support)
        return not lattice_member(_generated_lattice_cached(restricted), alpha)
    if isinstance(certificate, SupportCertificate):
        alpha = certificate.witness
        if any(x < 0 for x in alpha) or any(rep.weights.mul_vector(alpha)):
            return False
        if certificate.index not in _support(alpha):
            return False
        return not any(
            certificate.index in _support(g) and _support(g) <= _support(alpha)
            for g in sg.generators
        )
    if isinstance(certificate, PPowerCertificate):
        h = certificate.element
        if any(x < 0 for x in h) or any(rep.weights.mul_vector(h)):
            return False
        return all(
            not member(sg, tuple(certificate.prime**m * x for x in h))
            for m in range(1, certificate.cap + 1)
        )
    raise TypeError(f"unknown certificate type {type(certificate).__name__}")


def small_support_generators(
    rep: TorusRep,
    bound: int,
    *,
    max_dim: int = SUBSET_MAX_DIM,
    hilbert_max_dim: int = HILBERT_MAX_DIM,
) -> MonomialSemigroup:
    """Presentation of the subsemigroup generated by invariants of support <= bound.

    Harvested as the union of restricted Hilbert bases over all index sets of
    size min(bound, n); every small-support invariant is an N-combination of
    these.
    """
    n = rep.dim
    if not 1 <= bound <= n:
        raise ValueError(f"bound must lie in [1, {n}], got {bound}")
    if n > max_dim:
        raise DimensionTooLarge(f"subset enumeration capped at {max_dim} coordinates, got {n}")
    size = min(bound, n)
    harvested: set[Vector] = set()
    for subset in itertools.combinations(range(n), size):
        harvested.update(hilbert_basis_restricted(rep.weights, subset, max_dim=hilbert_max_dim).elements)
    return MonomialSemigroup(n, tuple(harvested))


def construct_2rplus1(rep: TorusRep, **caps) -> MonomialSemigroup:
    """Generators of support at most 2r+1; guaranteed separating, and asserted so."""
    bound = min(2 * rep.rank + 1, rep.dim)
    result = small_support_generators(rep, bound, **caps)
    verdict = check_separating_char0(rep, result)
    if not verdict.separating:
        raise InvariantViolation(
            f"support-{bound} harvest failed the separation check: {verdict.certificate}"
        )
    return result


def kernel_small_support_spans(
    rep: TorusRep, *, max_dim: int = SUBSET_MAX_DIM
) -> tuple[bool, tuple[Vector, ...]]:
    """Whether kernel vectors with at most r+1 nonzero entries span the kernel.

    This always holds; a negative answer is raised as an invariant violation
    rather than returned.  The collected generating vectors are returned as a
    witness alongside the boolean.
    """
    from .lattice import kernel_basis, lattice_equal, LatticeBasis, restrict_kernel

    n = rep.dim
    if n > max_dim:
        raise DimensionTooLarge(f"subset enumeration capped at {max_dim} coordinates, got {n}")
    size = min(rep.rank + 1, n)
    collected: list[Vector] = []
    for subset in itertools.combinations(range(n), size):
        collected.extend(restrict_kernel(rep.weights, subset).vectors)
    witness = tuple(sorted(set(collected)))
    spans = lattice_equal(LatticeBasis(n, witness), kernel_basis(rep.weights))
    if not spans:
        raise InvariantViolation("small-support kernel vectors failed to span the kernel")
    return spans, witness


@dataclass(frozen=True)
class MinSearchResult:
    """Smallest separating subset found inside an explicit pool of generators.

    Minimality is relative to the pool searched, never absolute.
    """

    size: int
    witness: tuple[Vector, ...]
    pool_relative: bool = True


def minimal_monomial_size(
    rep: TorusRep,
    pool: MonomialSemigroup,
    cap: int,
    *,
    p: Optional[int] = None,
    charp_cap: int = DEFAULT_CHARP_CAP,
    budget: int = DEFAULT_SEARCH_BUDGET,
    hilbert_max_dim: int = HILBERT_MAX_DIM,
) -> Optional[MinSearchResult]:
    """Search pool subsets by increasing cardinality for a separating one.

    Returns the lexicographically first witness of minimal size up to `cap`,
    or None when no subset within the cap separates.  With a prime configured
    the characteristic-p checker decides passing, otherwise the combinatorial
    characteristic-zero test does.
    """
    sg = _validate_pair(rep, pool)
    gens = sg.generators
    if cap < 0:
        raise ValueError("cap must be nonnegative")

    def passes(subset: tuple[Vector, ...]) -> bool:
        candidate = MonomialSemigroup(rep.dim, subset)
        if p is None:
            return check_separating_char0(rep, candidate, hilbert_max_dim=hilbert_max_dim).separating
        return check_separating_charp(
            rep, candidate, p, cap=charp_cap, hilbert_max_dim=hilbert_max_dim
        ).is_yes

    for k in range(0, min(cap, len(gens)) + 1):
        if math.comb(len(gens), k) > budget:
            raise SearchSpaceTooLarge(
                f"C({len(gens)}, {k}) exceeds the search budget of {budget}"
            )
        for subset in itertools.combinations(gens, k):
            if passes(subset):
                return MinSearchResult(k, subset)
    return None


@dataclass(frozen=True)
class TorusPoint:
    """Point with coordinates that are zero or roots of unity of a fixed order.

    A unit coordinate is stored as an exponent class in Z/modulus; None marks a
    zero coordinate.  Monomial evaluation is zero when any supporting
    coordinate is zero, else the class of the weighted exponent sum.
    """

    modulus: int
    coords: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be at least 1")
        norm = tuple(None if c is None else int(c) % self.modulus for c in self.coords)
        object.__setattr__(self, "coords", norm)

    def eval_monomial(self, exponents: Sequence[int]) -> Optional[int]:
        if len(exponents) != len(self.coords):
            raise ValueError("exponent length does not match point dimension")
        total = 0
        for e, c in zip(exponents, self.coords):
            if not e:
                continue
            if c is None:
                return None
            total += e * c
        return total % self.modulus


@dataclass(frozen=True)
class Refutation:
    u: TorusPoint
    v: TorusPoint
    separator: Vector


def _separates(point_u: TorusPoint, point_v: TorusPoint, alpha: Vector) -> bool:
    return point_u.eval_monomial(alpha) != point_v.eval_monomial(alpha)


def oracle_refute(
    rep: TorusRep,
    semigroup: MonomialSemigroup,
    modulus: int = DEFAULT_ORACLE_MODULUS,
    budget: int = DEFAULT_ORACLE_BUDGET,
    *,
    hilbert_max_dim: int = HILBERT_MAX_DIM,
) -> Optional[Refutation]:
    """Hunt for a point pair separated by an invariant but by no generator.

    Enumerates 0/1 support patterns drawn from Hilbert-basis supports and unit
    points differing in a single coordinate class, evaluating every basis
    monomial and every generator.  Checking basis monomials and generators is
    enough on either side because monomial evaluation is multiplicative.
    None is not a proof of separation.
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    sg = _validate_pair(rep, semigroup)
    basis = _rep_hilbert_basis(rep, hilbert_max_dim).elements
    n = rep.dim

    def refutes(u: TorusPoint, v: TorusPoint) -> Optional[Vector]:
        if any(_separates(u, v, g) for g in sg.generators):
            return None
        for h in basis:
            if _separates(u, v, h):
                return h
        return None

    def unit_point(support: Iterable[int]) -> TorusPoint:
        idx = set(support)
        return TorusPoint(modulus, tuple(0 if i in idx else None for i in range(n)))

    def candidate_pairs():
        for h in basis:
            supp = sorted(_support(h))
            for dropped in supp:
                yield unit_point(supp), unit_point(set(supp) - {dropped})
        supports = [tuple(range(n))] + [tuple(sorted(_support(h))) for h in basis]
        for supp in supports:
            base = unit_point(supp)
            for i in supp:
                for cls in range(1, modulus):
                    coords = list(base.coords)
                    coords[i] = cls
                    yield base, TorusPoint(modulus, tuple(coords))

    examined = 0
    for u, v in candidate_pairs():
        if examined >= budget:
            break
        examined += 1
        separator = refutes(u, v)
        if separator is not None:
            return Refutation(u, v, separator)
    return None
