"""Exact rational convex geometry over weight vectors.

Hull membership, relative-interior membership, Caratheodory certificates and
strictly separating functionals, all decided by a small exact-rational simplex
with Bland's anti-cycling rule.  Problem sizes here are tiny, so the dense
tableau is kept deliberately simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import NotInHull

__all__ = [
    "ConvexCombination",
    "in_convex_hull",
    "in_relative_interior",
    "caratheodory",
    "separating_functional",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

Point = tuple[Fraction, ...]


def _as_points(points: Sequence[Sequence]) -> list[Point]:
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if pts:
        dim = len(pts[0])
        if any(len(p) != dim for p in pts):
            raise ValueError("points of mixed dimension")
    return pts


def _as_point(target: Sequence, dim: int) -> Point:
    t = tuple(Fraction(x) for x in target)
    if len(t) != dim:
        raise ValueError("target dimension does not match the points")
    return t


# --- exact simplex ----------------------------------------------------------


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for i in range(len(tableau)):
        if i != row and tableau[i][col] != 0:
            factor = tableau[i][col]
            tableau[i] = [a - factor * b for a, b in zip(tableau[i], tableau[row])]
    basis[row] = col


def _run_simplex(
    tableau: list[list[Fraction]],
    basis: list[int],
    cost: list[Fraction],
    n_allowed: int,
) -> str:
    """Minimize cost over the tableau; only columns < n_allowed may enter."""
    m = len(tableau)
    while True:
        cb = [cost[basis[i]] for i in range(m)]
        entering = None
        for j in range(n_allowed):
            if j in basis:
                continue
            reduced = cost[j] - sum(cb[i] * tableau[i][j] for i in range(m))
            if reduced < 0:
                entering = j  # Bland: smallest improving index
                break
        if entering is None:
            return "optimal"
        leaving = None
        best = None
        for i in range(m):
            coef = tableau[i][entering]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            return "unbounded"
        _pivot(tableau, basis, leaving, entering)


def _solve_lp(
    rows: list[list[Fraction]],
    rhs: list[Fraction],
    cost: list[Fraction],
) -> tuple[str, Optional[list[Fraction]], Optional[Fraction]]:
    """Minimize cost . x subject to rows . x = rhs, x >= 0.

    Returns (status, x, value) with status in {"optimal", "infeasible", "unbounded"}.
    """
    m = len(rows)
    n = len(rows[0]) if m else len(cost)
    tableau: list[list[Fraction]] = []
    for i in range(m):
        row = list(rows[i])
        b = rhs[i]
        if b < 0:
            row = [-v for v in row]
            b = -b
        art = [_ZERO] * m
        art[i] = _ONE
        tableau.append(row + art + [b])
    basis = [n + i for i in range(m)]

    phase1 = [_ZERO] * n + [_ONE] * m
    status = _run_simplex(tableau, basis, phase1, n_allowed=n + m)
    assert status == "optimal", "phase-1 objective is bounded below by zero"
    if sum(phase1[basis[i]] * tableau[i][-1] for i in range(len(tableau))) > 0:
        return "infeasible", None, None

    # Pivot leftover artificial variables out; a row with no eligible pivot is redundant.
    i = 0
    while i < len(tableau):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                del tableau[i]
                del basis[i]
                continue
            _pivot(tableau, basis, i, col)
        i += 1

    cost2 = list(cost) + [_ZERO] * m
    status = _run_simplex(tableau, basis, cost2, n_allowed=n)
    if status == "unbounded":
        return "unbounded", None, None
    x = [_ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tableau[i][-1]
    value = sum(cost[j] * x[j] for j in range(n))
    return "optimal", x, value


def _hull_combination(points: list[Point], target: Point) -> Optional[list[Fraction]]:
    """Feasible barycentric coordinates for target over points, or None."""
    k = len(points)
    dim = len(target)
    rows = [[p[d] for p in points] for d in range(dim)]
    rows.append([_ONE] * k)
    rhs = [target[d] for d in range(dim)] + [_ONE]
    status, x, _ = _solve_lp(rows, rhs, [_ZERO] * k)
    return x if status == "optimal" else None


# --- public operations ------------------------------------------------------


@dataclass(frozen=True)
class ConvexCombination:
    """Indices into a point list and matching convex coefficients."""

    indices: tuple[int, ...]
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.coefficients):
            raise ValueError("indices and coefficients differ in length")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("convex coefficients must be nonnegative")
        if sum(self.coefficients, _ZERO) != 1:
            raise ValueError("convex coefficients must sum to one")

    def evaluate(self, points: Sequence[Sequence]) -> Point:
        pts = _as_points(points)
        dim = len(pts[0])
        acc = [_ZERO] * dim
        for i, c in zip(self.indices, self.coefficients):
            for d in range(dim):
                acc[d] += c * pts[i][d]
        return tuple(acc)


def in_convex_hull(points: Sequence[Sequence], target: Sequence) -> bool:
    """Whether target is a convex combination of the points (empty hull holds nothing)."""
    pts = _as_points(points)
    if not pts:
        return False
    tgt = _as_point(target, len(pts[0]))
    return _hull_combination(pts, tgt) is not None


def in_relative_interior(points: Sequence[Sequence], target: Sequence) -> bool:
    """Whether target admits a strictly positive convex combination of the points.

    Decided by maximizing t subject to lambda_i >= t, sum lambda = 1,
    sum lambda_i p_i = target, and testing whether the optimum is positive.
    """
    pts = _as_points(points)
    if not pts:
        return False
    tgt = _as_point(target, len(pts[0]))
    k = len(pts)
    dim = len(tgt)
    # columns: lambda_0..lambda_{k-1}, t, s_0..s_{k-1}
    width = 2 * k + 1
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for d in range(dim):
        row = [pts[i][d] for i in range(k)] + [_ZERO] * (k + 1)
        rows.append(row)
        rhs.append(tgt[d])
    rows.append([_ONE] * k + [_ZERO] * (k + 1))
    rhs.append(_ONE)
    for i in range(k):
        row = [_ZERO] * width
        row[i] = _ONE
        row[k] = -_ONE
        row[k + 1 + i] = -_ONE
        rows.append(row)
        rhs.append(_ZERO)
    cost = [_ZERO] * width
    cost[k] = -_ONE
    status, _, value = _solve_lp(rows, rhs, cost)
    if status == "infeasible":
        return False
    assert status == "optimal", "t is bounded above by 1/k"
    return -value > 0


def caratheodory(points: Sequence[Sequence], target: Sequence) -> ConvexCombination:
    """A convex combination for target supported on affinely independent points.

    The certificate comes from a basic feasible solution of the hull system, so
    it uses at most d+1 points where d is the dimension of the affine span.
    Raises NotInHull when no combination exists.
    """
    pts = _as_points(points)
    if not pts:
        raise NotInHull("the empty point set has empty hull")
    tgt = _as_point(target, len(pts[0]))
    for i, p in enumerate(pts):
        if p == tgt:
            return ConvexCombination((i,), (_ONE,))
    lam = _hull_combination(pts, tgt)
    if lam is None:
        raise NotInHull(f"target {tuple(map(str, tgt))} is outside the convex hull")
    indices = tuple(i for i, c in enumerate(lam) if c != 0)
    combo = ConvexCombination(indices, tuple(lam[i] for i in indices))
    assert combo.evaluate(pts) == tgt
    return combo


def separating_functional(
    points: Sequence[Sequence], *, dim: Optional[int] = None
) -> Optional[tuple[int, ...]]:
    """An integer functional delta with delta . p > 0 for every point, or None.

    None is returned exactly when 0 lies in the convex hull of the points
    (Gordan duality).  The output is scaled to coprime integer entries.
    """
    pts = _as_points(points)
    if not pts:
        if dim is None:
            raise ValueError("dim is required to build a functional over no points")
        return tuple([0] * dim)
    r = len(pts[0])
    if dim is not None and dim != r:
        raise ValueError("dim does not match the points")
    k = len(pts)
    # columns: u_0..u_{r-1}, w_0..w_{r-1}, s_0..s_{k-1}; delta = u - w
    width = 2 * r + k
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for j in range(k):
        row = [_ZERO] * width
        for d in range(r):
            row[d] = pts[j][d]
            row[r + d] = -pts[j][d]
        row[2 * r + j] = -_ONE
        rows.append(row)
        rhs.append(_ONE)
    status, x, _ = _solve_lp(rows, rhs, [_ZERO] * width)
    if status != "optimal":
        return None
    delta = [x[d] - x[r + d] for d in range(r)]
    denom = lcm(*(f.denominator for f in delta)) if delta else 1
    ints = [int(f * denom) for f in delta]
    common = gcd(*ints) if any(ints) else 1
    return tuple(v // common for v in ints)
