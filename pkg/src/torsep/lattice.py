"""Exact integer linear algebra: Hermite normal form, kernel lattices, membership.

All matrices carry arbitrary-precision Python integers.  Row Hermite normal
form with positive pivots and reduced entries above each pivot is used as the
canonical presentation of a sublattice of Z^n, so two bases generate the same
lattice exactly when their canonical forms are literally equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "LatticeBasis",
    "hnf",
    "determinant",
    "rank",
    "kernel_basis",
    "lattice_member",
    "lattice_equal",
    "restrict_kernel",
]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1 or len(self.entries[0]) < 1:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged rows in matrix")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        cols = list(zip(*other.entries))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def mul_vector(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)


def _hnf_rows(rows: list[list[int]], track: bool) -> tuple[list[list[int]], list[list[int]]]:
    """Row-reduce `rows` in place to Hermite normal form.

    Returns (H, U) with H = U * input when `track` is set, else U is empty.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)] if track else []

    def combine(i: int, k: int, a: int, b: int, c: int, d: int) -> None:
        # rows[i], rows[k] <- a*rows[i] + b*rows[k], c*rows[i] + d*rows[k]
        rows[i], rows[k] = (
            [a * x + b * y for x, y in zip(rows[i], rows[k])],
            [c * x + d * y for x, y in zip(rows[i], rows[k])],
        )
        if track:
            u[i], u[k] = (
                [a * x + b * y for x, y in zip(u[i], u[k])],
                [c * x + d * y for x, y in zip(u[i], u[k])],
            )

    pivot_row = 0
    for col in range(n):
        piv = next((i for i in range(pivot_row, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        if piv != pivot_row:
            rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
            if track:
                u[pivot_row], u[piv] = u[piv], u[pivot_row]
        for i in range(pivot_row + 1, m):
            if rows[i][col] == 0:
                continue
            a, b = rows[pivot_row][col], rows[i][col]
            g, x, y = _ext_gcd(a, b)
            # the 2x2 transform [[x, y], [-b//g, a//g]] has determinant 1
            combine(pivot_row, i, x, y, -(b // g), a // g)
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-x for x in rows[pivot_row]]
            if track:
                u[pivot_row] = [-x for x in u[pivot_row]]
        p = rows[pivot_row][col]
        for i in range(pivot_row):
            q = rows[i][col] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
                if track:
                    u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return rows, u


def hnf(matrix: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns (H, U) with H = U * matrix, U unimodular, pivots positive, entries
    above each pivot reduced into [0, pivot), and zero rows last.
    """
    rows = [list(r) for r in matrix.entries]
    h, u = _hnf_rows(rows, track=True)
    return IntMatrix.from_rows(h), IntMatrix.from_rows(u)


def determinant(matrix: IntMatrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    if matrix.rows != matrix.cols:
        raise ValueError("determinant requires a square matrix")
    n = matrix.rows
    a = [list(r) for r in matrix.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(matrix: IntMatrix) -> int:
    """Rank over the rationals, computed by exact row reduction."""
    rows = [list(r) for r in matrix.entries]
    h, _ = _hnf_rows(rows, track=False)
    return sum(1 for row in h if any(row))


def _canonical_rows(ambient_dim: int, vectors: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    vecs = [list(int(x) for x in v) for v in vectors]
    for v in vecs:
        if len(v) != ambient_dim:
            raise ValueError("basis vector length does not match ambient dimension")
    if not vecs:
        return ()
    h, _ = _hnf_rows(vecs, track=False)
    return tuple(tuple(row) for row in h if any(row))


@dataclass(frozen=True)
class LatticeBasis:
    """Basis of a sublattice of Z^n, held in canonical row-HNF form.

    Any generating set may be passed in; the constructor canonicalizes, so two
    LatticeBasis values are equal exactly when they present the same lattice.
    """

    ambient_dim: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        object.__setattr__(self, "vectors", _canonical_rows(self.ambient_dim, self.vectors))

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def is_zero(self) -> bool:
        return not self.vectors


def kernel_basis(matrix: IntMatrix) -> LatticeBasis:
    """Basis of the integer kernel {v : matrix @ v = 0}.

    Row-reduce the transpose with a tracked unimodular U; the U-rows matching
    zero rows of the HNF generate the kernel lattice.
    """
    h, u = hnf(matrix.transpose())
    gens = [u.row(i) for i in range(h.rows) if not any(h.row(i))]
    return LatticeBasis(matrix.cols, tuple(gens))


def lattice_member(basis: LatticeBasis, v: Sequence[int]) -> bool:
    """Whether v is an integer combination of the basis vectors."""
    if len(v) != basis.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    residual = [int(x) for x in v]
    for row in basis.vectors:
        pivot_col = next(j for j, x in enumerate(row) if x)
        coeff, rem = divmod(residual[pivot_col], row[pivot_col])
        if rem:
            return False
        if coeff:
            residual = [x - coeff * y for x, y in zip(residual, row)]
    return not any(residual)


def lattice_equal(basis1: LatticeBasis, basis2: LatticeBasis) -> bool:
    """Whether two bases generate the same sublattice (canonical forms coincide)."""
    if basis1.ambient_dim != basis2.ambient_dim:
        raise ValueError("lattice bases live in different ambient dimensions")
    return basis1.vectors == basis2.vectors


def restrict_kernel(matrix: IntMatrix, support: Iterable[int]) -> LatticeBasis:
    """Basis of the kernel vectors supported inside `support`, embedded in Z^cols."""
    idx = sorted(set(support))
    n = matrix.cols
    for j in idx:
        if not 0 <= j < n:
            raise ValueError(f"support index {j} out of range")
    if not idx:
        return LatticeBasis(n, ())
    sub = IntMatrix.from_rows((row[j] for j in idx) for row in matrix.entries)
    inner = kernel_basis(sub)
    embedded = []
    for vec in inner.vectors:
        full = [0] * n
        for pos, j in enumerate(idx):
            full[j] = vec[pos]
        embedded.append(tuple(full))
    return LatticeBasis(n, tuple(embedded))
