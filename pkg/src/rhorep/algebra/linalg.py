"""
Dense exact matrices over a coefficient ring, with Gauss-Jordan elimination.

Entries are CycNum, LPoly3 or LRat; elimination needs a field (CycNum, LRat).
Column k of a generator matrix holds the coordinates of the image of basis vector k.
"""

from __future__ import annotations

import logging
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from ..errors import InconsistentSystemError, NotInvertibleError, ParameterError

logger = logging.getLogger(__name__)


def _is_zero(x) -> bool:
    return not x


def _complexity(x) -> int:
    return getattr(x, "complexity", 1)


class RepMatrix:
    """Immutable rectangular matrix over `ring`."""

    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring, rows: Iterable[Sequence], ncols: Optional[int] = None):
        self.ring = ring
        self.rows = tuple(tuple(ring(x) if isinstance(x, int) else x for x in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = ncols if ncols is not None else (len(self.rows[0]) if self.rows else 0)
        for row in self.rows:
            if len(row) != self.ncols:
                raise ParameterError(f"ragged matrix: row of length {len(row)} in a {self.nrows}x{self.ncols} matrix")

    # construction

    @classmethod
    def zeros(cls, ring, nrows: int, ncols: int) -> "RepMatrix":
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, ring, n: int) -> "RepMatrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, ring, columns: Sequence[Sequence], nrows: Optional[int] = None) -> "RepMatrix":
        if not columns:
            return cls.zeros(ring, nrows or 0, 0)
        height = len(columns[0])
        return cls(ring, [[col[i] for col in columns] for i in range(height)], len(columns))

    @classmethod
    def from_dict(cls, ring, nrows: int, ncols: int, entries: dict[tuple[int, int], object]) -> "RepMatrix":
        rows = [[ring.zero] * ncols for _ in range(nrows)]
        for (i, j), value in entries.items():
            rows[i][j] = rows[i][j] + value
        return cls(ring, rows, ncols)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        return self.rows[i][j]

    def column(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.ncols)]

    def to_lists(self) -> list[list]:
        return [list(row) for row in self.rows]

    def transpose(self) -> "RepMatrix":
        return RepMatrix(self.ring, self.columns(), self.nrows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RepMatrix":
        return RepMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def hstack(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.ring, [a + b for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def map(self, fn: Callable, ring=None) -> "RepMatrix":
        """Apply `fn` entrywise, e.g. a specialization into another ring."""
        target = ring if ring is not None else self.ring
        return RepMatrix(target, [[fn(x) for x in row] for row in self.rows], self.ncols)

    # arithmetic

    def apply(self, vector: Sequence) -> list:
        if len(vector) != self.ncols:
            raise ParameterError(f"vector of length {len(vector)} for a {self.nrows}x{self.ncols} matrix")
        support = [(j, v) for j, v in enumerate(vector) if not _is_zero(v)]
        out = []
        for row in self.rows:
            acc = self.ring.zero
            for j, v in support:
                if not _is_zero(row[j]):
                    acc = acc + row[j] * v
            out.append(acc)
        return out

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ParameterError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [self.apply(col) for col in other.columns()]
        return RepMatrix.from_columns(self.ring, cols, self.nrows) if cols else RepMatrix.zeros(self.ring, self.nrows, 0)

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.ring, [[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.ring, [[x - y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> "RepMatrix":
        return RepMatrix(self.ring, [[-x for x in row] for row in self.rows], self.ncols)

    def scale(self, c) -> "RepMatrix":
        return RepMatrix(self.ring, [[c * x for x in row] for row in self.rows], self.ncols)

    def power(self, k: int) -> "RepMatrix":
        if self.nrows != self.ncols:
            raise ParameterError("power of a non-square matrix")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = RepMatrix.identity(self.ring, self.nrows)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.shape == other.shape and all(_is_zero(x - y) for a, b in zip(self.rows, other.rows) for x, y in zip(a, b))

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return all(_is_zero(x) for row in self.rows for x in row)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == RepMatrix.identity(self.ring, self.nrows)

    def is_scalar(self, c) -> bool:
        return self.nrows == self.ncols and self == RepMatrix.identity(self.ring, self.nrows).scale(c)

    # elimination

    def rank(self) -> int:
        _, pivots = row_reduce(self.to_lists(), self.ncols)
        return len(pivots)

    def nullspace(self) -> list[list]:
        """Basis of {x : Mx = 0}, one vector per free column of the reduced echelon form."""
        reduced, pivots = row_reduce(self.to_lists(), self.ncols)
        pivot_cols = {c: i for i, c in enumerate(pivots)}
        basis = []
        for free in range(self.ncols):
            if free in pivot_cols:
                continue
            vec = [self.ring.zero] * self.ncols
            vec[free] = self.ring.one
            for c, i in pivot_cols.items():
                vec[c] = -reduced[i][free]
            basis.append(vec)
        return basis

    def solve(self, rhs: "RepMatrix", require_unique: bool = False) -> "RepMatrix":
        """
        Solve self @ X = rhs.

        Raises InconsistentSystemError with rank data when no solution exists, or when
        require_unique is set and the solution has free parameters. Free variables are set to 0.
        """
        if rhs.nrows != self.nrows:
            raise ParameterError(f"right-hand side has {rhs.nrows} rows, expected {self.nrows}")
        augmented = [list(a) + list(b) for a, b in zip(self.rows, rhs.rows)]
        reduced, pivots = row_reduce(augmented, self.ncols)
        rank = len(pivots)
        for row in reduced[rank:]:
            if any(not _is_zero(x) for x in row[self.ncols:]):
                full_rank = RepMatrix(self.ring, augmented, self.ncols + rhs.ncols).rank()
                raise InconsistentSystemError("linear system has no solution", rank=rank, augmented_rank=full_rank)
        if require_unique and rank < self.ncols:
            raise InconsistentSystemError(
                f"solution not unique: rank {rank} < {self.ncols} unknowns", rank=rank, augmented_rank=rank
            )
        solution = [[self.ring.zero] * rhs.ncols for _ in range(self.ncols)]
        for i, c in enumerate(pivots):
            solution[c] = list(reduced[i][self.ncols:])
        return RepMatrix(self.ring, solution, rhs.ncols)

    def inverse(self) -> "RepMatrix":
        if self.nrows != self.ncols:
            raise ParameterError("inverse of a non-square matrix")
        try:
            return self.solve(RepMatrix.identity(self.ring, self.nrows), require_unique=True)
        except InconsistentSystemError as exc:
            raise NotInvertibleError(f"singular {self.nrows}x{self.ncols} matrix (rank {exc.rank})") from exc

    def to_complex(self) -> np.ndarray:
        return np.array([[x.to_complex() for x in row] for row in self.rows], dtype=complex).reshape(self.nrows, self.ncols)

    def __repr__(self) -> str:
        body = ",\n ".join("[" + ", ".join(repr(x) for x in row) + "]" for row in self.rows)
        return f"RepMatrix({self.nrows}x{self.ncols},\n [{body}])"


def row_reduce(rows: list[list], pivot_width: int) -> tuple[list[list], list[int]]:
    """
    Reduced row echelon form, pivoting only within the first `pivot_width` columns.

    Among the candidate rows the entry with the smallest `complexity` is chosen as
    pivot; this keeps Laurent fractions from swelling. Returns (rows, pivot columns).
    """
    m = [list(r) for r in rows]
    n_rows = len(m)
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(pivot_width):
        if piv_r == n_rows:
            break
        candidates = [i for i in range(piv_r, n_rows) if not _is_zero(m[i][piv_c])]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: _complexity(m[i][piv_c]))
        m[piv_r], m[best] = m[best], m[piv_r]

        fp = m[piv_r][piv_c]
        m[piv_r] = [x / fp for x in m[piv_r]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if _is_zero(fr):
                continue
            m[r] = [x - fr * y if not _is_zero(y) else x for x, y in zip(m[r], m[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return m, pivots


def coordinates(ring, basis: Sequence[Sequence], targets: Sequence[Sequence]) -> RepMatrix:
    """
    Coordinates of each target vector in a linearly independent family.

    Column k of the result expresses targets[k]. Raises InconsistentSystemError when a
    target is outside the span or the family is dependent.
    """
    A = RepMatrix.from_columns(ring, list(basis))
    B = RepMatrix.from_columns(ring, list(targets), A.nrows)
    return A.solve(B, require_unique=True)


def complete_basis(ring, sub: Sequence[Sequence], dim: int) -> list[int]:
    """Indices of unit vectors that complete the independent family `sub` to a basis of ring^dim."""
    if not sub:
        return list(range(dim))
    _, pivots = row_reduce([list(v) for v in sub], dim)
    if len(pivots) != len(sub):
        raise InconsistentSystemError("vectors are linearly dependent", rank=len(pivots))
    chosen = set(pivots)
    return [j for j in range(dim) if j not in chosen]


def span_contains(ring, basis: Sequence[Sequence], vector: Sequence) -> bool:
    if not basis:
        return all(_is_zero(x) for x in vector)
    A = RepMatrix.from_columns(ring, list(basis))
    return A.rank() == A.hstack(RepMatrix.from_columns(ring, [list(vector)])).rank()
