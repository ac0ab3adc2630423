"""Exact linear algebra: GF(2) matrices and integer Smith normal form.

Two worlds live here.  ``GF2Matrix`` wraps a numpy uint8 array of 0/1
values and supplies rank, kernel and solve with deterministic conventions
(free variables are set to zero, kernel vectors follow ascending free
columns).  ``IntMatrix`` and ``smith_normal_form`` work over native Python
ints, because spanning-tree counts overflow fixed-width integers quickly;
the Smith form carries unimodular transforms on both sides plus the inverse
of the left one, which the critical-group generator construction consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GF2Matrix",
    "IntMatrix",
    "SmithForm",
    "smith_normal_form",
]


# ---------------------------------------------------------------------------
# GF(2)
# ---------------------------------------------------------------------------


def _row_reduce(arr: np.ndarray) -> list[int]:
    """In-place reduced row echelon form over GF(2).  Returns pivot columns."""
    rows, cols = arr.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.nonzero(arr[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            arr[[r, p]] = arr[[p, r]]
        mask = arr[:, c].astype(bool)
        mask[r] = False
        arr[mask] ^= arr[r]
        pivots.append(c)
        r += 1
    return pivots


class GF2Matrix:
    """Dense matrix over GF(2), entries stored as numpy uint8 zeros and ones."""

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.asarray(data, dtype=np.uint8)
        if arr.ndim != 2:
            raise ValueError("GF2Matrix needs a two-dimensional array")
        self.data = (arr & 1).copy()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF2Matrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(np.eye(n, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2Matrix) and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        body = ";".join("".join(str(int(x)) for x in row) for row in self.data)
        return f"GF2Matrix({self.rows}x{self.cols}:{body})"

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        prod = (self.data.astype(np.int64) @ other.data.astype(np.int64)) & 1
        return GF2Matrix(prod.astype(np.uint8))

    def mul_vec(self, vec: Sequence[int]) -> np.ndarray:
        v = np.asarray(vec, dtype=np.int64) & 1
        if v.shape != (self.cols,):
            raise ValueError("vector length mismatch")
        return ((self.data.astype(np.int64) @ v) & 1).astype(np.uint8)

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix(self.data.T)

    def rank(self) -> int:
        arr = self.data.copy()
        return len(_row_reduce(arr))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def kernel_basis(self) -> tuple[np.ndarray, ...]:
        """Basis of the right kernel, one vector per free column.

        Free columns are visited in ascending index order; each basis
        vector sets its free variable to one, all other free variables to
        zero, and back-substitutes the pivots.
        """
        arr = self.data.copy()
        pivots = _row_reduce(arr)
        pivot_set = set(pivots)
        basis: list[np.ndarray] = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            vec = np.zeros(self.cols, dtype=np.uint8)
            vec[f] = 1
            for i, p in enumerate(pivots):
                vec[p] = arr[i, f]
            basis.append(vec)
        return tuple(basis)

    def solve(self, b: Sequence[int]) -> np.ndarray | None:
        """One solution of ``A x = b`` or None.  Free variables are zero."""
        rhs = (np.asarray(b, dtype=np.uint8) & 1).reshape(-1)
        if rhs.shape != (self.rows,):
            raise ValueError("right-hand side length mismatch")
        aug = np.concatenate([self.data, rhs[:, None]], axis=1)
        pivots = _row_reduce(aug)
        if pivots and pivots[-1] == self.cols:
            return None
        x = np.zeros(self.cols, dtype=np.uint8)
        for i, p in enumerate(pivots):
            x[p] = aug[i, self.cols]
        return x

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and np.array_equal(self.data, self.data.T)

    def has_zero_diagonal(self) -> bool:
        return self.rows == self.cols and not np.any(np.diagonal(self.data))


# ---------------------------------------------------------------------------
# Integers
# ---------------------------------------------------------------------------


class IntMatrix:
    """Dense integer matrix over native Python ints."""

    __slots__ = ("entries", "_cols")

    def __init__(self, entries: Iterable[Iterable[int]], *, cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols disagrees with row width")
            self._cols = width
        else:
            self._cols = 0 if cols is None else int(cols)
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(((int(i == j) for j in range(n)) for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(((0,) * cols for _ in range(rows)), cols=cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self._cols

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.entries == other.entries
            and self._cols == other._cols
        )

    def __hash__(self):
        return hash((self.entries, self._cols))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other.entries)) if other.entries else [()] * other.cols
        out = []
        for row in self.entries:
            out.append(tuple(sum(a * b for a, b in zip(row, col)) for col in ot))
        return IntMatrix(out, cols=other.cols)

    def transpose(self) -> "IntMatrix":
        if self.entries:
            return IntMatrix(zip(*self.entries), cols=self.rows)
        return IntMatrix(((),) * self._cols, cols=0)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            x == int(i == j) for i, row in enumerate(self.entries) for j, x in enumerate(row)
        )

    def det(self) -> int:
        """Exact determinant, Bareiss fraction-free elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """Smith normal form ``left @ matrix @ right == diag(diagonal)``.

    ``left`` and ``right`` are unimodular; ``left_inverse`` is the exact
    inverse of ``left`` (tracked during elimination, not recomputed).
    Diagonal entries are non-negative, each divides the next, zeros trail.
    """

    matrix: IntMatrix
    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix
    left_inverse: IntMatrix

    def diagonal_matrix(self) -> IntMatrix:
        r, c = self.matrix.rows, self.matrix.cols
        d = self.diagonal
        return IntMatrix(
            ((d[i] if i == j and i < len(d) else 0 for j in range(c)) for i in range(r)),
            cols=c,
        )

    def verify(self) -> bool:
        if (self.left @ self.matrix @ self.right) != self.diagonal_matrix():
            return False
        if not (self.left @ self.left_inverse).is_identity():
            return False
        if abs(self.left.det()) != 1 or abs(self.right.det()) != 1:
            return False
        d = self.diagonal
        if any(x < 0 for x in d):
            return False
        for a, b in zip(d, d[1:]):
            if a == 0 and b != 0:
                return False
            if a != 0 and b % a != 0:
                return False
        return True


def smith_normal_form(mat: IntMatrix) -> SmithForm:
    """Smith normal form with unimodular transforms on both sides.

    Pivoting always grabs the smallest nonzero magnitude in the remaining
    submatrix, which keeps intermediate entries tame for the Laplacians this
    package feeds it.  Output is deterministic for a given input.
    """
    R, C = mat.rows, mat.cols
    a = [list(row) for row in mat.entries]
    u = [[int(i == j) for j in range(R)] for i in range(R)]
    uinv = [[int(i == j) for j in range(R)] for i in range(R)]
    v = [[int(i == j) for j in range(C)] for i in range(C)]

    def row_swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in range(R):
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def row_add(i: int, j: int, c: int) -> None:
        # row i += c * row j; the inverse transform takes column j -= c * column i
        ai, aj = a[i], a[j]
        for k in range(C):
            ai[k] += c * aj[k]
        ui, uj = u[i], u[j]
        for k in range(R):
            ui[k] += c * uj[k]
        for r in range(R):
            uinv[r][j] -= c * uinv[r][i]

    def row_negate(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in range(R):
            uinv[r][i] = -uinv[r][i]

    def col_swap(i: int, j: int) -> None:
        for r in range(R):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(C):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def col_add(j: int, i: int, c: int) -> None:
        # column j += c * column i
        for r in range(R):
            a[r][j] += c * a[r][i]
        for r in range(C):
            v[r][j] += c * v[r][i]

    t = 0
    limit = min(R, C)
    while t < limit:
        # smallest nonzero magnitude in the remaining submatrix becomes the pivot
        best = None
        for i in range(t, R):
            for j in range(t, C):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)

        while True:
            for i in range(t + 1, R):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_add(i, t, -q)
                    if a[i][t]:
                        row_swap(i, t)
            for j in range(t + 1, C):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_add(j, t, -q)
                    if a[t][j]:
                        col_swap(j, t)
            # column swaps can drop fresh entries into column t below the pivot
            if all(a[i][t] == 0 for i in range(t + 1, R)):
                break

        # the pivot must divide the whole remaining submatrix before moving on
        offender = None
        p = a[t][t]
        for i in range(t + 1, R):
            for j in range(t + 1, C):
                if a[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        t += 1

    for i in range(limit):
        if a[i][i] < 0:
            row_negate(i)

    return SmithForm(
        matrix=mat,
        diagonal=tuple(a[i][i] for i in range(limit)),
        left=IntMatrix(u, cols=R),
        right=IntMatrix(v, cols=C),
        left_inverse=IntMatrix(uinv, cols=R),
    )
