"""Dense exact matrices.

Element access (``A[i, j]``, ``A.row(i)``) is 0-based like any Python grid.
Index *sets* passed to :meth:`ExactMatrix.submatrix` are 1-based, matching
the ``[n] = {1, ..., n}`` convention used by bipartitions throughout the
package.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .field import RATIONALS, Field, Scalar

__all__ = ["ExactMatrix", "SingularMatrixError", "block_rank_at_most_one"]


class SingularMatrixError(ZeroDivisionError):
    pass


def block_rank_at_most_one(data, rows: Sequence[int], cols: Sequence[int]) -> bool:
    """Rank test on the block ``data[rows][cols]`` (0-based) without copying.

    Every row must be proportional to the first nonzero row; checked via
    vanishing 2x2 cross products against the first nonzero entry.
    """
    pivot = None
    for i in rows:
        r = data[i]
        for j in cols:
            if r[j]:
                pivot = (i, j)
                break
        if pivot is not None:
            break
    if pivot is None:
        return True
    pi, pj = pivot
    prow = data[pi]
    p = prow[pj]
    for i in rows:
        if i == pi:
            continue
        r = data[i]
        c = r[pj]
        for j in cols:
            if r[j] * p != c * prow[j]:
                return False
    return True


class ExactMatrix:
    """Immutable rectangular matrix over a single exact field."""

    __slots__ = ("_rows", "field", "nrows", "ncols")

    def __init__(self, entries: Iterable[Iterable], field: Field = RATIONALS):
        rows = tuple(tuple(field(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("a matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self._rows = rows
        self.field = field
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def _trusted(cls, rows: tuple, field: Field) -> "ExactMatrix":
        m = cls.__new__(cls)
        m._rows = rows
        m.field = field
        m.nrows = len(rows)
        m.ncols = len(rows[0])
        return m

    @classmethod
    def identity(cls, n: int, field: Field = RATIONALS) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = RATIONALS) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)], field)

    @classmethod
    def diagonal(cls, values: Sequence, field: Field = RATIONALS) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    # -- basic access -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self._rows[i]

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self._rows[i][j]

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"ExactMatrix([{body}])"

    # -- algebra ----------------------------------------------------------

    def _check_same(self, other: "ExactMatrix") -> None:
        if self.field != other.field:
            raise TypeError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._trusted(tuple(zip(*self._rows)), self.field)

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)
        )
        return ExactMatrix._trusted(rows, self.field)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._trusted(tuple(tuple(-a for a in r) for r in self._rows), self.field)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = tuple(zip(*other._rows))
        zero = self.field.zero
        rows = tuple(
            tuple(sum((a * b for a, b in zip(r, c)), zero) for c in cols) for r in self._rows
        )
        return ExactMatrix._trusted(rows, self.field)

    def scale_rows_cols(self, left: Sequence, right: Sequence) -> "ExactMatrix":
        """``diag(left) @ self @ diag(right)`` without building the diagonals."""
        f = self.field
        left = [f(x) for x in left]
        right = [f(x) for x in right]
        rows = tuple(
            tuple(left[i] * a * right[j] for j, a in enumerate(r))
            for i, r in enumerate(self._rows)
        )
        return ExactMatrix._trusted(rows, f)

    def add_diagonal(self, values: Sequence) -> "ExactMatrix":
        if not self.is_square or len(values) != self.nrows:
            raise ValueError("diagonal shift needs a square matrix and n values")
        f = self.field
        rows = tuple(
            tuple(a + f(values[i]) if i == j else a for j, a in enumerate(r))
            for i, r in enumerate(self._rows)
        )
        return ExactMatrix._trusted(rows, f)

    def is_symmetric(self) -> bool:
        return self.is_square and self._rows == tuple(zip(*self._rows))

    # -- submatrices and rank ---------------------------------------------

    def submatrix(self, X: Iterable[int], Y: Iterable[int]) -> "ExactMatrix":
        """``A[X, Y]`` for 1-based index sets, rows and columns in sorted order."""
        xs = sorted(set(X))
        ys = sorted(set(Y))
        if not xs or not ys:
            raise ValueError("submatrix index sets must be nonempty")
        if xs[0] < 1 or xs[-1] > self.nrows:
            raise IndexError(f"row index out of range 1..{self.nrows}: {xs}")
        if ys[0] < 1 or ys[-1] > self.ncols:
            raise IndexError(f"column index out of range 1..{self.ncols}: {ys}")
        rows = tuple(tuple(self._rows[i - 1][j - 1] for j in ys) for i in xs)
        return ExactMatrix._trusted(rows, self.field)

    def _echelon(self) -> tuple[list[list[Scalar]], int, int]:
        """Gaussian elimination with row-major first-nonzero pivoting.

        Returns the reduced working rows, the rank and the number of row swaps.
        """
        a = [list(r) for r in self._rows]
        m, n = self.nrows, self.ncols
        rank = 0
        swaps = 0
        while rank < m:
            pivot = None
            for i in range(rank, m):
                for j in range(n):
                    if a[i][j]:
                        pivot = (i, j)
                        break
                if pivot is not None:
                    break
            if pivot is None:
                break
            i, j = pivot
            if i != rank:
                a[i], a[rank] = a[rank], a[i]
                swaps += 1
            prow = a[rank]
            p = prow[j]
            for k in range(rank + 1, m):
                r = a[k]
                if r[j]:
                    factor = r[j] / p
                    for c in range(n):
                        r[c] = r[c] - factor * prow[c]
            rank += 1
        return a, rank, swaps

    def rank(self) -> int:
        return self._echelon()[1]

    def is_rank_at_most_one(self) -> bool:
        return block_rank_at_most_one(self._rows, range(self.nrows), range(self.ncols))

    def determinant(self) -> Scalar:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self._rows]
        det = self.field.one
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col]), None)
            if piv is None:
                return self.field.zero
            if piv != col:
                a[piv], a[col] = a[col], a[piv]
                det = -det
            p = a[col][col]
            det = det * p
            for k in range(col + 1, n):
                if a[k][col]:
                    factor = a[k][col] / p
                    for c in range(col, n):
                        a[k][c] = a[k][c] - factor * a[col][c]
        return det

    def inverse(self) -> "ExactMatrix":
        """Gauss-Jordan inverse; raises :class:`SingularMatrixError`."""
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        f = self.field
        one, zero = f.one, f.zero
        a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self._rows)]
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col]), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            a[piv], a[col] = a[col], a[piv]
            prow = a[col]
            p = prow[col]
            if p != one:
                prow[:] = [x / p for x in prow]
            for k in range(n):
                if k != col:
                    r = a[k]
                    factor = r[col]
                    if factor:
                        for c in range(col, 2 * n):
                            r[c] = r[c] - factor * prow[c]
        return ExactMatrix._trusted(tuple(tuple(r[n:]) for r in a), f)

    # -- combinatorial structure --------------------------------------------

    def is_irreducible(self) -> bool:
        """Strong connectivity of the off-diagonal nonzero pattern.

        Checked as: every vertex reachable from vertex 0 both along arcs and
        along reversed arcs.
        """
        if not self.is_square:
            raise ValueError("irreducibility is defined for square matrices")
        n = self.nrows
        if n == 1:
            return True
        a = self._rows
        forward = [[j for j in range(n) if j != i and a[i][j]] for i in range(n)]
        backward = [[j for j in range(n) if j != i and a[j][i]] for i in range(n)]
        for adj in (forward, backward):
            seen = {0}
            stack = [0]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != n:
                return False
        return True
