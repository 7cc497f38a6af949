"""Dense matrices over a finite field: products, rank, determinant, kernel.

Schoolbook arithmetic with exact modular entries; desk-scale sizes only.
"""

from __future__ import annotations

from typing import Sequence

from .field import FieldCtx, FieldElement, FieldError


class Matrix:
    """Immutable rectangular matrix of :class:`FieldElement` entries."""

    __slots__ = ("ctx", "rows", "nrows", "ncols")

    def __init__(self, ctx: FieldCtx, rows: Sequence[Sequence[FieldElement]]):
        rows = [tuple(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            for r in rows:
                for e in r:
                    if e.ctx != ctx:
                        raise FieldError("entry from a different field")
        else:
            width = 0
        self.ctx = ctx
        self.rows = tuple(rows)
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def zero(cls, ctx: FieldCtx, nrows: int, ncols: int) -> "Matrix":
        z = ctx.zero()
        return cls(ctx, [[z] * ncols for _ in range(nrows)])

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.ctx == other.ctx
                and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over {self.ctx!r})"

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def transpose(self) -> "Matrix":
        return Matrix(self.ctx, list(zip(*self.rows))) if self.rows else self

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ctx != other.ctx:
            raise FieldError("matrices over different fields")
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} * "
                             f"{other.nrows}x{other.ncols}")
        cols = other.transpose().rows
        zero = self.ctx.zero()
        out = []
        for r in self.rows:
            out_row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.ctx, out)

    def column(self, j: int) -> list[FieldElement]:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list[FieldElement]]:
        return [self.column(j) for j in range(self.ncols)]

    # -- elimination-based queries ---------------------------------------------

    def _echelon(self) -> tuple[list[list[FieldElement]], list[int], int]:
        """Row echelon form copy; returns (rows, pivot column list, sign swaps)."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        swaps = 0
        rank = 0
        for col in range(self.ncols):
            pivot_row = None
            for i in range(rank, self.nrows):
                if not rows[i][col].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != rank:
                rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
                swaps += 1
            inv = rows[rank][col].inverse()
            for i in range(rank + 1, self.nrows):
                f = rows[i][col]
                if f.is_zero():
                    continue
                f = f * inv
                for j in range(col, self.ncols):
                    rows[i][j] = rows[i][j] - f * rows[rank][j]
            pivots.append(col)
            rank += 1
        return rows, pivots, swaps

    def rank(self) -> int:
        return len(self._echelon()[1])

    def det(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return self.ctx.one()
        rows, pivots, swaps = self._echelon()
        if len(pivots) < self.nrows:
            return self.ctx.zero()
        acc = self.ctx.one()
        for i, col in enumerate(pivots):
            acc = acc * rows[i][col]
        if swaps % 2:
            acc = -acc
        return acc

    def right_kernel(self) -> list[list[FieldElement]]:
        """Basis of {x : M x = 0} as a list of length-ncols vectors."""
        rows, pivots, _ = self._echelon()
        rank = len(pivots)
        # back-substitute to reduced echelon form
        for i in range(rank - 1, -1, -1):
            col = pivots[i]
            inv = rows[i][col].inverse()
            rows[i] = [e * inv for e in rows[i]]
            for k in range(i):
                f = rows[k][col]
                if f.is_zero():
                    continue
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[i])]
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        zero, one = self.ctx.zero(), self.ctx.one()
        for j in free:
            vec = [zero] * self.ncols
            vec[j] = one
            for i, col in enumerate(pivots):
                vec[col] = -rows[i][j]
            basis.append(vec)
        return basis

    def to_strings(self) -> list[list[str]]:
        from .field import format_element
        return [[format_element(e) for e in r] for r in self.rows]
