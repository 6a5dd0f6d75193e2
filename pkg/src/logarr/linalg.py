"""Exact dense and sparse linear algebra over the rationals.

Everything here is plain Gaussian elimination on Fraction entries: slow by
numerical-library standards, but exact, deterministic, and entirely
sufficient at the problem sizes this package targets (matrices with at most
a few thousand entries on the critical path).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

_ZERO = Fraction(0)
_ONE = Fraction(1)

Row = Tuple[Fraction, ...]


class QMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence]):
        self.rows: Tuple[Row, ...] = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.ncols = widths.pop() if widths else 0

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"QMatrix({[list(map(str, r)) for r in self.rows]})"

    def rref(self) -> Tuple["QMatrix", int, Tuple[int, ...]]:
        """Reduced row-echelon form, rank, and pivot columns.

        The RREF is the unique canonical representative of the row space,
        which is what flat canonicalization relies on.
        """
        work = [list(r) for r in self.rows]
        pivots: List[int] = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, len(work)):
                if work[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            work[r], work[pivot_row] = work[pivot_row], work[r]
            pv = work[r][c]
            if pv != 1:
                work[r] = [x / pv for x in work[r]]
            for i in range(len(work)):
                if i != r and work[i][c]:
                    f = work[i][c]
                    work[i] = [x - f * y for x, y in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
        return QMatrix(work), r, tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def kernel_basis(self) -> List[Row]:
        """Canonical basis of the right null space.

        One vector per free column, in ascending column order: the free
        coordinate is set to 1 and pivot coordinates are read off the RREF.
        """
        red, rank, pivots = self.rref()
        pivot_set = set(pivots)
        free_cols = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free_cols:
            v = [_ZERO] * self.ncols
            v[fc] = _ONE
            for i, pc in enumerate(pivots):
                v[pc] = -red.rows[i][fc]
            basis.append(tuple(v))
        return basis

    def mul_vec(self, v: Sequence) -> Row:
        vv = [Fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(row, vv)), _ZERO) for row in self.rows)

    def transpose(self) -> "QMatrix":
        return QMatrix(zip(*self.rows)) if self.nrows else QMatrix([])

    def stack(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(self.rows + other.rows)


class RowSpace:
    """Incrementally built row space with fast rank and membership tests.

    Rows are sparse maps column -> Fraction.  Each inserted row is reduced
    against the current pivots; a surviving row is stored normalized with
    pivot coefficient 1.  Pivot choice is the least column index, so the
    structure is deterministic for a fixed insertion order.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: Dict[int, Dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Dict[int, Fraction]) -> Dict[int, Fraction]:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            f = row[lead]
            for c, v in piv.items():
                acc = row.get(c, _ZERO) - f * v
                if acc:
                    row[c] = acc
                else:
                    row.pop(c, None)
        return row

    def add(self, row: Dict[int, Fraction]) -> bool:
        """Insert a row; returns True when it enlarged the space."""
        red = self.reduce(dict(row))
        if not red:
            return False
        lead = min(red)
        lv = red[lead]
        self.pivots[lead] = {c: v / lv for c, v in red.items()}
        return True

    def contains(self, row: Dict[int, Fraction]) -> bool:
        return not self.reduce(dict(row))


def vector_to_sparse(v: Sequence) -> Dict[int, Fraction]:
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def sparse_rank(rows: Iterable[Dict[int, Fraction]]) -> int:
    space = RowSpace()
    for r in rows:
        space.add(r)
    return space.rank
