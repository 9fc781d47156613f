"""Exact character-table containers and the weighted orthonormalization.

All arithmetic is integer or ``fractions.Fraction``; floating point is
banned from this package because every quantity it produces is an exact
integer or rational and any rounding would be a silent bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ExactnessError(ArithmeticError):
    """A value that must come out integral (or a row that must come out
    orthonormal) did not.

    This never indicates rounding; it signals an inconsistent upstream
    table or invalid input.
    """


def _as_int(x, what="value"):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    raise ExactnessError(f"{what} is not an exact integer: {x!r}")


@dataclass(frozen=True)
class CharacterTable:
    """Integer table with labeled rows (characters) and columns (classes)."""

    row_labels: tuple
    col_labels: tuple
    col_class_orders: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]
    group_order: int

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(self, "col_class_orders", tuple(self.col_class_orders))
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row count does not match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("column count does not match column labels")
        if len(self.col_class_orders) != len(self.col_labels):
            raise ValueError("class order count does not match column labels")
        if sum(self.col_class_orders) != self.group_order:
            raise ValueError("class orders do not sum to the group order")

    @property
    def nrows(self):
        return len(self.row_labels)

    @property
    def ncols(self):
        return len(self.col_labels)

    def row(self, i):
        return self.entries[i]

    def weights(self) -> "WeightVector":
        return WeightVector.from_class_orders(self.col_class_orders, self.group_order)


@dataclass(frozen=True)
class WeightVector:
    """Per-class weights class_order / group_order; positive, summing to 1."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if sum(self.weights) != 1:
            raise ValueError("weights must sum to 1")

    @classmethod
    def from_class_orders(cls, orders, group_order):
        return cls(tuple(Fraction(o, group_order) for o in orders))

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def inner(self, u, v):
        """Weighted inner product sum_c w_c u_c v_c, exact."""
        num = 0
        for w, a, b in zip(self.weights, u, v):
            num += w * a * b
        return num if isinstance(num, Fraction) else Fraction(num)


@dataclass(frozen=True)
class TransitionMatrix:
    """Lower unitriangular integer matrix; determinant 1 by shape."""

    labels: tuple
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        n = len(self.labels)
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError("transition matrix must be square over its labels")
        for i, row in enumerate(self.entries):
            if row[i] != 1:
                raise ValueError(f"diagonal entry {i} is {row[i]}, expected 1")
            if any(row[j] != 0 for j in range(i + 1, n)):
                raise ValueError(f"row {i} has entries above the diagonal")

    @property
    def size(self):
        return len(self.labels)


def weighted_gram_schmidt(table: CharacterTable, weights: WeightVector):
    """Orthonormalize the rows of ``table`` under ``weights``, exactly.

    Returns ``(orthonormal, transition)`` where ``transition`` is lower
    unitriangular and ``table = transition @ orthonormal`` entrywise.  No
    normalization step is performed: for induced-character input each
    residue is a single irreducible character and lands on norm 1 by
    itself, which is asserted.  A residue with non-unit norm, a
    non-integral entry, or a non-integral projection coefficient raises
    :class:`ExactnessError` (rank deficiency shows up as norm 0).
    """
    if table.ncols != len(weights):
        raise ValueError("weight vector does not match table columns")
    if table.nrows != table.ncols:
        raise ValueError("weighted orthonormalization needs a square table")
    done: list[tuple[int, ...]] = []
    trans: list[tuple[int, ...]] = []
    n = table.nrows
    for i in range(n):
        row = table.row(i)
        coeffs = [
            _as_int(weights.inner(row, x), f"projection coefficient ({i},{k})")
            for k, x in enumerate(done)
        ]
        resid = list(row)
        for c, x in zip(coeffs, done):
            resid = [r - c * v for r, v in zip(resid, x)]
        norm = weights.inner(resid, resid)
        if norm != 1:
            raise ExactnessError(
                f"row {i} residue has squared norm {norm}, expected 1"
            )
        resid = tuple(_as_int(v, f"entry in row {i}") for v in resid)
        done.append(resid)
        trans.append(tuple(coeffs) + (1,) + (0,) * (n - i - 1))
    ortho = CharacterTable(
        row_labels=table.row_labels,
        col_labels=table.col_labels,
        col_class_orders=table.col_class_orders,
        entries=tuple(done),
        group_order=table.group_order,
    )
    return ortho, TransitionMatrix(table.row_labels, tuple(trans))


def first_orthogonality_failure(table: CharacterTable):
    """First (i, j, value) where weighted row orthonormality fails, or None."""
    w = table.weights()
    for i in range(table.nrows):
        for j in range(i, table.nrows):
            got = w.inner(table.row(i), table.row(j))
            expected = 1 if i == j else 0
            if got != expected:
                return (i, j, got)
    return None


def first_column_orthogonality_failure(table: CharacterTable):
    """First (c, c', value) where column orthogonality fails, or None.

    The exact relation: sum_i T[i][c] T[i][c'] equals group_order/|class c|
    when c == c' and 0 otherwise.
    """
    for c in range(table.ncols):
        for d in range(c, table.ncols):
            got = sum(row[c] * row[d] for row in table.entries)
            if c == d:
                expected = Fraction(table.group_order, table.col_class_orders[c])
                if got != expected:
                    return (c, d, got)
            elif got != 0:
                return (c, d, got)
    return None


def mat_mul(a, b):
    """Exact matrix product of nested sequences."""
    b_cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in b_cols) for row in a
    )


def transpose(a):
    return tuple(zip(*a))


def exact_solve(a, b):
    """Solve A X = B over the rationals; A square and invertible.

    Raises :class:`ExactnessError` when A is singular.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("A must be square")
    m = len(b[0]) if b else 0
    aug = [
        [Fraction(x) for x in arow] + [Fraction(x) for x in brow]
        for arow, brow in zip(a, b)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ExactnessError("singular matrix in exact solve")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * u for v, u in zip(aug[r], aug[col])]
    return tuple(tuple(aug[r][n:]) for r in range(n)) if m else tuple(() for _ in range(n))
