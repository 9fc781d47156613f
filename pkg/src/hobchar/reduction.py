"""Restriction multiplicities from S_2N to the embedded rank-N
signed-permutation group: the irreducible branching matrix, the induced
branching matrix, and the consistency identity tying them together.
"""

from __future__ import annotations

from dataclasses import dataclass

from hobchar.embedding import modified_tables
from hobchar.hyperoct import hob_induced_table, hob_irreducible_table, hob_weights
from hobchar.reports import CheckReport, compare_matrices
from hobchar.symmetric import sym_irreducible_table
from hobchar.tables import ExactnessError, _as_int, exact_solve, mat_mul, transpose


@dataclass(frozen=True)
class BranchingMatrix:
    """Exact integer content matrix with labeled rows and columns.

    Restriction multiplicities (the irreducible route and the one-step
    chains) are genuinely non-negative and are checked as such where they
    are built.  The induced-content matrix is the unique solution of a
    linear system and can carry negative coefficients from rank 3 on, so
    the container itself only insists on integrality.
    """

    row_labels: tuple
    col_labels: tuple
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row count does not match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("column count does not match column labels")
            if any(not isinstance(v, int) for v in row):
                raise ValueError("branching entries must be exact integers")

    @property
    def shape(self):
        return (len(self.row_labels), len(self.col_labels))


def _checked_branching(row_labels, col_labels, raw_entries, what, nonneg=True):
    entries = []
    for row in raw_entries:
        out = []
        for v in row:
            v = _as_int(v, what)
            if nonneg and v < 0:
                raise ExactnessError(f"{what} is negative: {v}")
            out.append(v)
        entries.append(tuple(out))
    return BranchingMatrix(row_labels, col_labels, tuple(entries))


def reduce_irreducible(n: int) -> BranchingMatrix:
    """Multiplicities of the subgroup irreducibles in each restricted
    S_2N irreducible, computed as weighted inner products of the
    re-columned irreducible table against the orthonormal subgroup rows."""
    _, x_mod = modified_tables(n)
    y, _ = hob_irreducible_table(n)
    w = hob_weights(n)
    raw = [
        [w.inner(x_row, y.row(k)) for k in range(y.nrows)]
        for x_row in x_mod.entries
    ]
    return _checked_branching(
        x_mod.row_labels, y.row_labels, raw, "restriction multiplicity"
    )


def reduce_induced(n: int) -> BranchingMatrix:
    """The induced-content matrix: the unique exact solution R of
    R @ induced_table = re-columned ambient induced table.

    Coefficients must come out integral (anything else means a broken
    upstream table) but not necessarily non-negative: a restricted induced
    character is a permutation character whose point stabilizers need not
    be canonical subgroups, and from rank 3 on some rows genuinely leave
    the non-negative cone of the induced basis.
    """
    phi_mod, _ = modified_tables(n)
    table = hob_induced_table(n)
    # R I = phi'  <=>  I^T R^T = phi'^T; I is invertible (unitriangular
    # times an orthogonal-row table with positive weights).
    solution = exact_solve(transpose(table.entries), transpose(phi_mod.entries))
    return _checked_branching(
        phi_mod.row_labels,
        table.row_labels,
        transpose(solution),
        "induced-content coefficient",
        nonneg=False,
    )


def verify_consistency(n: int) -> CheckReport:
    """Check R2 @ T = Delta @ R1 exactly, where T is the subgroup's
    unitriangular factor and Delta the ambient one (the re-columned
    induced/irreducible tables share Delta).  Failure is reported, not
    raised."""
    r1 = reduce_irreducible(n)
    r2 = reduce_induced(n)
    _, t_b = hob_irreducible_table(n)
    _, delta = sym_irreducible_table(2 * n)
    lhs = mat_mul(r2.entries, t_b.entries)
    rhs = mat_mul(delta.entries, r1.entries)
    note = "both routes give a {}x{} matrix".format(*r1.shape)
    return compare_matrices("eq8", n, r2.row_labels, r2.col_labels, lhs, rhs, note)
