"""One-step restriction chains and the chain-composition cross-check.

The symmetric-group step is the classical one-box rule: a row restricts to
the partitions obtained by lowering a single part by one (patterns that
stop being weakly decreasing are dropped).  The signed-permutation step is
computed character-theoretically from the rank-(N-1) embedding that fixes
the last coordinate positively.  Composing either chain down to rank one
lands in isomorphic groups, which yields an identity that cross-checks the
branching matrix of :func:`hobchar.reduction.reduce_irreducible`.
"""

from __future__ import annotations

from hobchar.combinatorics import Partition, partitions
from hobchar.hyperoct import AlphaSystem, hob_classes, hob_irreducible_table, hob_weights
from hobchar.reduction import BranchingMatrix, _checked_branching, reduce_irreducible
from hobchar.reports import CheckReport, compare_matrices
from hobchar.tables import mat_mul


def weyl_matrix(n: int) -> BranchingMatrix:
    """Restriction multiplicities from S_n to S_(n-1): entry (lam, mu) is 1
    exactly when mu arises from lam by lowering one part."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rows = partitions(n)
    cols = partitions(n - 1)
    col_index = {p: j for j, p in enumerate(cols)}
    entries = []
    for lam in rows:
        row = [0] * len(cols)
        for i in range(len(lam)):
            lowered = list(lam.parts)
            lowered[i] -= 1
            if lowered[i] == 0:
                lowered.pop(i)
            elif any(a < b for a, b in zip(lowered, lowered[1:])):
                continue
            row[col_index[Partition(tuple(lowered))]] = 1
        entries.append(tuple(row))
    return BranchingMatrix(rows, cols, tuple(entries))


def hob_restriction_matrix(n: int) -> BranchingMatrix:
    """Restriction multiplicities from rank n to rank n-1.

    The smaller group embeds by fixing the n-th coordinate positively, so
    a class of rank n-1 fuses into the rank-n class with one extra
    positive 1-cycle.  Entries are weighted inner products of the fused
    restrictions against the smaller group's orthonormal rows.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    y_big, _ = hob_irreducible_table(n)
    y_small, _ = hob_irreducible_table(n - 1)
    w = hob_weights(n - 1)
    big_col = {alpha.label: c for c, (alpha, _) in enumerate(hob_classes(n))}

    def lifted(alpha: AlphaSystem) -> str:
        pos = (alpha.pos[0] + 1,) + alpha.pos[1:]
        return AlphaSystem(pos, alpha.neg).label

    picks = [big_col[lifted(alpha)] for alpha, _ in hob_classes(n - 1)]
    raw = []
    for i in range(y_big.nrows):
        restricted = [y_big.row(i)[c] for c in picks]
        raw.append([w.inner(restricted, y_small.row(k)) for k in range(y_small.nrows)])
    return _checked_branching(
        y_big.row_labels, y_small.row_labels, raw, "restriction multiplicity"
    )


def chain_compose(matrices) -> BranchingMatrix:
    """Exact product of adjacent branching matrices, keeping outer labels."""
    matrices = list(matrices)
    if not matrices:
        raise ValueError("need at least one matrix")
    acc = matrices[0]
    for nxt in matrices[1:]:
        if acc.col_labels != nxt.row_labels:
            raise ValueError(
                f"label mismatch in chain: {[str(l) for l in acc.col_labels]} vs "
                f"{[str(l) for l in nxt.row_labels]}"
            )
        acc = BranchingMatrix(
            acc.row_labels, nxt.col_labels, mat_mul(acc.entries, nxt.entries)
        )
    return acc


def _identity(labels) -> BranchingMatrix:
    k = len(labels)
    return BranchingMatrix(
        labels, labels, tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    )


def sym_chain(n: int, down_to: int = 2) -> BranchingMatrix:
    """Composed one-box chain from S_n down to S_down_to."""
    if down_to > n:
        raise ValueError("down_to exceeds n")
    if down_to == n:
        return _identity(partitions(n))
    return chain_compose(weyl_matrix(m) for m in range(n, down_to, -1))


def hob_chain(n: int, down_to: int = 1) -> BranchingMatrix:
    """Composed restriction chain from rank n down to rank down_to."""
    if down_to > n:
        raise ValueError("down_to exceeds n")
    if down_to == n:
        y, _ = hob_irreducible_table(n)
        return _identity(y.row_labels)
    return chain_compose(hob_restriction_matrix(m) for m in range(n, down_to, -1))


def method_b_verify(n: int) -> CheckReport:
    """Cross-check the irreducible branching matrix by chain composition.

    Restricting S_2N to the embedded subgroup and then walking down to
    rank one must agree with walking S_2N straight down to S_2 (the two
    endpoint groups are isomorphic, trivial and sign characters aligned).
    Failure is reported, not raised.
    """
    r1 = reduce_irreducible(n)
    lhs = chain_compose([r1, hob_chain(n)])
    rhs = sym_chain(2 * n)
    note = "branching {}x{} composed down to {}x{}".format(*r1.shape, *lhs.shape)
    return compare_matrices(
        "method-b", n, lhs.row_labels, lhs.col_labels, lhs.entries, rhs.entries, note
    )
