"""Brute-force ground truth for small ranks.

Everything here works on explicitly enumerated signed permutations:
conjugacy classes come from conjugating by every group element, induced
characters from counting fixed cosets, and restriction multiplicities from
summing over all elements.  It deliberately shares no machinery with the
formula-based modules beyond the label types, and it must stay dumb: its
value is being obviously correct, not fast.  Rank is capped at 5
(2**5 * 5! = 3840 elements).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from hobchar.hyperoct import AlphaSystem, SignedSubgroupLabel
from hobchar.reduction import BranchingMatrix
from hobchar.symmetric import CycleType

MAX_RANK = 5


@dataclass(frozen=True)
class SignedPermutation:
    """A permutation of 1..N with a sign attached to each point.

    ``perm[i-1]`` is the image of i, ``signs[i-1]`` the sign at point i.
    Composition: (p', f')(p, f) = (p'p, f' * (f o p'^-1)).
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"not a permutation of 1..N: {self.perm!r}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1, one per point")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)), (1,) * n)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        n = len(self.perm)
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(n))
        inv = [0] * n
        for i, v in enumerate(self.perm):
            inv[v - 1] = i + 1
        signs = tuple(self.signs[j] * other.signs[inv[j] - 1] for j in range(n))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        n = len(self.perm)
        inv = [0] * n
        for i, v in enumerate(self.perm):
            inv[v - 1] = i + 1
        signs = tuple(self.signs[self.perm[j] - 1] for j in range(n))
        return SignedPermutation(tuple(inv), signs)

    def key(self):
        return (self.perm, self.signs)

    def cycles(self):
        n = len(self.perm)
        seen = [False] * n
        out = []
        for start in range(1, n + 1):
            if seen[start - 1]:
                continue
            cyc = []
            a = start
            while not seen[a - 1]:
                seen[a - 1] = True
                cyc.append(a)
                a = self.perm[a - 1]
            out.append(tuple(cyc))
        return out

    def alpha_system(self) -> AlphaSystem:
        """Cycle-sign census, read off this single element."""
        n = len(self.perm)
        pos = [0] * max(n, 1)
        neg = [0] * max(n, 1)
        for cyc in self.cycles():
            sign = 1
            for a in cyc:
                sign *= self.signs[a - 1]
            if sign == 1:
                pos[len(cyc) - 1] += 1
            else:
                neg[len(cyc) - 1] += 1
        return AlphaSystem(tuple(pos), tuple(neg))


def _check_rank(n: int, cap: int = MAX_RANK):
    if not 1 <= n <= cap:
        raise ValueError(f"oracle rank must be between 1 and {cap}, got {n}")


@lru_cache(maxsize=None)
def enumerate_group(n: int) -> tuple[SignedPermutation, ...]:
    """All 2**n n! elements, in deterministic (perm, signs) order."""
    _check_rank(n)
    return tuple(
        SignedPermutation(perm, signs)
        for perm in itertools.permutations(range(1, n + 1))
        for signs in itertools.product((1, -1), repeat=n)
    )


def to_ambient_permutation(g: SignedPermutation, n: int) -> tuple[int, ...]:
    """Image of ``g`` on the 2n symbols ordered (+1..+n, -1..-n).

    Returned as a tuple of image positions (0-based): position i < n is
    symbol +(i+1), position n+i is -(i+1).  g(+i) = f(p(i)) * p(i) and
    g(-i) = -g(+i), which makes the map a homomorphism.
    """
    if len(g.perm) != n:
        raise ValueError("rank mismatch")

    def encode(sym):
        return sym - 1 if sym > 0 else n - sym - 1

    images = [0] * (2 * n)
    for i in range(1, n + 1):
        j = g.perm[i - 1]
        target = g.signs[j - 1] * j
        images[encode(i)] = encode(target)
        images[encode(-i)] = encode(-target)
    return tuple(images)


def ambient_cycle_type(g: SignedPermutation, n: int) -> CycleType:
    """Cycle type of the ambient image of ``g``; independent cycle count."""
    images = to_ambient_permutation(g, n)
    seen = [False] * (2 * n)
    exps = [0] * (2 * n)
    for start in range(2 * n):
        if seen[start]:
            continue
        length = 0
        a = start
        while not seen[a]:
            seen[a] = True
            length += 1
            a = images[a]
        exps[length - 1] += 1
    return CycleType(tuple(exps))


@dataclass(frozen=True)
class OracleClass:
    alpha: AlphaSystem
    size: int
    representative: SignedPermutation
    ambient: CycleType


@lru_cache(maxsize=None)
def oracle_class_data(n: int) -> tuple[OracleClass, ...]:
    """Conjugacy classes by explicit conjugation closure.

    Classes are ordered by first occurrence in the element enumeration;
    the representative is the lexicographically minimal element.  The
    cycle-sign census and the ambient cycle type are read off every
    element and must be constant on the class.
    """
    _check_rank(n)
    elements = enumerate_group(n)
    assigned: set = set()
    out = []
    for g in elements:
        if g.key() in assigned:
            continue
        members = {(x * g * x.inverse()).key() for x in elements}
        assigned |= members
        rep = SignedPermutation(*min(members))
        alphas = {SignedPermutation(*k).alpha_system().label for k in members}
        ambients = {ambient_cycle_type(SignedPermutation(*k), n).label for k in members}
        if len(alphas) != 1 or len(ambients) != 1:
            raise AssertionError("class invariants not constant on a conjugacy class")
        out.append(
            OracleClass(
                alpha=rep.alpha_system(),
                size=len(members),
                representative=rep,
                ambient=ambient_cycle_type(rep, n),
            )
        )
    assert sum(c.size for c in out) == len(elements)
    return tuple(out)


def _block_elements(coords, flag):
    """All signed permutations of one subgroup block, as (mapping, signs)
    dicts over the block's coordinates; flag 1 keeps only even numbers of
    minus signs."""
    out = []
    for perm in itertools.permutations(coords):
        mapping = dict(zip(coords, perm))
        for signs in itertools.product((1, -1), repeat=len(coords)):
            if flag and signs.count(-1) % 2:
                continue
            out.append((mapping, dict(zip(coords, signs))))
    return out


def subgroup_elements(n: int, label: SignedSubgroupLabel) -> tuple[SignedPermutation, ...]:
    """The concrete canonical subgroup on consecutive coordinate blocks."""
    _check_rank(n)
    if label.weight != n:
        raise ValueError("subgroup label has the wrong weight")
    blocks = []
    start = 1
    for part, flag in zip(label.partition, label.flags):
        coords = tuple(range(start, start + part))
        blocks.append(_block_elements(coords, flag))
        start += part
    out = []
    for combo in itertools.product(*blocks):
        perm = list(range(1, n + 1))
        signs = [1] * n
        for mapping, block_signs in combo:
            for c, v in mapping.items():
                perm[c - 1] = v
            for c, s in block_signs.items():
                signs[c - 1] = s
        out.append(SignedPermutation(tuple(perm), tuple(signs)))
    assert len(out) == label.subgroup_order()
    return tuple(out)


def oracle_induced_char(n: int, label: SignedSubgroupLabel) -> tuple[int, ...]:
    """Fixed-coset counts of the class representatives, aligned with
    :func:`oracle_class_data`."""
    _check_rank(n, cap=4)
    elements = enumerate_group(n)
    members = {g.key() for g in subgroup_elements(n, label)}
    order = len(members)
    values = []
    for cls in oracle_class_data(n):
        g = cls.representative
        hits = sum(1 for x in elements if (x.inverse() * g * x).key() in members)
        value, r = divmod(hits, order)
        assert r == 0
        values.append(value)
    return tuple(values)


def oracle_restriction(n: int) -> BranchingMatrix:
    """Restriction multiplicities by summation over every subgroup element.

    Ambient irreducible values come from the formula-side table, but they
    are evaluated element by element through the explicit embedding, and
    the inner products run over all 2**n n! elements rather than classes.
    """
    _check_rank(n, cap=4)
    from hobchar.hyperoct import hob_irreducible_table
    from hobchar.symmetric import sym_irreducible_table

    x, _ = sym_irreducible_table(2 * n)
    y, _ = hob_irreducible_table(n)
    x_col = {ct.label: c for c, ct in enumerate(x.col_labels)}
    y_col = {alpha.label: c for c, alpha in enumerate(y.col_labels)}
    elements = enumerate_group(n)
    order = len(elements)
    # per element: ambient class column and subgroup class column
    cols = [
        (x_col[ambient_cycle_type(g, n).label], y_col[g.alpha_system().label])
        for g in elements
    ]
    entries = []
    for i in range(x.nrows):
        row = []
        for k in range(y.nrows):
            total = sum(x.row(i)[a] * y.row(k)[b] for a, b in cols)
            mult, r = divmod(total, order)
            assert r == 0 and mult >= 0
            row.append(mult)
        entries.append(tuple(row))
    return BranchingMatrix(x.row_labels, y.row_labels, tuple(entries))


def oracle_agreement(n: int) -> "CheckReport":
    """Compare the formula pipeline against the brute-force data: class
    count and sizes, fusion images, every induced-character value, and the
    irreducible branching matrix.

    At rank 5 only the class-level comparisons run (coset and restriction
    brute force stay capped at rank 4)."""
    from hobchar.embedding import fuse_class
    from hobchar.hyperoct import hob_classes, hob_induced_table
    from hobchar.reduction import reduce_irreducible
    from hobchar.reports import CheckReport

    def mismatch(row_label, col_label, lhs, rhs):
        return CheckReport(
            check="oracle",
            n=n,
            passed=False,
            first_mismatch={
                "row_label": str(row_label),
                "col_label": str(col_label),
                "lhs": lhs,
                "rhs": rhs,
            },
        )

    classes = hob_classes(n)
    by_alpha = {cls.alpha.label: cls for cls in oracle_class_data(n)}
    if len(by_alpha) != len(classes):
        return mismatch("class-count", "-", len(classes), len(by_alpha))
    for alpha, order in classes:
        cls = by_alpha.get(alpha.label)
        if cls is None:
            return mismatch("class-missing", alpha.label, order, 0)
        if cls.size != order:
            return mismatch("class-size", alpha.label, order, cls.size)
        if fuse_class(alpha, n).label != cls.ambient.label:
            return mismatch(
                "fusion-image", alpha.label, fuse_class(alpha, n).label, cls.ambient.label
            )

    note = None
    if n <= 4:
        table = hob_induced_table(n)
        col_of = {alpha.label: c for c, (alpha, _) in enumerate(classes)}
        for i, label in enumerate(table.row_labels):
            got = oracle_induced_char(n, label)
            for cls, value in zip(oracle_class_data(n), got):
                expected = table.row(i)[col_of[cls.alpha.label]]
                if value != expected:
                    return mismatch(label.label, cls.alpha.label, expected, value)

        r1 = reduce_irreducible(n)
        brute = oracle_restriction(n)
        for i, row_label in enumerate(r1.row_labels):
            for k, col_label in enumerate(r1.col_labels):
                if r1.entries[i][k] != brute.entries[i][k]:
                    return mismatch(
                        row_label.label, col_label.label, r1.entries[i][k], brute.entries[i][k]
                    )
    else:
        note = "classes, sizes and fusion only at this rank"
    return CheckReport(check="oracle", n=n, passed=True, note=note)
