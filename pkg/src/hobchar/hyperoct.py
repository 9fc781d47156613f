"""Classes, canonical subgroups, and character tables of the
signed-permutation (hyperoctahedral) group of rank N, order 2**N N!.

Classes are labeled by their cycle-sign census (how many positive and how
many negative cycles of each length); canonical subgroups by a partition
with a 0/1 flag per part.  The subgroup for part size p with flag 0 is the
full signed-permutation block on p letters; with flag 1 it is the index-2
block whose sign product is +1.  A flag-1 part pairs with a positive cycle
of the same length, which fixes the class column order as the mirror of
the subgroup row order and makes the transition factor unitriangular.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from hobchar import _backend
from hobchar.combinatorics import Partition, partitions, sign_flag_vectors
from hobchar.tables import CharacterTable, WeightVector, weighted_gram_schmidt


def group_order(n: int) -> int:
    return 2**n * factorial(n)


@dataclass(frozen=True)
class AlphaSystem:
    """Cycle-sign census: ``pos[i-1]`` positive and ``neg[i-1]`` negative
    i-cycles (a cycle is negative when its sign product is -1)."""

    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self):
        pos, neg = tuple(self.pos), tuple(self.neg)
        length = max(len(pos), len(neg), 1)
        pos += (0,) * (length - len(pos))
        neg += (0,) * (length - len(neg))
        while len(pos) > 1 and pos[-1] == 0 and neg[-1] == 0:
            pos, neg = pos[:-1], neg[:-1]
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)
        if any(e < 0 for e in pos + neg):
            raise ValueError("cycle counts must be non-negative")

    @property
    def weight(self) -> int:
        return sum((i + 1) * (p + q) for i, (p, q) in enumerate(zip(self.pos, self.neg)))

    @property
    def label(self) -> str:
        """Semicolon-joined ``i+:count`` / ``i-:count`` terms, zero counts
        omitted, e.g. ``"1+:1;1-:1"``."""
        terms = []
        for i, (p, q) in enumerate(zip(self.pos, self.neg)):
            if p:
                terms.append(f"{i + 1}+:{p}")
            if q:
                terms.append(f"{i + 1}-:{q}")
        return ";".join(terms)

    def __str__(self):
        return self.label

    def class_order(self) -> int:
        """N! prod_i 2**(a_i (i-1)) / (i**a_i a_i+! a_i-!) with
        a_i = pos_i + neg_i."""
        n = self.weight
        num = factorial(n)
        denom = 1
        for i, (p, q) in enumerate(zip(self.pos, self.neg)):
            a = p + q
            num *= 2 ** (a * i)
            denom *= (i + 1) ** a * factorial(p) * factorial(q)
        order, r = divmod(num, denom)
        assert r == 0
        return order


@dataclass(frozen=True)
class SignedSubgroupLabel:
    """A partition with one 0/1 flag per part; names a canonical subgroup
    and, reading flag 1 as a positive cycle, a conjugacy class."""

    partition: Partition
    flags: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "flags", tuple(self.flags))
        if len(self.flags) != len(self.partition):
            raise ValueError("one flag per part required")
        if any(f not in (0, 1) for f in self.flags):
            raise ValueError("flags must be 0 or 1")
        for i in range(len(self.flags) - 1):
            if self.partition[i] == self.partition[i + 1] and self.flags[i] > self.flags[i + 1]:
                raise ValueError("flags must be non-decreasing on equal parts")

    @property
    def weight(self) -> int:
        return self.partition.weight

    @property
    def label(self) -> str:
        """Each part with a sign suffix, "+" for flag 1, e.g. ``"2+,1-"``."""
        return ",".join(
            f"{p}{'+' if f else '-'}" for p, f in zip(self.partition, self.flags)
        )

    def __str__(self):
        return self.label

    def subgroup_order(self) -> int:
        order = 1
        for p, f in zip(self.partition, self.flags):
            order *= 2 ** (p - f) * factorial(p)
        return order

    def index(self) -> int:
        idx, r = divmod(group_order(self.weight), self.subgroup_order())
        assert r == 0
        return idx

    def alpha_system(self) -> AlphaSystem:
        """The paired class: each part becomes one cycle of that length,
        positive when its flag is 1."""
        length = self.partition[0] if len(self.partition) else 1
        pos = [0] * length
        neg = [0] * length
        for p, f in zip(self.partition, self.flags):
            if f:
                pos[p - 1] += 1
            else:
                neg[p - 1] += 1
        return AlphaSystem(tuple(pos), tuple(neg))


@lru_cache(maxsize=None)
def hob_subgroups(n: int) -> tuple[tuple[SignedSubgroupLabel, int], ...]:
    """All canonical subgroup labels with orders: partitions in canonical
    order, flags in increasing lexicographic order within each partition."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for lam in partitions(n):
        for flags in sign_flag_vectors(lam):
            label = SignedSubgroupLabel(lam, flags)
            out.append((label, label.subgroup_order()))
    return tuple(out)


@lru_cache(maxsize=None)
def hob_classes(n: int) -> tuple[tuple[AlphaSystem, int], ...]:
    """All classes with orders, in the mirror of the subgroup row order
    (identity class first)."""
    out = []
    for label, _ in reversed(hob_subgroups(n)):
        alpha = label.alpha_system()
        out.append((alpha, alpha.class_order()))
    return tuple(out)


def hob_induced_char(subgroup: SignedSubgroupLabel, alpha: AlphaSystem) -> int:
    """Value at class ``alpha`` of the character induced from the identity
    of the canonical subgroup: 2**(number of flag-1 parts) times the sum of
    per-length multinomial products over admissible signed distributions
    (flag-1 parts only accept an even number of negative cycles)."""
    if subgroup.weight != alpha.weight:
        raise ValueError(
            f"weight mismatch: subgroup {subgroup.label!r} has weight "
            f"{subgroup.weight}, class {alpha.label!r} has weight {alpha.weight}"
        )
    return _backend.hob_char_value(
        alpha.pos, alpha.neg, subgroup.partition.parts, subgroup.flags
    )


@lru_cache(maxsize=None)
def hob_induced_table(n: int) -> CharacterTable:
    classes = hob_classes(n)
    rows = tuple(
        tuple(
            _backend.hob_char_value(a.pos, a.neg, label.partition.parts, label.flags)
            for a, _ in classes
        )
        for label, _ in hob_subgroups(n)
    )
    return CharacterTable(
        row_labels=tuple(label for label, _ in hob_subgroups(n)),
        col_labels=tuple(a for a, _ in classes),
        col_class_orders=tuple(order for _, order in classes),
        entries=rows,
        group_order=group_order(n),
    )


def hob_weights(n: int) -> WeightVector:
    orders = tuple(order for _, order in hob_classes(n))
    return WeightVector.from_class_orders(orders, group_order(n))


@lru_cache(maxsize=None)
def hob_irreducible_table(n: int):
    """The irreducible table and unitriangular factor for rank n.

    Irreducible rows are identified by the subgroup label whose induced
    row produced them during the orthonormalization.
    """
    return weighted_gram_schmidt(hob_induced_table(n), hob_weights(n))
