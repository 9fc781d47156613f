"""The rank-N signed-permutation group inside S_2N: class fusion,
intersection orders, the coset permutation character, and re-columned
("modified") character tables.

A signed permutation acts on the 2N points +-1..+-N; a positive i-cycle
becomes a pair of i-cycles there and a negative i-cycle a single
2i-cycle.  This constructive rule is exact (and oracle-verified); class
splitting and omission fall out of it rather than from any divisibility
heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from hobchar.hyperoct import AlphaSystem, group_order, hob_classes
from hobchar.symmetric import CycleType, sym_classes, sym_irreducible_table
from hobchar.tables import CharacterTable


def fuse_class(alpha: AlphaSystem, n: int | None = None) -> CycleType:
    """Ambient cycle type of a class: positive i-cycles contribute two
    i-cycles each, negative i-cycles one 2i-cycle each."""
    if n is not None and alpha.weight != n:
        raise ValueError(f"class {alpha.label!r} does not have weight {n}")
    length = 2 * len(alpha.pos)
    exps = [0] * length
    for i, (p, q) in enumerate(zip(alpha.pos, alpha.neg)):
        exps[i] += 2 * p
        exps[2 * i + 1] += q
    return CycleType(tuple(exps))


@dataclass(frozen=True)
class FusionMap:
    """Both directions of the class fusion for one rank.

    ``images[k]`` is the ambient cycle type of subgroup class ``k`` (in
    class-column order); ``fibers[c]`` lists the subgroup class indices
    landing on ambient class ``c``, and ``intersection_orders[c]`` their
    total size (the order of the ambient class's intersection with the
    subgroup).
    """

    n: int
    images: tuple[CycleType, ...]
    fibers: tuple[tuple[int, ...], ...]
    intersection_orders: tuple[int, ...]

    def to_json_dict(self) -> dict:
        """JSON form carrying both directions of the fusion."""
        classes = hob_classes(self.n)
        sym_cols = sym_classes(2 * self.n)
        return {
            "schema_version": 1,
            "n": self.n,
            "classes": [
                {"class": alpha.label, "image": image.label}
                for (alpha, _), image in zip(classes, self.images)
            ],
            "ambient_classes": [
                {
                    "class": ct.label,
                    "fiber": [classes[k][0].label for k in fiber],
                    "intersection_order": order,
                }
                for (ct, _), fiber, order in zip(
                    sym_cols, self.fibers, self.intersection_orders
                )
            ],
        }


def fusion_map(n: int) -> FusionMap:
    sym_cols = sym_classes(2 * n)
    col_index = {ct.label: c for c, (ct, _) in enumerate(sym_cols)}
    images = []
    fibers = [[] for _ in sym_cols]
    inter = [0] * len(sym_cols)
    for k, (alpha, order) in enumerate(hob_classes(n)):
        image = fuse_class(alpha, n)
        images.append(image)
        c = col_index[image.label]
        fibers[c].append(k)
        inter[c] += order
    assert sum(inter) == group_order(n)
    return FusionMap(
        n=n,
        images=tuple(images),
        fibers=tuple(tuple(f) for f in fibers),
        intersection_orders=tuple(inter),
    )


def intersection_orders(n: int) -> tuple[int, ...]:
    """For each class of S_2N, the number of its elements lying in the
    embedded rank-n signed-permutation group (zero when the class misses
    it)."""
    return fusion_map(n).intersection_orders


def permutation_character_F(n: int) -> tuple[int, ...]:
    """Character of S_2N acting on the cosets of the embedded subgroup:
    per class, (2N)!/(2**N N!) * intersection_order / class_order, always
    an exact integer.  Its identity value is the double factorial
    (2N-1)(2N-3)...1."""
    inter = intersection_orders(n)
    index = factorial(2 * n) // group_order(n)
    values = []
    for (_, class_order), m in zip(sym_classes(2 * n), inter):
        val, r = divmod(index * m, class_order)
        if r:
            raise ArithmeticError("coset character value is not integral")
        values.append(val)
    return tuple(values)


def modify_table(table: CharacterTable, n: int) -> CharacterTable:
    """Re-column an S_2N table over the subgroup's classes.

    Each subgroup class contributes one column carrying the table's value
    at its ambient image; ambient classes meeting the subgroup in several
    classes are split, classes missing it are dropped.  Column class
    orders become the subgroup's class orders.
    """
    sym_cols = sym_classes(2 * n)
    if table.col_labels != tuple(ct for ct, _ in sym_cols):
        raise ValueError("table columns must be exactly the ambient classes")
    col_index = {ct.label: c for c, (ct, _) in enumerate(sym_cols)}
    classes = hob_classes(n)
    picks = [col_index[fuse_class(alpha, n).label] for alpha, _ in classes]
    return CharacterTable(
        row_labels=table.row_labels,
        col_labels=tuple(alpha for alpha, _ in classes),
        col_class_orders=tuple(order for _, order in classes),
        entries=tuple(tuple(row[c] for c in picks) for row in table.entries),
        group_order=group_order(n),
    )


def modified_tables(n: int):
    """(induced', irreducible') over the subgroup's classes, sharing the
    ambient transition matrix."""
    from hobchar.symmetric import sym_induced_table

    x, _ = sym_irreducible_table(2 * n)
    return modify_table(sym_induced_table(2 * n), n), modify_table(x, n)
