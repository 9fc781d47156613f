import random

import pytest

from hobchar.combinatorics import Partition
from hobchar.hyperoct import (
    SignedSubgroupLabel,
    group_order,
    hob_classes,
    hob_induced_table,
    hob_subgroups,
)
from hobchar.embedding import fuse_class
from hobchar.oracle import (
    SignedPermutation,
    ambient_cycle_type,
    enumerate_group,
    oracle_agreement,
    oracle_class_data,
    oracle_induced_char,
    oracle_restriction,
    subgroup_elements,
    to_ambient_permutation,
)
from hobchar.reduction import reduce_irreducible


def sub(parts, flags):
    return SignedSubgroupLabel(Partition(tuple(parts)), tuple(flags))


class TestSignedPermutation:
    def test_group_sizes(self):
        assert len(enumerate_group(1)) == 2
        assert len(enumerate_group(2)) == 8
        assert len(enumerate_group(3)) == 48

    def test_rank_cap(self):
        with pytest.raises(ValueError):
            enumerate_group(6)
        with pytest.raises(ValueError):
            enumerate_group(0)

    def test_identity_and_inverse(self):
        e = SignedPermutation.identity(3)
        for g in enumerate_group(3)[::7]:
            assert (g * g.inverse()).key() == e.key()
            assert (g.inverse() * g).key() == e.key()

    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_ambient_map_is_homomorphism(self, n):
        elements = enumerate_group(n)
        for a in elements:
            for b in elements:
                left = to_ambient_permutation(a * b, n)
                composed = tuple(
                    to_ambient_permutation(a, n)[v] for v in to_ambient_permutation(b, n)
                )
                assert left == composed

    @pytest.mark.slow
    @pytest.mark.parametrize("n", (4, 5))
    def test_ambient_map_is_homomorphism_sampled(self, n):
        rng = random.Random(20260811)
        elements = enumerate_group(n)
        for _ in range(500):
            a, b = rng.choice(elements), rng.choice(elements)
            left = to_ambient_permutation(a * b, n)
            composed = tuple(
                to_ambient_permutation(a, n)[v] for v in to_ambient_permutation(b, n)
            )
            assert left == composed

    def test_identity_maps_to_identity(self):
        assert to_ambient_permutation(SignedPermutation.identity(3), 3) == tuple(range(6))

    def test_single_flip_is_transposition(self):
        g = SignedPermutation((1, 2), (-1, 1))
        assert ambient_cycle_type(g, 2).label == "2,1,1"

    def test_negative_two_cycle_is_four_cycle(self):
        g = SignedPermutation((2, 1), (1, -1))
        assert g.alpha_system().label == "2-:1"
        assert ambient_cycle_type(g, 2).label == "4"


class TestClassData:
    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_matches_formula_classes(self, n):
        data = oracle_class_data(n)
        formula = dict((a.label, o) for a, o in hob_classes(n))
        assert {c.alpha.label for c in data} == set(formula)
        for c in data:
            assert c.size == formula[c.alpha.label]
            assert fuse_class(c.alpha, n).label == c.ambient.label

    def test_rank2_sizes(self):
        assert sorted(c.size for c in oracle_class_data(2)) == [1, 1, 2, 2, 2]

    def test_rank1(self):
        data = oracle_class_data(1)
        assert len(data) == 2
        assert all(c.size == 1 for c in data)

    def test_representatives_deterministic_and_minimal(self):
        first = [c.representative.key() for c in oracle_class_data(3)]
        oracle_class_data.cache_clear()
        assert [c.representative.key() for c in oracle_class_data(3)] == first
        for cls in oracle_class_data(3):
            g = cls.representative
            members = {
                (x * g * x.inverse()).key() for x in enumerate_group(3)
            }
            assert g.key() == min(members)

    @pytest.mark.slow
    def test_matches_formula_classes_rank4(self):
        data = oracle_class_data(4)
        formula = dict((a.label, o) for a, o in hob_classes(4))
        assert {c.alpha.label for c in data} == set(formula)
        for c in data:
            assert c.size == formula[c.alpha.label]
            assert fuse_class(c.alpha, 4).label == c.ambient.label


class TestInducedCharacters:
    def test_subgroup_orders(self):
        for n in (2, 3):
            for label, order in hob_subgroups(n):
                assert len(subgroup_elements(n, label)) == order

    def test_whole_group_row(self):
        values = oracle_induced_char(2, sub((2,), (0,)))
        assert values == (1, 1, 1, 1, 1)

    def test_identity_gives_index(self):
        for n in (2, 3):
            data = oracle_class_data(n)
            identity_pos = next(
                i for i, c in enumerate(data) if c.size == 1 and c.alpha.pos[0] == n
            )
            for label, order in hob_subgroups(n):
                values = oracle_induced_char(n, label)
                assert values[identity_pos] == group_order(n) // order

    @pytest.mark.parametrize("n", (2, 3))
    def test_matches_formula_table(self, n):
        table = hob_induced_table(n)
        col_of = {a.label: c for c, (a, _) in enumerate(hob_classes(n))}
        for i, label in enumerate(table.row_labels):
            values = oracle_induced_char(n, label)
            for cls, value in zip(oracle_class_data(n), values):
                assert value == table.entries[i][col_of[cls.alpha.label]]


class TestRestriction:
    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_matches_formula(self, n):
        assert oracle_restriction(n).entries == reduce_irreducible(n).entries

    @pytest.mark.slow
    def test_matches_formula_rank4(self):
        assert oracle_restriction(4).entries == reduce_irreducible(4).entries


class TestAgreement:
    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_agreement_reports_pass(self, n):
        report = oracle_agreement(n)
        assert report.passed, report.line()

    @pytest.mark.slow
    def test_agreement_rank4(self):
        report = oracle_agreement(4)
        assert report.passed, report.line()

    @pytest.mark.slow
    def test_agreement_rank5_class_level(self):
        # coset brute force stops at rank 4; classes, sizes and fusion
        # still check out over all 3840 elements
        report = oracle_agreement(5)
        assert report.passed, report.line()
        assert report.note == "classes, sizes and fusion only at this rank"
