"""Foot tables, frame cardinalities, and the counting formulas.

Expected values come from three independent sources: worked examples,
closed forms computed in this file (factorial binomials), and weighted
brute-force sums over the path enumerators.
"""

from __future__ import annotations

import math
from collections import Counter

import pytest

from dyckframes import (
    ColorSpec,
    NotAdmissible,
    binomial,
    binomial_identity_check,
    catalan,
    count_colored_dyck,
    count_colored_motzkin,
    count_k_motzkin,
    count_motzkin,
    enumerate_dyck,
    enumerate_frames,
    enumerate_motzkin,
    feet_level0,
    feet_table,
    foot_count,
    frame_cardinality,
    frame_of,
    up_steps_per_level,
    weak_compositions,
)

# the reference triangle: rows 0..12 steps, columns 1-ped..6-ped
LEVEL0_TRIANGLE = [
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 1, 1, 0, 0, 0),
    (0, 2, 2, 1, 0, 0),
    (0, 5, 5, 3, 1, 0),
    (0, 14, 14, 9, 4, 1),
    (0, 42, 42, 28, 14, 5),
]


def weighted_dyck_oracle(n: int, u, d) -> int:
    """Sum over Dyck paths of the product of per-step color choices."""
    total = 0
    for path in enumerate_dyck(n):
        weight = 1
        level = 0
        for ch in path.text:
            if ch == "U":
                weight *= u[level]
                level += 1
            else:
                level -= 1
                weight *= d[level]
        total += weight
    return total


def weighted_motzkin_oracle(n: int, h, u, d) -> int:
    """Sum over Motzkin paths of the product of per-step color choices."""
    total = 0
    for path in enumerate_motzkin(n):
        weight = 1
        level = 0
        for ch in path.text:
            if ch == "U":
                weight *= u[level]
                level += 1
            elif ch == "D":
                level -= 1
                weight *= d[level]
            else:
                weight *= h[level]
        total += weight
    return total


class TestBinomial:
    def test_choose_nothing_is_one_even_from_negative(self):
        assert binomial(-1, 0) == 1
        assert binomial(0, 0) == 1
        assert binomial(5, 0) == 1

    def test_overdraw_is_zero(self):
        assert binomial(3, 5) == 0
        assert binomial(-1, 1) == 0
        assert binomial(2, -1) == 0

    def test_agrees_with_math_comb(self):
        for n in range(10):
            for k in range(n + 1):
                assert binomial(n, k) == math.comb(n, k)


class TestCatalan:
    def test_examples(self):
        assert catalan(0) == 1
        assert catalan(3) == 5
        assert catalan(6) == 132

    def test_matches_closed_form(self):
        for n in range(20):
            assert catalan(n) == math.comb(2 * n, n) // (n + 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            catalan(-1)


class TestFeetLevel0:
    def test_reference_triangle(self):
        table = feet_level0(6)
        for n, row in enumerate(LEVEL0_TRIANGLE):
            assert tuple(table.count(n, 0, j) for j in range(1, 7)) == row

    def test_sawtooth_column_beyond_triangle(self):
        table = feet_level0(6)
        assert table.count(6, 0, 7) == 1

    def test_null_row(self):
        assert feet_level0(0).row(0, 0) == (0, 1)

    def test_row_sums_are_catalan(self):
        table = feet_level0(14)
        for n in range(15):
            assert sum(table.row(n, 0)) == catalan(n)


class TestFeetTable:
    def test_level1_and_level2_examples(self):
        table = feet_table(2, 2)
        assert table.count(2, 1, 2) == 2
        assert table.count(2, 2, 1) == 1

    def test_empty_path_rows(self):
        table = feet_table(3, 0)
        assert table.count(0, 3, 0) == 1
        assert table.count(0, 3, 1) == 0

    def test_matches_census(self):
        table = feet_table(8, 8)
        for n in range(9):
            paths = list(enumerate_dyck(n))
            for level in range(9):
                tally = Counter(foot_count(p, level) for p in paths)
                for feet in range(n + 2):
                    assert table.count(n, level, feet) == tally.get(feet, 0)

    def test_rebuilds_on_larger_query(self):
        table = feet_table(1, 2)
        fresh = feet_table(3, 5)
        assert table.count(5, 3, 2) == fresh.count(5, 3, 2)
        assert table.max_level >= 3 and table.max_half_length >= 5

    def test_negative_arguments_rejected(self):
        table = feet_table(1, 1)
        with pytest.raises(ValueError):
            table.count(1, 1, -1)
        with pytest.raises(ValueError):
            feet_table(-1, 2)


class TestFrameCardinality:
    def test_worked_examples(self):
        assert frame_cardinality((5, 8, 7, 3)) == 700
        assert frame_cardinality((3, 4, 3, 1)) == 6

    def test_staircase_frames_have_one_path(self):
        for u in range(1, 6):
            assert frame_cardinality((u + 1, u)) == 1

    def test_null_frame(self):
        assert frame_cardinality((1,)) == 1

    def test_inadmissible_rejected(self):
        with pytest.raises(NotAdmissible):
            frame_cardinality((4, 5, 2, 3, 1))

    def test_matches_census(self):
        for n in range(9):
            census = Counter(frame_of(p).counts for p in enumerate_dyck(n))
            for fr in enumerate_frames(n):
                assert frame_cardinality(fr) == census[fr.counts]

    def test_sums_to_catalan(self):
        for n in range(13):
            total = sum(frame_cardinality(fr) for fr in enumerate_frames(n))
            assert total == catalan(n)


class TestUpStepsPerLevel:
    def test_examples(self):
        assert up_steps_per_level((3, 4, 3, 1)) == (2, 2, 1)
        assert up_steps_per_level((2, 1)) == (1,)
        assert sum(up_steps_per_level((3, 6, 6, 3, 1))) == 9
        assert up_steps_per_level((1,)) == ()

    def test_positive_and_sum_to_half_length(self):
        for n in range(9):
            for fr in enumerate_frames(n):
                ups = up_steps_per_level(fr)
                assert all(v >= 1 for v in ups)
                assert sum(ups) == n
                if fr.degree >= 1:
                    assert ups[0] == fr.counts[0] - 1

    def test_matches_any_path_of_the_frame(self):
        for n in range(7):
            for path in enumerate_dyck(n):
                ups = up_steps_per_level(frame_of(path))
                seen = Counter()
                level = 0
                for ch in path.text:
                    if ch == "U":
                        seen[level] += 1
                        level += 1
                    else:
                        level -= 1
                assert tuple(seen[k] for k in range(len(ups))) == ups


class TestColoredDyck:
    def test_all_ones_reduces_to_catalan(self):
        for n in range(9):
            ones = (1,) * n
            assert count_colored_dyck(n, ColorSpec(u=ones, d=ones)) == catalan(n)

    def test_two_colors_on_ground_gap(self):
        spec = ColorSpec(u=(2, 1), d=(1, 1))
        assert count_colored_dyck(2, spec) == 6

    def test_null_case(self):
        assert count_colored_dyck(0, ColorSpec()) == 1

    def test_matches_weighted_oracle(self):
        vectors = [(2, 1, 3, 1, 2, 1), (3, 3, 1, 2, 1, 1), (1, 2, 2, 3, 1, 2)]
        for n in range(7):
            for u in vectors:
                for d in vectors[:2]:
                    spec = ColorSpec(u=u[:n], d=d[:n])
                    assert count_colored_dyck(n, spec) == weighted_dyck_oracle(n, u, d)

    def test_short_vector_rejected(self):
        with pytest.raises(ValueError):
            count_colored_dyck(3, ColorSpec(u=(1,), d=(1, 1, 1)))


class TestKMotzkin:
    def test_ground_level_examples(self):
        assert count_k_motzkin(3, 0) == 3
        assert count_k_motzkin(0, 0) == 1
        assert count_k_motzkin(0, 4) == 1

    def test_unreachable_level_leaves_pure_dyck(self):
        assert count_k_motzkin(4, 3) == 2

    def test_matches_restricted_oracle(self):
        for n in range(9):
            for k in range(5):
                oracle = sum(1 for _ in enumerate_motzkin(n, {k}))
                assert count_k_motzkin(n, k) == oracle

    def test_colored_matches_weighted_oracle(self):
        for n in range(7):
            for k in range(3):
                for r in (2, 3):
                    oracle = sum(
                        r ** path.text.count("H") for path in enumerate_motzkin(n, {k})
                    )
                    assert count_k_motzkin(n, k, r) == oracle

    def test_bad_arguments_rejected(self):
        with pytest.raises(ValueError):
            count_k_motzkin(3, 0, 0)
        with pytest.raises(ValueError):
            count_k_motzkin(-1, 0)


class TestMotzkin:
    def test_known_values(self):
        assert [count_motzkin(n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]

    def test_matches_oracle(self):
        for n in range(11):
            assert count_motzkin(n) == sum(1 for _ in enumerate_motzkin(n))


class TestColoredMotzkin:
    @staticmethod
    def ones_spec(n: int) -> ColorSpec:
        levels = n // 2
        return ColorSpec(h=(1,) * (levels + 1), u=(1,) * levels, d=(1,) * levels)

    def test_all_ones_reduces_to_motzkin(self):
        for n in range(9):
            assert count_colored_motzkin(n, self.ones_spec(n)) == count_motzkin(n)

    def test_ground_horizontal_only_matches_k_motzkin(self):
        for n in range(8):
            levels = n // 2
            for r in (1, 2, 3):
                spec = ColorSpec(
                    h=(r,) + (0,) * levels, u=(1,) * levels, d=(1,) * levels
                )
                assert count_colored_motzkin(n, spec) == count_k_motzkin(n, 0, r)

    def test_weighted_level0_example(self):
        spec = ColorSpec(h=(2, 1, 0), u=(1, 1), d=(1, 1))
        oracle = weighted_motzkin_oracle(4, (2, 1, 0), (1, 1), (1, 1))
        assert count_colored_motzkin(4, spec) == oracle

    def test_matches_weighted_oracle(self):
        h = (2, 1, 3, 1, 2)
        u = (1, 2, 1, 3)
        d = (3, 1, 2, 1)
        for n in range(8):
            levels = n // 2
            spec = ColorSpec(h=h[: levels + 1], u=u[:levels], d=d[:levels])
            oracle = weighted_motzkin_oracle(n, h, u, d)
            assert count_colored_motzkin(n, spec) == oracle

    def test_short_vectors_rejected(self):
        with pytest.raises(ValueError):
            count_colored_motzkin(4, ColorSpec(h=(1, 1), u=(1, 1), d=(1, 1)))

    def test_negative_colors_rejected(self):
        with pytest.raises(ValueError):
            ColorSpec(h=(-1,))


class TestWeakCompositions:
    def test_examples(self):
        assert list(weak_compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
        assert list(weak_compositions(0, 3)) == [(0, 0, 0)]
        assert len(list(weak_compositions(3, 2))) == 4

    def test_cardinality_is_binomial(self):
        for total in range(7):
            for parts in range(1, 5):
                count = sum(1 for _ in weak_compositions(total, parts))
                assert count == binomial(total + parts - 1, total)

    def test_zero_parts(self):
        assert list(weak_compositions(0, 0)) == [()]
        with pytest.raises(ValueError):
            weak_compositions(1, 0)

    def test_all_distinct_and_correct_sum(self):
        seen = list(weak_compositions(5, 3))
        assert len(set(seen)) == len(seen)
        assert all(sum(parts) == 5 and len(parts) == 3 for parts in seen)


class TestBinomialIdentity:
    def test_examples(self):
        assert binomial_identity_check(2, (2, 1))
        assert binomial_identity_check(0, (4, 4, 4))
        assert binomial_identity_check(3, (1, 1, 1))

    def test_small_sweep(self):
        def positive_vectors(budget):
            for first in range(1, budget + 1):
                yield (first,)
                for rest in positive_vectors(budget - first):
                    yield (first,) + rest

        for m in range(5):
            for parts in positive_vectors(6):
                assert binomial_identity_check(m, parts), (m, parts)

    def test_holds_with_zero_capacity_bins(self):
        assert binomial_identity_check(2, (2, 0, 1))
        assert binomial_identity_check(3, (0,)) is True
