"""Exact counting: foot tables, frame cardinalities, and path counts.

Everything returns plain Python integers, so results stay exact at any
magnitude.  The closed formulas here are the fast route; the enumerators
in the paths module are the slow route the tests compare them against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .frames import (
    FRAME_ENUMERATION_CAP,
    Frame,
    ensure_frame,
    enumerate_frames,
)


def binomial(top: int, bottom: int) -> int:
    """Binomial coefficient with the conventions the counting sums need.

    binomial(a, 0) is 1 for every integer a, including a = -1, which is
    how choosing nothing from an empty supply contributes a factor 1.
    binomial(a, b) is 0 whenever b is negative or exceeds a.
    """
    if bottom == 0:
        return 1
    if bottom < 0 or top < bottom:
        return 0
    return math.comb(top, bottom)


def catalan(n: int) -> int:
    """The n-th Catalan number, computed by the lift-and-glue recursion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    values = [1]
    for m in range(1, n + 1):
        values.append(sum(values[m - 1 - k] * values[k] for k in range(m)))
    return values[n]


class FootTable:
    """Counts of Dyck paths by half-length, level, and number of feet.

    count(n, s, j) is the number of Dyck paths of length 2n with exactly
    j lattice nodes at level s.  Level 0 is seeded by the one-path tables
    for lengths 0 and 2 and grown with the lift-and-glue recursion; each
    higher level convolves the level below against itself.  Querying
    beyond the built bounds transparently rebuilds a larger table, so
    grow the table from a single thread and share it read-only after.
    """

    def __init__(self, max_level: int, max_half_length: int) -> None:
        if max_level < 0 or max_half_length < 0:
            raise ValueError("table bounds must be nonnegative")
        self._build(max_level, max_half_length)

    @property
    def max_level(self) -> int:
        return self._max_level

    @property
    def max_half_length(self) -> int:
        return self._max_half_length

    def _build(self, max_level: int, max_half_length: int) -> None:
        level0 = [[0] * (n + 2) for n in range(max_half_length + 1)]
        level0[0][1] = 1
        if max_half_length >= 1:
            level0[1][2] = 1
        for n in range(2, max_half_length + 1):
            row = level0[n]
            # A 2-footed path is a lifting of anything one size smaller.
            row[2] = sum(level0[n - 1])
            # More feet: a lifted front glued to a path with one foot less.
            for j in range(3, n + 2):
                row[j] = sum(
                    level0[i + 1][2] * level0[n - i - 1][j - 1]
                    for i in range(n - 1)
                    if j - 1 < len(level0[n - i - 1])
                )
        upper: list[list[list[int]]] = []
        below = level0
        for _s in range(1, max_level + 1):
            rows = [[1]]
            for n in range(1, max_half_length + 1):
                row = [0] * (n + 1)
                for j in range(n + 1):
                    acc = 0
                    for i in range(n):
                        left = below[i]
                        right = rows[n - 1 - i]
                        for k in range(min(j, len(left) - 1) + 1):
                            if j - k < len(right):
                                acc += left[k] * right[j - k]
                    row[j] = acc
                rows.append(row)
            upper.append(rows)
            below = rows
        self._level0 = level0
        self._upper = upper
        self._max_level = max_level
        self._max_half_length = max_half_length

    def _ensure(self, half_length: int, level: int) -> None:
        if half_length < 0 or level < 0:
            raise ValueError("arguments must be nonnegative")
        if half_length > self._max_half_length or level > self._max_level:
            self._build(
                max(level, self._max_level),
                max(half_length, self._max_half_length),
            )

    def count(self, half_length: int, level: int, feet: int) -> int:
        """Number of Dyck paths of length 2 * half_length with feet nodes at level."""
        if feet < 0:
            raise ValueError("arguments must be nonnegative")
        self._ensure(half_length, level)
        rows = self._level0 if level == 0 else self._upper[level - 1]
        row = rows[half_length]
        return row[feet] if feet < len(row) else 0

    def row(self, half_length: int, level: int) -> tuple[int, ...]:
        """All counts for one length and level, from 0 feet upward."""
        self._ensure(half_length, level)
        rows = self._level0 if level == 0 else self._upper[level - 1]
        return tuple(rows[half_length])


def feet_level0(max_half_length: int) -> FootTable:
    """Level-0 foot counts for every length up to 2 * max_half_length."""
    return FootTable(0, max_half_length)


def feet_table(max_level: int, max_half_length: int) -> FootTable:
    """Full foot-count table up to the given level and length bounds."""
    return FootTable(max_level, max_half_length)


def frame_cardinality(frame: Frame | Sequence[int]) -> int:
    """Exact number of Dyck paths whose frame is the given one.

    Peeling the frame to its right progenitor frees offset many peaks at
    each level; distributing them over the available positions gives one
    binomial factor per level above the bottom, and the product counts
    the whole class.
    """
    frame = ensure_frame(frame)
    counts = frame.counts
    result = 1
    offset = 0
    for k in range(1, frame.degree + 1):
        offset = counts[k - 1] - offset - 2
        result *= binomial(counts[k] - 1, counts[k] - offset - 1)
    return result


def up_steps_per_level(frame: Frame | Sequence[int]) -> tuple[int, ...]:
    """Up steps joining level k to k + 1, for k from 0 below the degree.

    The value depends only on the frame, not on the particular path:
    each node contributes two incident steps, half rising, so the counts
    satisfy v0 = c0 - 1 and vk = ck - v(k-1).  They are all positive and
    sum to half the frame length.
    """
    frame = ensure_frame(frame)
    ups = []
    previous = 1
    for count in frame.counts[: frame.degree]:
        previous = count - previous
        ups.append(previous)
    return tuple(ups)


@dataclass(frozen=True)
class ColorSpec:
    """Available colors per level (h) and per gap between levels (u, d).

    h[k] colors horizontal steps resting at level k, with 0 meaning no
    horizontal step may sit there; u[k] and d[k] color the up and down
    steps joining levels k and k + 1.
    """

    h: tuple[int, ...] = ()
    u: tuple[int, ...] = ()
    d: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for name in ("h", "u", "d"):
            vec = tuple(getattr(self, name))
            if any(v < 0 for v in vec):
                raise ValueError(f"color counts in {name} must be nonnegative")
            object.__setattr__(self, name, vec)


def _require_entries(vec: tuple[int, ...], size: int, name: str) -> None:
    if len(vec) < size:
        raise ValueError(f"{name} needs at least {size} entries, got {len(vec)}")


def count_colored_dyck(
    n: int, colors: ColorSpec, cap: int | None = FRAME_ENUMERATION_CAP
) -> int:
    """Dyck paths of length 2n with colored up and down steps.

    Every path of a frame uses the same number of up steps per gap, so
    the count is the sum over frames of the class size times the color
    choices, (u[k] * d[k]) ** v[k] across the gaps.  Horizontal colors
    are ignored.  All-ones colors reduce this to the Catalan number.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _require_entries(colors.u, n, "colors.u")
    _require_entries(colors.d, n, "colors.d")
    total = 0
    for frame in enumerate_frames(n, cap=cap):
        weight = frame_cardinality(frame)
        for k, ups in enumerate(up_steps_per_level(frame)):
            weight *= (colors.u[k] * colors.d[k]) ** ups
        total += weight
    return total


def count_k_motzkin(n: int, k: int, r: int = 1) -> int:
    """Motzkin paths of length n with horizontal steps only at level k.

    Such a path is a Dyck path of length 2j plus n - 2j horizontal steps
    distributed over its feet at level k, giving a binomial factor per
    foot census entry; r colors per horizontal step contribute
    r ** (n - 2j).  The 0-footed census entry still counts the bare Dyck
    paths when n == 2j, via binomial(-1, 0) == 1.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if r < 1:
        raise ValueError("r must be at least 1")
    half = n // 2
    table = feet_table(k, half)
    total = 0
    for j in range(half + 1):
        flat = n - 2 * j
        highest = j + 1 if k == 0 else j
        for i in range(highest + 1):
            paths_ji = table.count(j, k, i)
            if paths_ji:
                total += paths_ji * binomial(flat + i - 1, flat) * r**flat
    return total


def count_motzkin(n: int, cap: int | None = FRAME_ENUMERATION_CAP) -> int:
    """The n-th Motzkin number, via the frame decomposition.

    A Motzkin path is a Dyck path of length 2j with n - 2j horizontal
    steps distributed over its 2j + 1 nodes, hence binomial(n, n - 2j)
    arrangements for each underlying path.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for j in range(n // 2 + 1):
        layer = sum(frame_cardinality(fr) for fr in enumerate_frames(j, cap=cap))
        total += layer * binomial(n, n - 2 * j)
    return total


def count_colored_motzkin(
    n: int, colors: ColorSpec, cap: int | None = FRAME_ENUMERATION_CAP
) -> int:
    """Motzkin paths of length n colored per ColorSpec, exactly.

    Sums over the frame of the underlying Dyck path: the class size,
    the up/down color choices per gap, and for each weak composition of
    the n - 2j horizontal steps over levels 0..n//2 a binomial factor
    for placing them among that level's feet times h[t] ** k[t] color
    choices.  A level with no feet admits no horizontal steps, and
    0 ** 0 == 1 keeps levels with zero colors but zero steps neutral.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    levels = n // 2
    _require_entries(colors.h, levels + 1, "colors.h")
    _require_entries(colors.u, levels, "colors.u")
    _require_entries(colors.d, levels, "colors.d")
    total = 0
    for j in range(levels + 1):
        flat = n - 2 * j
        compositions = list(weak_compositions(flat, levels + 1))
        for frame in enumerate_frames(j, cap=cap):
            weight = frame_cardinality(frame)
            for k, ups in enumerate(up_steps_per_level(frame)):
                weight *= (colors.u[k] * colors.d[k]) ** ups
            placements = 0
            for parts in compositions:
                term = 1
                for t, spread in enumerate(parts):
                    term *= binomial(spread + frame.foot_count(t) - 1, spread)
                    if term == 0:
                        break
                    term *= colors.h[t] ** spread
                placements += term
            total += weight * placements
    return total


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of parts nonnegative integers summing to total.

    First entry descends from total to 0, recursively.  There are
    binomial(total + parts - 1, total) of them.  Zero parts are allowed
    only for a zero total, which yields the empty composition.
    """
    if total < 0 or parts < 0:
        raise ValueError("total and parts must be nonnegative")
    if parts == 0 and total > 0:
        raise ValueError("cannot compose a positive total into zero parts")
    return _compositions(total, parts)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def binomial_identity_check(m: int, parts: Sequence[int]) -> bool:
    """Check one instance of the composition identity for binomials.

    Distributing m items over bins of capacities given by parts, counted
    all at once, must agree with the sum over weak compositions of the
    per-bin binomial products.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    sizes = tuple(parts)
    if any(v < 0 for v in sizes):
        raise ValueError("part sizes must be nonnegative")
    direct = binomial(m + sum(sizes) - 1, m)
    spread = 0
    for split in weak_compositions(m, len(sizes)):
        term = 1
        for amount, size in zip(split, sizes):
            term *= binomial(amount + size - 1, amount)
            if term == 0:
                break
        spread += term
    return direct == spread
