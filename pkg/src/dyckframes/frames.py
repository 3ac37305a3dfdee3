"""Frames of Dyck paths and the algebra of raw count sequences.

The frame of a Dyck path records how many of its lattice nodes sit at
each level, lowest level first, with trailing zeros dropped.  Two paths
are equivalent exactly when their frames agree.  Four elementary
operators drive everything here: prepending a 2 (what lifting a path
does to its frame), adding 1 to the first two entries (gluing a single
peak onto the end), and their two inverses.  A sequence is admissible
when it is the frame of at least one path; this module decides that by
two independent methods and builds the canonical representative path of
any admissible frame.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import NotAdmissible, NotDyck, NotLifted, ResourceLimit, Underflow
from .paths import Path, parse_path

FRAME_ENUMERATION_CAP = 20

# A raw sequence is any finite tuple of nonnegative ints, trailing zeros
# trimmed; admissibility is a property to be decided, not assumed.
RawSequence = tuple[int, ...]


def trim(seq: Iterable[int] | "Frame") -> RawSequence:
    """Copy a sequence as a tuple with trailing zeros removed."""
    counts = seq.counts if isinstance(seq, Frame) else tuple(seq)
    end = len(counts)
    while end and counts[end - 1] == 0:
        end -= 1
    return counts[:end]


def frame_length(seq: Sequence[int] | "Frame") -> int:
    """Sum of the entries minus one; even for admissible sequences."""
    return sum(trim(seq)) - 1


def lift_frame(seq: Sequence[int] | "Frame") -> RawSequence:
    """Prepend a 2: the frame counterpart of lifting a path."""
    return (2,) + trim(seq)


def glue_frames(
    first: Sequence[int] | "Frame", second: Sequence[int] | "Frame"
) -> RawSequence:
    """Entrywise sum with the leading entry reduced by one.

    The glued paths share the node where they meet, so one level-0 foot
    is double counted.  Commutative and associative; (1,) is the
    identity.
    """
    a, b = trim(first), trim(second)
    if not a or not b:
        raise ValueError("glue_frames requires two nonempty sequences")
    if len(a) < len(b):
        a, b = b, a
    merged = list(a)
    for k, value in enumerate(b):
        merged[k] += value
    merged[0] -= 1
    return trim(merged)


def extend_frame(seq: Sequence[int] | "Frame") -> RawSequence:
    """Add 1 to the first two entries: gluing a single peak onto the end."""
    counts = trim(seq)
    if not counts:
        raise ValueError("extend_frame requires a nonempty sequence")
    second = counts[1] if len(counts) > 1 else 0
    return (counts[0] + 1, second + 1) + counts[2:]


def unextend(seq: Sequence[int] | "Frame") -> RawSequence:
    """Subtract 1 from the first two entries; inverse of extend_frame."""
    counts = trim(seq)
    first = counts[0] if counts else 0
    second = counts[1] if len(counts) > 1 else 0
    if first < 1 or second < 1:
        raise Underflow(f"first two entries of {counts!r} must both be at least 1")
    return trim((first - 1, second - 1) + counts[2:])


def unlift(seq: Sequence[int] | "Frame") -> RawSequence:
    """Drop a leading 2; inverse of lift_frame on its image."""
    counts = trim(seq)
    if not counts or counts[0] != 2:
        raise NotLifted(f"leading entry of {counts!r} is not 2")
    return trim(counts[1:])


def is_admissible_trace(seq: Sequence[int] | "Frame") -> bool:
    """Decide admissibility by running the reduction procedure.

    Repeatedly, a leading 2 is erased, and otherwise 1 is subtracted from
    the first two entries; the sequence is admissible exactly when this
    reaches (1,).  The walk stops early as soon as an entry would go
    negative or a leading entry hits 0.  Every step removes 2 from the
    entry sum, so termination is immediate by that fuel.
    """
    counts = trim(seq)
    for value in counts:
        if value < 0:
            return False
    total = sum(counts)
    buf = list(counts)
    buf.append(0)  # virtual entry so the second slot always exists
    i = 0
    while total > 0:
        x = buf[i]
        if x == 1 and total == 1:
            return True
        if x == 2:
            i += 1
            total -= 2
        elif x == 0:
            return False
        else:
            y = buf[i + 1]
            if y == 0:
                return False
            buf[i] = x - 1
            buf[i + 1] = y - 1
            total -= 2
    return False


def is_admissible_closed(seq: Sequence[int] | "Frame") -> bool:
    """Decide admissibility from alternating partial sums, no reduction.

    Writing the trimmed sequence as (c0, ..., cf) with cf > 0: for f = 0
    it must be exactly (1,).  Otherwise c0 must be at least 2, every
    partial sum ct - c(t-1) + ... +- c0 with t < f must be at least 2
    when t is even and at least 0 when t is odd, and the final one must
    equal 1 when f is even and -1 when f is odd.
    """
    counts = trim(seq)
    if not counts:
        return False
    last = len(counts) - 1
    if last == 0:
        return counts[0] == 1
    if counts[0] < 2:
        return False
    alt = counts[0]
    for t in range(1, last + 1):
        value = counts[t]
        if value < 0:
            return False
        alt = value - alt
        if t < last:
            if alt < (0 if t % 2 else 2):
                return False
        elif alt != (-1 if last % 2 else 1):
            return False
    return True


@dataclass(frozen=True)
class Frame:
    """An admissible frame: the per-level foot counts of some Dyck path.

    Construction trims trailing zeros and checks admissibility, so a
    Frame value is a proof that a matching path exists.
    """

    counts: RawSequence

    def __post_init__(self) -> None:
        normalized = trim(self.counts)
        object.__setattr__(self, "counts", normalized)
        if not is_admissible_closed(normalized):
            raise NotAdmissible(f"not the frame of any Dyck path: {normalized!r}")

    @property
    def degree(self) -> int:
        """Index of the highest level that has any feet."""
        return len(self.counts) - 1

    @property
    def length(self) -> int:
        """Length of every path belonging to the frame; always even."""
        return sum(self.counts) - 1

    def foot_count(self, level: int) -> int:
        return self.counts[level] if 0 <= level <= self.degree else 0

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.counts)

    @classmethod
    def parse(cls, text: str) -> "Frame":
        return cls(parse_frame_text(text))


NULL_FRAME = Frame((1,))


def parse_frame_text(text: str) -> RawSequence:
    """Parse comma-separated nonnegative integers; trailing zeros dropped."""
    values = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece.isdigit():
            raise ValueError(f"bad frame entry {piece!r} in {text!r}")
        values.append(int(piece))
    return trim(values)


def ensure_frame(value: Frame | Sequence[int]) -> Frame:
    """Coerce raw counts to a Frame, proving admissibility on the way."""
    return value if isinstance(value, Frame) else Frame(trim(value))


def frame_of(path: Path) -> Frame:
    """The frame of a Dyck path: its foot counts per level."""
    if not path.is_dyck:
        raise NotDyck(f"path has horizontal steps: {path.text!r}")
    levels = path.levels()
    counts = [0] * (max(levels) + 1)
    for level in levels:
        counts[level] += 1
    return Frame(tuple(counts))


def enumerate_frames(
    half_length: int, cap: int | None = FRAME_ENUMERATION_CAP
) -> Iterator[Frame]:
    """Yield every admissible frame of length 2 * half_length exactly once.

    Frames grow generation by generation: each frame of the previous
    length produces its lifting and its extension.  The two children
    coincide only when the parent is the null frame, which is why there
    are 2**(n-1) frames of length 2n for n > 0.
    """
    if half_length < 0:
        raise ValueError("half_length must be nonnegative")
    if cap is not None and half_length > cap:
        raise ResourceLimit(
            f"frame enumeration at size {half_length} exceeds the cap of {cap}"
        )
    return _frames(half_length)


def _frames(half_length: int) -> Iterator[Frame]:
    generation: list[RawSequence] = [(1,)]
    for _ in range(half_length):
        children: list[RawSequence] = []
        seen: set[RawSequence] = set()
        for counts in generation:
            for child in (lift_frame(counts), extend_frame(counts)):
                if child not in seen:
                    seen.add(child)
                    children.append(child)
        generation = children
    for counts in generation:
        yield Frame(counts)


def _reduction_ops(counts: RawSequence) -> list[bool] | None:
    """Record the reduction of counts down to (1,); None if it gets stuck.

    True marks an erased leading 2, False marks a subtraction from the
    first two entries.  Same rule and same termination argument as
    is_admissible_trace, which stays separate only to keep the heavily
    swept boolean check allocation-free.
    """
    for value in counts:
        if value < 0:
            return None
    total = sum(counts)
    buf = list(counts)
    buf.append(0)
    i = 0
    ops: list[bool] = []
    while total > 0:
        x = buf[i]
        if x == 1 and total == 1:
            return ops
        if x == 2:
            ops.append(True)
            i += 1
            total -= 2
        elif x == 0:
            return None
        else:
            y = buf[i + 1]
            if y == 0:
                return None
            buf[i] = x - 1
            buf[i + 1] = y - 1
            ops.append(False)
            total -= 2
    return None


def canonical_representative(frame: Frame | Sequence[int]) -> Path:
    """The distinguished path of a frame.

    The frame is reduced to (1,) by the admissibility procedure, then the
    steps are replayed backwards on paths: an erased 2 becomes a lifting
    and a subtraction becomes a peak glued onto the end.  In the result,
    any maximal run of down steps is followed by at most one up step.
    """
    frame = ensure_frame(frame)
    ops = _reduction_ops(frame.counts)
    if ops is None:  # unreachable for a validated Frame; kept as a guard
        raise NotAdmissible(f"not reducible to the null frame: {frame.counts!r}")
    chars: deque[str] = deque()
    for erased in reversed(ops):
        if erased:
            chars.appendleft("U")
            chars.append("D")
        else:
            chars.append("U")
            chars.append("D")
    return parse_path("".join(chars))


def consequences_hold(frame: Frame | Sequence[int]) -> bool:
    """Check three structural facts that every admissible frame satisfies.

    With counts (c0, ..., cf): the entry below the top exceeds the top
    entry; c0 == c1 + 1 exactly when the second entry is the last one
    (degree 1; at higher degrees c1 >= c0, so the gap of one is
    impossible); and every interior entry cj with 0 < j < f - 1
    satisfies 2 <= cj <= c(j-1) + c(j+1) - 2.  Vacuously true for the
    null frame.
    """
    frame = ensure_frame(frame)
    counts, f = frame.counts, frame.degree
    if f == 0:
        return True
    if not counts[f - 1] > counts[f]:
        return False
    if (counts[0] == counts[1] + 1) != (f == 1):
        return False
    for j in range(1, f - 1):
        if not 2 <= counts[j] <= counts[j - 1] + counts[j + 1] - 2:
            return False
    return True


def left_progenitor(seq: Sequence[int] | "Frame") -> RawSequence:
    """Strip the maximal run of leading 2s (repeated unlift)."""
    counts = trim(seq)
    k = 0
    while k < len(counts) and counts[k] == 2:
        k += 1
    return counts[k:]


def right_progenitor(seq: Sequence[int] | "Frame") -> RawSequence:
    """Normalize the leading entry to 2 by repeated unextend."""
    counts = trim(seq)
    if not counts or counts[0] < 2:
        raise ValueError(f"no right progenitor for {counts!r}")
    shift = counts[0] - 2
    second = counts[1] if len(counts) > 1 else 0
    if second < shift:
        raise Underflow(f"second entry of {counts!r} cannot absorb {shift}")
    return trim((2, second - shift) + counts[2:])
