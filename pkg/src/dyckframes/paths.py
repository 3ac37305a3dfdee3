"""Lattice paths built from up, down, and horizontal unit steps.

Paths start and end at level 0 and never dip below it.  A path without
horizontal steps is a Dyck path; allowing them gives Motzkin paths.  The
exhaustive enumerators here are the ground truth that every closed
counting formula elsewhere in the package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import MalformedPath, ResourceLimit

DYCK_ENUMERATION_CAP = 16
MOTZKIN_ENUMERATION_CAP = 14


class Step(Enum):
    """A single unit step: up one level, down one level, or flat."""

    UP = "U"
    DOWN = "D"
    HORIZONTAL = "H"

    @property
    def rise(self) -> int:
        return _RISE[self]


_RISE = {Step.UP: 1, Step.DOWN: -1, Step.HORIZONTAL: 0}


@dataclass(frozen=True)
class Path:
    """An immutable lattice path, stored as its step sequence.

    Validity (never below level 0, ending at level 0) is checked on
    construction, so every Path value is a real path.
    """

    steps: tuple[Step, ...] = ()

    def __post_init__(self) -> None:
        level = 0
        for step in self.steps:
            level += step.rise
            if level < 0:
                raise MalformedPath(f"path dips below level 0: {self.text!r}")
        if level != 0:
            raise MalformedPath(f"path ends at level {level}, not 0: {self.text!r}")

    @property
    def text(self) -> str:
        """The path as a string of U, D, and H characters."""
        return "".join(step.value for step in self.steps)

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def is_dyck(self) -> bool:
        return Step.HORIZONTAL not in self.steps

    def levels(self) -> tuple[int, ...]:
        """Level of every lattice node the path visits; length is len + 1."""
        out = [0]
        for step in self.steps:
            out.append(out[-1] + step.rise)
        return tuple(out)


NULL_PATH = Path()


def parse_path(text: str) -> Path:
    """Parse a string of U/D/H characters into a validated Path."""
    steps = []
    for ch in text:
        try:
            steps.append(Step(ch))
        except ValueError:
            raise MalformedPath(f"illegal step character {ch!r}") from None
    return Path(tuple(steps))


def level_sequence(path: Path) -> tuple[int, ...]:
    """The level of each lattice node, in order, starting and ending at 0."""
    return path.levels()


def foot_count(path: Path, level: int) -> int:
    """How many nodes of the path lie at the given level."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    return path.levels().count(level)


def lift(path: Path) -> Path:
    """Wrap a path in an up step at the start and a down step at the end."""
    return Path((Step.UP,) + path.steps + (Step.DOWN,))


def glue(first: Path, second: Path) -> Path:
    """Concatenate two paths; associative but not commutative."""
    return Path(first.steps + second.steps)


def enumerate_dyck(
    half_length: int, cap: int | None = DYCK_ENUMERATION_CAP
) -> Iterator[Path]:
    """Yield every Dyck path of length 2 * half_length exactly once.

    Paths come out in lexicographic order of their step strings with
    U sorting before D, so the first path is the single big mountain and
    the last is the sawtooth.  Pass cap=None to lift the size guard.
    """
    if half_length < 0:
        raise ValueError("half_length must be nonnegative")
    _check_cap("Dyck", half_length, cap)
    return _dyck_paths(half_length)


def _check_cap(kind: str, n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise ResourceLimit(f"{kind} enumeration at size {n} exceeds the cap of {cap}")


def _dyck_paths(half_length: int) -> Iterator[Path]:
    buf: list[str] = []

    def rec(level: int, remaining: int) -> Iterator[Path]:
        if remaining == 0:
            yield parse_path("".join(buf))
            return
        if remaining >= level + 2:
            buf.append("U")
            yield from rec(level + 1, remaining - 1)
            buf.pop()
        if level > 0:
            buf.append("D")
            yield from rec(level - 1, remaining - 1)
            buf.pop()

    return rec(0, 2 * half_length)


def enumerate_motzkin(
    length: int,
    horizontal_levels: Iterable[int] | None = None,
    cap: int | None = MOTZKIN_ENUMERATION_CAP,
) -> Iterator[Path]:
    """Yield every Motzkin path of the given length exactly once.

    When horizontal_levels is given, horizontal steps may only occur at
    those levels; the empty set forbids them entirely, while None leaves
    them unrestricted.  Order is lexicographic with U < D < H.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    _check_cap("Motzkin", length, cap)
    allowed = None if horizontal_levels is None else frozenset(horizontal_levels)
    return _motzkin_paths(length, allowed)


def _motzkin_paths(length: int, allowed: frozenset[int] | None) -> Iterator[Path]:
    buf: list[str] = []

    def rec(level: int, remaining: int) -> Iterator[Path]:
        if remaining == 0:
            yield parse_path("".join(buf))
            return
        if remaining >= level + 2:
            buf.append("U")
            yield from rec(level + 1, remaining - 1)
            buf.pop()
        if level > 0:
            buf.append("D")
            yield from rec(level - 1, remaining - 1)
            buf.pop()
        if remaining >= level + 1 and (allowed is None or level in allowed):
            buf.append("H")
            yield from rec(level, remaining - 1)
            buf.pop()

    return rec(0, length)
