"""Grid geometry, the scalar field and maze containers, and the seeded RNG."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import IntEnum
from typing import NamedTuple, Sequence

import numpy as np


class CellCoord(NamedTuple):
    col: int
    row: int


class CellKind(IntEnum):
    OPEN = 0
    WALL = 1
    ENTRANCE = 2
    EXIT = 3


# up, right, down, left
_OFFSETS4 = ((0, -1), (1, 0), (0, 1), (-1, 0))
# clockwise starting at up
_OFFSETS8 = ((0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1))


class GridError(ValueError):
    pass


def _check_inside(c: CellCoord, w: int, h: int) -> None:
    if not (0 <= c[0] < w and 0 <= c[1] < h):
        raise GridError(f"cell {tuple(c)} outside {w}x{h} grid")


def neighbors4(c: CellCoord, w: int, h: int) -> list[CellCoord]:
    """In-bounds orthogonal neighbours in the order up, right, down, left."""
    _check_inside(c, w, h)
    col, row = c
    return [
        CellCoord(col + dc, row + dr)
        for dc, dr in _OFFSETS4
        if 0 <= col + dc < w and 0 <= row + dr < h
    ]


def neighbors8(c: CellCoord, w: int, h: int) -> list[CellCoord]:
    """In-bounds king-move neighbours, clockwise from up."""
    _check_inside(c, w, h)
    col, row = c
    return [
        CellCoord(col + dc, row + dr)
        for dc, dr in _OFFSETS8
        if 0 <= col + dc < w and 0 <= row + dr < h
    ]


def euclidean(a: Sequence[float], b: Sequence[float]) -> float:
    return math.sqrt((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2)


def is_border(c: CellCoord, w: int, h: int) -> bool:
    return c[0] == 0 or c[1] == 0 or c[0] == w - 1 or c[1] == h - 1


class RandomSource:
    """Seeded random stream backed by numpy's PCG64.

    Equal seeds and equal call sequences give equal outputs on every
    platform numpy supports.
    """

    def __init__(self, seed: int):
        if seed < 0 or seed >= 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    @classmethod
    def _from_generator(cls, gen: np.random.Generator, seed: int) -> "RandomSource":
        src = cls.__new__(cls)
        src.seed = seed
        src._gen = gen
        return src

    def random(self) -> float:
        """Uniform real in [0, 1)."""
        return float(self._gen.random())

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in [a, b], both ends inclusive."""
        return int(self._gen.integers(a, b, endpoint=True))

    def symmetric(self) -> float:
        """Uniform real in [-1, 1]."""
        return float(self._gen.uniform(-1.0, 1.0))

    def choice(self, k: int) -> int:
        """Uniform index in range(k)."""
        return int(self._gen.integers(0, k))

    def randoms(self, size: int) -> np.ndarray:
        return self._gen.random(size)

    def spawn(self) -> "RandomSource":
        """An independent child stream, derived deterministically."""
        child = self._gen.spawn(1)[0]
        return RandomSource._from_generator(child, self.seed)


@dataclass(eq=False)
class ScalarField:
    """Per-cell values in [0, 1], indexed ``values[row, col]``."""

    width: int
    height: int
    values: np.ndarray
    entrances: tuple[CellCoord, CellCoord]

    def __post_init__(self) -> None:
        if self.width < 2 or self.height < 2:
            raise GridError("field must be at least 2x2")
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.height, self.width):
            raise GridError(
                f"values shape {self.values.shape} != {(self.height, self.width)}"
            )
        self.entrances = tuple(CellCoord(*e) for e in self.entrances)
        if len(self.entrances) != 2 or self.entrances[0] == self.entrances[1]:
            raise GridError("a field needs exactly two distinct entrances")
        for e in self.entrances:
            _check_inside(e, self.width, self.height)
            if not is_border(e, self.width, self.height):
                raise GridError(f"entrance {tuple(e)} is not on the border")

    @classmethod
    def uniform(cls, width: int, height: int, value: float,
                entrances: tuple[CellCoord, CellCoord]) -> "ScalarField":
        return cls(width, height, np.full((height, width), float(value)), entrances)

    def __getitem__(self, c: CellCoord) -> float:
        return float(self.values[c[1], c[0]])

    def __setitem__(self, c: CellCoord, v: float) -> None:
        self.values[c[1], c[0]] = v

    def copy(self) -> "ScalarField":
        return ScalarField(self.width, self.height, self.values.copy(), self.entrances)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarField):
            return NotImplemented
        return (
            self.entrances == other.entrances
            and np.array_equal(self.values, other.values)
        )


@dataclass(eq=False)
class MazeGrid:
    """Finished board of ``CellKind`` codes, indexed ``cells[row, col]``."""

    width: int
    height: int
    cells: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        self.cells = np.asarray(self.cells, dtype=np.int8)
        if self.cells.shape != (self.height, self.width):
            raise GridError(
                f"cells shape {self.cells.shape} != {(self.height, self.width)}"
            )

    def __getitem__(self, c: CellCoord) -> CellKind:
        return CellKind(int(self.cells[c[1], c[0]]))

    def __setitem__(self, c: CellCoord, kind: CellKind) -> None:
        self.cells[c[1], c[0]] = kind

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MazeGrid):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)

    def copy(self) -> "MazeGrid":
        return MazeGrid(self.width, self.height, self.cells.copy())

    def _find(self, kind: CellKind) -> list[CellCoord]:
        rows, cols = np.nonzero(self.cells == kind)
        return [CellCoord(int(c), int(r)) for r, c in zip(rows, cols)]

    @property
    def entrance(self) -> CellCoord:
        found = self._find(CellKind.ENTRANCE)
        if len(found) != 1:
            raise GridError(f"expected one entrance, found {len(found)}")
        return found[0]

    @property
    def exit(self) -> CellCoord:
        found = self._find(CellKind.EXIT)
        if len(found) != 1:
            raise GridError(f"expected one exit, found {len(found)}")
        return found[0]

    def passable(self) -> np.ndarray:
        """Boolean mask of cells a walker may stand on."""
        return self.cells != CellKind.WALL

    def wall_count(self) -> int:
        return int(np.count_nonzero(self.cells == CellKind.WALL))

    def interior_mask(self) -> np.ndarray:
        mask = np.zeros((self.height, self.width), dtype=bool)
        mask[1:-1, 1:-1] = True
        return mask

    def dead_ends(self) -> list[CellCoord]:
        """Open cells with exactly one passable orthogonal neighbour."""
        out = []
        for r, c in zip(*np.nonzero(self.cells == CellKind.OPEN)):
            cc = CellCoord(int(c), int(r))
            k = sum(self[nb] != CellKind.WALL
                    for nb in neighbors4(cc, self.width, self.height))
            if k == 1:
                out.append(cc)
        return out


def place_entrances(w: int, h: int, rng: RandomSource) -> tuple[CellCoord, CellCoord]:
    """Entrance on the left edge, exit on the right edge, at random rows.

    Corner rows are avoided when the grid is tall enough, since a corner
    cell has no interior neighbour and would be sealed in by the border.
    """
    if w < 2 or h < 2:
        raise GridError(f"grid {w}x{h} too small for two entrances")
    lo, hi = (1, h - 2) if h >= 3 else (0, h - 1)
    return CellCoord(0, rng.randint(lo, hi)), CellCoord(w - 1, rng.randint(lo, hi))
