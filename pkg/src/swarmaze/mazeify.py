"""Turn a scalar field into a maze board."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import CellCoord, CellKind, MazeGrid, RandomSource, ScalarField, neighbors4


@dataclass(frozen=True)
class MazeifyParams:
    kappa: float = 0.5
    r: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.kappa < 1:
            raise ValueError("kappa must lie in (0, 1)")
        if self.r < 0:
            raise ValueError("r must be non-negative")


def threshold(field: ScalarField, kappa: float) -> MazeGrid:
    """Open below ``kappa``, wall at or above it; entrances forced open."""
    cells = np.where(field.values < kappa, CellKind.OPEN, CellKind.WALL).astype(np.int8)
    grid = MazeGrid(field.width, field.height, cells)
    grid[field.entrances[0]] = CellKind.ENTRANCE
    grid[field.entrances[1]] = CellKind.EXIT
    return grid


def carve_alleys(grid: MazeGrid, r: int, rng: RandomSource) -> MazeGrid:
    """Open ``min(r, interior walls)`` interior walls chosen uniformly at random."""
    if r < 0:
        raise ValueError("r must be non-negative")
    out = grid.copy()
    if r == 0:
        return out
    rows, cols = np.nonzero((out.cells == CellKind.WALL) & out.interior_mask())
    pool = list(zip(cols.tolist(), rows.tolist()))
    for _ in range(min(r, len(pool))):
        j = rng.choice(len(pool))
        pool[j], pool[-1] = pool[-1], pool[j]
        c, row = pool.pop()
        out.cells[row, c] = CellKind.OPEN
    return out


def seal_border(grid: MazeGrid) -> MazeGrid:
    out = grid.copy()
    border = ~out.interior_mask()
    keep = (out.cells == CellKind.ENTRANCE) | (out.cells == CellKind.EXIT)
    out.cells[border & ~keep] = CellKind.WALL
    return out


def open_pockets(grid: MazeGrid, field: ScalarField) -> MazeGrid:
    """Re-open one wall next to every fully enclosed open cell.

    The wall chosen is the interior neighbour with the lowest field value,
    ties going to the first in up/right/down/left order.
    """
    out = grid.copy()
    w, h = out.width, out.height
    interior = out.interior_mask()
    for row, col in zip(*np.nonzero(out.cells == CellKind.OPEN)):
        cell = CellCoord(int(col), int(row))
        nbs = neighbors4(cell, w, h)
        if any(out[nb] != CellKind.WALL for nb in nbs):
            continue
        inner = [nb for nb in nbs if interior[nb.row, nb.col]]
        if inner:
            target = min(inner, key=lambda nb: field[nb])
            out[target] = CellKind.OPEN
    return out


def finalize(field: ScalarField, params: MazeifyParams, rng: RandomSource) -> MazeGrid:
    grid = threshold(field, params.kappa)
    grid = carve_alleys(grid, params.r, rng)
    grid = seal_border(grid)
    return open_pockets(grid, field)
