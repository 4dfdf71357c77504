"""Randomised Prim spanning-tree maze, the graph-theoretic baseline."""

from __future__ import annotations

import numpy as np

from .grid import CellCoord, CellKind, MazeGrid, RandomSource, place_entrances


def _odd_row(row: int, h: int) -> int:
    if row % 2 == 1:
        return row
    return row - 1 if row - 1 >= 1 else row + 1


def prim_baseline(w: int, h: int, rng: RandomSource) -> MazeGrid:
    """Rooms sit on odd coordinates; Prim's frontier grows a spanning tree
    over them and each tree edge opens the wall cell between two rooms.

    Grids with no interior (``w < 3`` or ``h < 3``) get both entrances on one
    row with the cells between them opened.
    """
    entrance, exit_ = place_entrances(w, h, rng)
    cells = np.full((h, w), CellKind.WALL, dtype=np.int8)
    grid = MazeGrid(w, h, cells)
    if w < 3 or h < 3:
        exit_ = CellCoord(exit_.col, entrance.row)
        grid.cells[entrance.row, :] = CellKind.OPEN
        grid[entrance] = CellKind.ENTRANCE
        grid[exit_] = CellKind.EXIT
        return grid

    entrance = CellCoord(0, _odd_row(entrance.row, h))
    exit_ = CellCoord(w - 1, _odd_row(exit_.row, h))
    rooms_c = range(1, w - 1, 2)
    rooms_r = range(1, h - 1, 2)
    in_tree = np.zeros((h, w), dtype=bool)

    start = CellCoord(rooms_c[rng.choice(len(rooms_c))], rooms_r[rng.choice(len(rooms_r))])
    in_tree[start.row, start.col] = True
    grid[start] = CellKind.OPEN
    frontier: list[tuple[CellCoord, CellCoord]] = []

    def push_edges(room: CellCoord) -> None:
        for dc, dr in ((0, -2), (2, 0), (0, 2), (-2, 0)):
            c, r = room.col + dc, room.row + dr
            if 1 <= c <= w - 2 and 1 <= r <= h - 2 and not in_tree[r, c]:
                frontier.append((room, CellCoord(c, r)))

    push_edges(start)
    while frontier:
        j = rng.choice(len(frontier))
        frontier[j], frontier[-1] = frontier[-1], frontier[j]
        src, dst = frontier.pop()
        if in_tree[dst.row, dst.col]:
            continue
        in_tree[dst.row, dst.col] = True
        grid[dst] = CellKind.OPEN
        grid[CellCoord((src.col + dst.col) // 2, (src.row + dst.row) // 2)] = CellKind.OPEN
        push_edges(dst)

    # with an even width the last interior column holds no rooms
    if w % 2 == 0:
        grid[CellCoord(w - 2, exit_.row)] = CellKind.OPEN
    grid[entrance] = CellKind.ENTRANCE
    grid[exit_] = CellKind.EXIT
    return grid
