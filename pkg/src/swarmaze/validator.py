"""Stop-condition checks: the queen's random march and an exact BFS oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .grid import CellCoord, CellKind, MazeGrid, RandomSource

QUEEN = "queen"
ORACLE = "oracle"

_STEPS4 = ((0, -1), (1, 0), (0, 1), (-1, 0))


@dataclass(frozen=True)
class QueenParams:
    """Walk budget for the queen.

    ``memory="previous"`` forbids only stepping straight back onto the cell
    just left; ``memory="visited"`` forbids every cell already on the walk.
    """

    max_steps: int
    trials: int = 16
    memory: str = "previous"

    def __post_init__(self) -> None:
        if self.max_steps < 1 or self.trials < 1:
            raise ValueError("queen max_steps and trials must be positive")
        if self.memory not in ("previous", "visited"):
            raise ValueError(f"unknown queen memory {self.memory!r}")

    @classmethod
    def default_for(cls, grid: MazeGrid, **kw) -> "QueenParams":
        return cls(max_steps=4 * grid.width * grid.height, **kw)


@dataclass
class SolveReport:
    solvable: bool
    path: Optional[list[CellCoord]]
    steps_taken: int
    method: str


def _walk(passable: np.ndarray, start: CellCoord, goal: CellCoord,
          max_steps: int, memory: str, rng: RandomSource) -> list[CellCoord]:
    h, w = passable.shape
    path = [start]
    prev = None
    seen = {start}
    cur = start
    for _ in range(max_steps):
        moves = []
        for dc, dr in _STEPS4:
            c, r = cur[0] + dc, cur[1] + dr
            if not (0 <= c < w and 0 <= r < h) or not passable[r, c]:
                continue
            nxt = CellCoord(c, r)
            if memory == "previous" and nxt == prev:
                continue
            if memory == "visited" and nxt in seen:
                continue
            moves.append(nxt)
        if not moves:
            break
        prev, cur = cur, moves[rng.choice(len(moves))]
        path.append(cur)
        seen.add(cur)
        if cur == goal:
            break
    return path


def queen_march(grid: MazeGrid, params: QueenParams, rng: RandomSource) -> SolveReport:
    """Random non-backtracking walks from each entrance towards the other one.

    Only horizontal and vertical unit steps are taken.  Returns the first
    walk that ends on the opposite entrance, ordered entrance to exit.
    Failing to find one is not proof that no passage exists.
    """
    passable = grid.passable()
    ends = (grid.entrance, grid.exit)
    steps = 0
    for start, goal in (ends, ends[::-1]):
        for _ in range(params.trials):
            path = _walk(passable, start, goal, params.max_steps, params.memory, rng)
            steps += len(path) - 1
            if path[-1] == goal:
                if start != grid.entrance:
                    path.reverse()
                return SolveReport(True, path, steps, QUEEN)
    return SolveReport(False, None, steps, QUEEN)


def bfs_path(passable: np.ndarray, start: CellCoord,
             goal: CellCoord) -> Optional[list[CellCoord]]:
    """Shortest 4-connected path over a boolean mask, or None."""
    h, w = passable.shape
    if not (passable[start[1], start[0]] and passable[goal[1], goal[0]]):
        return None
    parent = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            path = []
            while cur is not None:
                path.append(cur)
                cur = parent[cur]
            return path[::-1]
        for dc, dr in _STEPS4:
            c, r = cur[0] + dc, cur[1] + dr
            if 0 <= c < w and 0 <= r < h and passable[r, c]:
                nxt = CellCoord(c, r)
                if nxt not in parent:
                    parent[nxt] = cur
                    queue.append(nxt)
    return None


def oracle_solvable(grid: MazeGrid) -> SolveReport:
    path = bfs_path(grid.passable(), grid.entrance, grid.exit)
    if path is None:
        return SolveReport(False, None, 0, ORACLE)
    return SolveReport(True, path, len(path) - 1, ORACLE)


def is_valid_path(grid: MazeGrid, path: list[CellCoord]) -> bool:
    """Unit orthogonal steps, entrance to exit, never through a wall."""
    if not path or path[0] != grid.entrance or path[-1] != grid.exit:
        return False
    for a, b in zip(path, path[1:]):
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            return False
    return all(grid[c] != CellKind.WALL for c in path)
