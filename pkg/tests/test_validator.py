import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swarmaze.grid import CellCoord as C, CellKind, MazeGrid, RandomSource
from swarmaze.validator import (QueenParams, bfs_path, is_valid_path,
                                oracle_solvable, queen_march)

from conftest import grid_from_rows, random_grid


def union_find_connected(grid):
    """Independent connectivity oracle: merge every passable 4-neighbour pair."""
    h, w = grid.height, grid.width
    parent = list(range(w * h))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ok = grid.passable()
    for row in range(h):
        for col in range(w):
            if not ok[row, col]:
                continue
            for dc, dr in ((1, 0), (0, 1)):
                c, r = col + dc, row + dr
                if c < w and r < h and ok[r, c]:
                    parent[find(row * w + col)] = find(r * w + c)
    a, b = grid.entrance, grid.exit
    return find(a.row * w + a.col) == find(b.row * w + b.col)


def all_patterns(w, h, ent, ext):
    free = [(c, r) for r in range(h) for c in range(w) if (c, r) not in (ent, ext)]
    for bits in itertools.product((CellKind.OPEN, CellKind.WALL), repeat=len(free)):
        cells = np.empty((h, w), dtype=np.int8)
        for (c, r), b in zip(free, bits):
            cells[r, c] = b
        cells[ent[1], ent[0]] = CellKind.ENTRANCE
        cells[ext[1], ext[0]] = CellKind.EXIT
        yield MazeGrid(w, h, cells)


class TestOracle:
    def test_corridor(self, corridor):
        rep = oracle_solvable(corridor)
        assert rep.solvable and len(rep.path) == 9 and rep.steps_taken == 8

    def test_solid(self, solid):
        rep = oracle_solvable(solid)
        assert not rep.solvable and rep.path is None

    @pytest.mark.parametrize("w, h, ent, ext", [
        (3, 3, (0, 1), (2, 1)),
        (4, 3, (0, 0), (3, 2)),
        (3, 4, (0, 2), (2, 1)),
    ])
    def test_exhaustive_small(self, w, h, ent, ext):
        for g in all_patterns(w, h, ent, ext):
            rep = oracle_solvable(g)
            assert rep.solvable == union_find_connected(g)
            if rep.solvable:
                assert is_valid_path(g, rep.path)

    def test_shortest(self):
        g = grid_from_rows([
            "#######",
            "S.....E",
            "#.###.#",
            "#.....#",
            "#######",
        ])
        assert len(bfs_path(g.passable(), g.entrance, g.exit)) == 7

    def test_start_blocked(self):
        mask = np.zeros((3, 3), dtype=bool)
        assert bfs_path(mask, C(0, 0), C(2, 2)) is None


class TestQueen:
    def test_corridor_always(self, corridor):
        hits = 0
        for seed in range(100):
            rep = queen_march(corridor, QueenParams.default_for(corridor, trials=1), RandomSource(seed))
            hits += rep.solvable
            assert rep.method == "queen"
        assert hits == 100

    def test_solid_never(self, solid):
        rep = queen_march(solid, QueenParams(max_steps=50), RandomSource(0))
        assert not rep.solvable and rep.path is None

    def test_loop_grid_with_visited_memory(self):
        g = grid_from_rows([
            "#######",
            "S.....#",
            "#.###.#",
            "#.....E",
            "#######",
        ])
        for memory in ("previous", "visited"):
            p = QueenParams.default_for(g, memory=memory)
            rep = queen_march(g, p, RandomSource(4))
            assert rep.solvable and is_valid_path(g, rep.path)

    def test_visited_walk_is_simple(self):
        g = random_grid(np.random.default_rng(0), 12, 12, 0.2)
        p = QueenParams(max_steps=500, trials=4, memory="visited")
        rep = queen_march(g, p, RandomSource(1))
        if rep.solvable:
            assert len(set(rep.path)) == len(rep.path)

    def test_params_checked(self):
        with pytest.raises(ValueError):
            QueenParams(max_steps=0)
        with pytest.raises(ValueError):
            QueenParams(max_steps=5, memory="all")

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 2**32), st.integers(3, 10), st.integers(3, 10), st.floats(0, 0.6))
    def test_sound(self, seed, w, h, density):
        g = random_grid(np.random.default_rng(seed), w, h, density)
        rep = queen_march(g, QueenParams.default_for(g, trials=4), RandomSource(seed))
        if rep.solvable:
            assert is_valid_path(g, rep.path)
            assert union_find_connected(g)


class TestPathCheck:
    def test_rejects_jump(self, corridor):
        path = [C(0, 1), C(2, 1)] + [C(c, 1) for c in range(3, 9)]
        assert not is_valid_path(corridor, path)

    def test_rejects_wall(self, corridor):
        path = [C(0, 1), C(1, 1), C(1, 0), C(1, 1)] + [C(c, 1) for c in range(2, 9)]
        assert not is_valid_path(corridor, path)

    def test_rejects_empty(self, corridor):
        assert not is_valid_path(corridor, [])
