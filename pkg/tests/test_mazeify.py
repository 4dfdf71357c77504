import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swarmaze.grid import CellCoord as C, CellKind, RandomSource, ScalarField
from swarmaze.mazeify import (MazeifyParams, carve_alleys, finalize,
                              open_pockets, seal_border, threshold)

from conftest import grid_from_rows


def fld(values, ents=None):
    values = np.asarray(values, dtype=float)
    h, w = values.shape
    return ScalarField(w, h, values, ents or (C(0, 1), C(w - 1, 1)))


class TestThreshold:
    def test_strict_below_is_open(self):
        g = threshold(fld([[0.49, 0.5, 0.51]] * 3), 0.5)
        assert g[C(0, 0)] == CellKind.OPEN and g[C(1, 2)] == CellKind.WALL
        assert g[C(2, 0)] == CellKind.WALL and g[C(1, 1)] == CellKind.WALL

    def test_extremes(self):
        g = threshold(fld([[0.0, 1.0, 0.5]] * 3), 0.5)
        assert g[C(0, 0)] == CellKind.OPEN
        assert g[C(1, 0)] == CellKind.WALL and g[C(2, 0)] == CellKind.WALL

    def test_entrances_forced(self):
        g = threshold(fld(np.ones((3, 4))), 0.5)
        assert g[C(0, 1)] == CellKind.ENTRANCE and g[C(3, 1)] == CellKind.EXIT
        assert g.wall_count() == 10

    @given(st.integers(2, 9), st.integers(2, 9), st.floats(0.01, 0.99), st.integers(0, 2**32))
    def test_matches_elementwise(self, w, h, kappa, seed):
        vals = np.random.default_rng(seed).random((h, w))
        g = threshold(fld(vals, (C(0, 0), C(w - 1, h - 1))), kappa)
        for row in range(h):
            for col in range(w):
                if (col, row) in ((0, 0), (w - 1, h - 1)):
                    continue
                want = CellKind.OPEN if vals[row, col] < kappa else CellKind.WALL
                assert g.cells[row, col] == want


class TestCarve:
    def test_exact_count(self):
        g = threshold(fld(np.ones((8, 10))), 0.5)
        before = g.wall_count()
        out = carve_alleys(g, 7, RandomSource(0))
        assert before - out.wall_count() == 7
        assert np.array_equal(out.cells[0], g.cells[0])

    def test_more_than_available(self):
        g = threshold(fld(np.ones((4, 4))), 0.5)
        out = carve_alleys(g, 50, RandomSource(0))
        assert out.interior_mask().sum() == ((out.cells == CellKind.OPEN) & out.interior_mask()).sum()

    def test_zero_and_negative(self):
        g = threshold(fld(np.ones((4, 4))), 0.5)
        assert carve_alleys(g, 0, RandomSource(0)) == g
        with pytest.raises(ValueError):
            carve_alleys(g, -1, RandomSource(0))


class TestSealAndPockets:
    def test_seal_keeps_entrances(self):
        g = threshold(fld(np.zeros((4, 5))), 0.5)
        out = seal_border(g)
        assert out.wall_count() == 12  # 14 border cells less the two entrances
        assert out[C(0, 1)] == CellKind.ENTRANCE and out[C(4, 1)] == CellKind.EXIT

    def test_pocket_opens_lowest_neighbour(self):
        g = grid_from_rows([
            "######",
            "S.####",
            "###.#E",
            "######",
            "######",
        ])
        vals = np.full((5, 6), 0.9)
        vals[1, 3] = 0.6   # above the pocket
        vals[3, 3] = 0.2   # below, the lowest interior neighbour
        out = open_pockets(g, ScalarField(6, 5, vals, (C(0, 1), C(5, 2))))
        assert out[C(3, 3)] == CellKind.OPEN
        assert out.wall_count() == g.wall_count() - 1

    def test_no_pocket_untouched(self, corridor):
        f = ScalarField.uniform(9, 3, 0.3, (C(0, 1), C(8, 1)))
        assert open_pockets(corridor, f) == corridor


class TestFinalize:
    def test_uniform_zero_is_open_room(self):
        g = finalize(fld(np.zeros((6, 8))), MazeifyParams(r=5), RandomSource(0))
        assert g.interior_mask().sum() == ((g.cells == CellKind.OPEN) & g.interior_mask()).sum()
        assert g.wall_count() == 2 * 8 + 2 * 6 - 4 - 2

    def test_uniform_one_is_solid(self):
        from swarmaze.validator import oracle_solvable
        g = finalize(fld(np.ones((6, 8))), MazeifyParams(r=0), RandomSource(0))
        assert g.wall_count() == 6 * 8 - 2
        assert not oracle_solvable(g).solvable

    def test_deterministic(self):
        f = fld(np.random.default_rng(1).random((9, 12)))
        p = MazeifyParams(r=10)
        assert finalize(f, p, RandomSource(3)) == finalize(f, p, RandomSource(3))

    def test_ant_field_has_corridors_and_dead_ends(self):
        from swarmaze import aaca
        from swarmaze.config import GeneratorConfig
        res = aaca.run_aaca(GeneratorConfig(algo="aaca"), RandomSource(5))
        g = res.grid
        assert 0 < g.wall_count() < 40 * 15
        assert len(g.dead_ends()) >= 1


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 12), st.integers(3, 12), st.integers(0, 30), st.integers(0, 2**32))
def test_finalize_shape(w, h, r, seed):
    rng = np.random.default_rng(seed)
    ents = (C(0, 1), C(w - 1, h - 2))
    field = ScalarField(w, h, rng.random((h, w)), ents)
    g = finalize(field, MazeifyParams(kappa=0.5, r=r), RandomSource(seed))
    border = ~g.interior_mask()
    assert g.entrance == ents[0] and g.exit == ents[1]
    assert (g.cells[border] != CellKind.OPEN).all()
    # no open interior cell left walled in on all four sides
    for row, col in zip(*np.nonzero(g.cells == CellKind.OPEN)):
        if 1 < col < w - 2 and 1 < row < h - 2:
            around = [g.cells[row + dr, col + dc] for dc, dr in ((0, 1), (0, -1), (1, 0), (-1, 0))]
            assert any(a != CellKind.WALL for a in around)


def test_params_checked():
    with pytest.raises(ValueError):
        MazeifyParams(kappa=1.0)
    with pytest.raises(ValueError):
        MazeifyParams(r=-2)
