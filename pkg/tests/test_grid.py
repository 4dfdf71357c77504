import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from swarmaze.grid import (CellCoord as C, GridError, RandomSource,
                           ScalarField, euclidean, is_border, neighbors4,
                           neighbors8, place_entrances)


def brute_neighbors(c, w, h, offsets):
    return [C(c[0] + dc, c[1] + dr) for dc, dr in offsets
            if 0 <= c[0] + dc < w and 0 <= c[1] + dr < h]


class TestNeighbors:
    def test_corner4(self):
        assert neighbors4(C(0, 0), 5, 5) == [C(1, 0), C(0, 1)]

    def test_interior4(self):
        assert len(neighbors4(C(2, 2), 5, 5)) == 4

    def test_right_edge4(self):
        assert neighbors4(C(4, 2), 5, 3) == [C(4, 1), C(3, 2)]

    def test_order4_is_up_right_down_left(self):
        assert neighbors4(C(2, 2), 5, 5) == [C(2, 1), C(3, 2), C(2, 3), C(1, 2)]

    def test_counts8(self):
        assert len(neighbors8(C(0, 0), 3, 3)) == 3
        assert len(neighbors8(C(1, 1), 3, 3)) == 8
        assert len(neighbors8(C(2, 1), 3, 3)) == 5

    def test_order8_clockwise_from_up(self):
        assert neighbors8(C(1, 1), 3, 3) == [
            C(1, 0), C(2, 0), C(2, 1), C(2, 2), C(1, 2), C(0, 2), C(0, 1), C(0, 0)]

    def test_out_of_bounds_rejected(self):
        with pytest.raises(GridError):
            neighbors4(C(5, 0), 5, 5)

    @given(st.integers(1, 12), st.integers(1, 12), st.data())
    def test_four_subset_of_eight(self, w, h, data):
        c = C(data.draw(st.integers(0, w - 1)), data.draw(st.integers(0, h - 1)))
        n4, n8 = neighbors4(c, w, h), neighbors8(c, w, h)
        assert set(n4) <= set(n8)
        assert n8 == brute_neighbors(c, w, h, [(0, -1), (1, -1), (1, 0), (1, 1),
                                               (0, 1), (-1, 1), (-1, 0), (-1, -1)])


class TestEuclidean:
    @pytest.mark.parametrize("a, b, d", [
        ((0, 0), (3, 4), 5.0),
        ((2, 2), (2, 2), 0.0),
        ((1, 1), (4, 5), 5.0),
    ])
    def test_examples(self, a, b, d):
        assert euclidean(C(*a), C(*b)) == d

    coords = st.tuples(st.integers(-50, 50), st.integers(-50, 50))

    @given(coords, coords, coords)
    def test_metric_axioms(self, a, b, c):
        assert euclidean(a, b) == euclidean(b, a)
        assert (euclidean(a, b) == 0) == (a == b)
        assert euclidean(a, c) <= euclidean(a, b) + euclidean(b, c) + 1e-9


class TestRandomSource:
    def test_prefix_reproducible(self):
        a, b = RandomSource(2024), RandomSource(2024)
        assert np.array_equal(a.randoms(10**6), b.randoms(10**6))

    def test_different_seeds_differ(self):
        assert RandomSource(1).random() != RandomSource(2).random()

    def test_ranges(self):
        rng = RandomSource(5)
        ints = [rng.randint(3, 5) for _ in range(500)]
        assert set(ints) == {3, 4, 5}
        sym = [rng.symmetric() for _ in range(500)]
        assert all(-1 <= x <= 1 for x in sym)
        assert min(sym) < -0.5 and max(sym) > 0.5
        assert all(0 <= rng.random() < 1 for _ in range(500))

    def test_spawn_is_deterministic(self):
        a, b = RandomSource(9).spawn(), RandomSource(9).spawn()
        assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]

    def test_seed_range(self):
        with pytest.raises(ValueError):
            RandomSource(-1)
        RandomSource(2**64 - 1)


class TestPlaceEntrances:
    def test_opposite_borders(self):
        for seed in range(20):
            a, b = place_entrances(40, 15, RandomSource(seed))
            assert a.col == 0 and b.col == 39
            assert 1 <= a.row <= 13 and 1 <= b.row <= 13

    def test_smallest_grid(self):
        for seed in range(20):
            a, b = place_entrances(2, 2, RandomSource(seed))
            assert a != b
            assert is_border(a, 2, 2) and is_border(b, 2, 2)

    def test_reproducible(self):
        assert place_entrances(10, 10, RandomSource(42)) == place_entrances(10, 10, RandomSource(42))

    def test_too_small(self):
        with pytest.raises(GridError):
            place_entrances(1, 5, RandomSource(0))


class TestContainers:
    def test_field_validation(self):
        ents = (C(0, 1), C(3, 1))
        with pytest.raises(GridError):
            ScalarField(4, 3, np.zeros((4, 3)), ents)
        with pytest.raises(GridError):
            ScalarField(4, 3, np.zeros((3, 4)), (C(1, 1), C(3, 1)))
        with pytest.raises(GridError):
            ScalarField(4, 3, np.zeros((3, 4)), (C(0, 1), C(0, 1)))
        f = ScalarField.uniform(4, 3, 0.25, ents)
        assert f[C(2, 2)] == 0.25 and f.values.size == 12

    def test_dead_ends(self):
        from conftest import grid_from_rows
        g = grid_from_rows([
            "#####",
            "S...#",
            "#.#.E",
            "#.###",
            "#####",
        ])
        assert g.dead_ends() == [C(1, 3)]
        assert g.wall_count() == 17
