from __future__ import annotations

import numpy as np
import pytest

from swarmaze.grid import CellCoord, CellKind, MazeGrid

_CRITERIA: list[tuple[int, str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        _CRITERIA.append((marker.args[0], marker.args[1], status, item.name))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    by_number: dict[int, list] = {}
    for num, title, status, name in _CRITERIA:
        by_number.setdefault(num, []).append((title, status, name))
    for num in sorted(by_number):
        rows = by_number[num]
        status = "PASS" if all(s == "PASS" for _, s, _ in rows) else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}  {rows[0][0]}")


def grid_from_rows(rows: list[str]) -> MazeGrid:
    kinds = {"#": CellKind.WALL, ".": CellKind.OPEN, "S": CellKind.ENTRANCE, "E": CellKind.EXIT}
    cells = np.array([[kinds[ch] for ch in row] for row in rows], dtype=np.int8)
    return MazeGrid(len(rows[0]), len(rows), cells)


def random_grid(rng: np.random.Generator, w: int, h: int, density: float) -> MazeGrid:
    """Random interior walls, sealed border, entrance left and exit right."""
    cells = np.where(rng.random((h, w)) < density, CellKind.WALL, CellKind.OPEN).astype(np.int8)
    cells[0, :] = cells[-1, :] = CellKind.WALL
    cells[:, 0] = cells[:, -1] = CellKind.WALL
    lo, hi = (1, h - 1) if h >= 3 else (0, h)
    cells[rng.integers(lo, hi), 0] = CellKind.ENTRANCE
    cells[rng.integers(lo, hi), w - 1] = CellKind.EXIT
    return MazeGrid(w, h, cells)


@pytest.fixture
def corridor() -> MazeGrid:
    return grid_from_rows([
        "#########",
        "S.......E",
        "#########",
    ])


@pytest.fixture
def solid() -> MazeGrid:
    return grid_from_rows([
        "#####",
        "S###E",
        "#####",
    ])


@pytest.fixture
def cell():
    return CellCoord
