"""Bee colony maze generator.

The meadow map starts at ``zeta`` everywhere with the two exits at three
times that.  Each bee nudges the value of the cell it stands on: up by 0.1
when its fitness is below 0.5, down by 0.05 when above.  Fitness is the
distance to the nearer exit, scaled by the grid diagonal, so bees close to
an exit are the best ones.  Cells the swarm keeps visiting end up as walls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import GeneratorConfig
from .engine import GenerationResult, IterationCapExceeded, StopCheck
from .grid import CellCoord, RandomSource, ScalarField, euclidean, place_entrances

RAISE = 0.1
LOWER = 0.05
PIVOT = 0.5


@dataclass(frozen=True)
class BeeColonyParams:
    n: int = 30
    m: int = 3
    zeta: float = 0.3
    max_iterations: int = 500
    replace: str = "reseed"

    def __post_init__(self) -> None:
        if self.n < 1 or not 1 <= self.m <= self.n:
            raise ValueError("need n >= 1 and 1 <= m <= n")
        if not 0 < self.zeta < 1:
            raise ValueError("zeta must lie in (0, 1)")
        if self.replace not in ("reseed", "clone"):
            raise ValueError(f"unknown replacement mode {self.replace!r}")

    @classmethod
    def from_config(cls, cfg: GeneratorConfig) -> "BeeColonyParams":
        return cls(n=cfg.n, m=cfg.m, zeta=cfg.zeta,
                   max_iterations=cfg.max_iterations, replace=cfg.replace)


@dataclass
class BeeColonyState:
    field: ScalarField
    bees: list[CellCoord]
    iteration: int = 0


def fitness(bee: CellCoord, field: ScalarField, zeta_or_one: float) -> float:
    """``zeta_or_one`` times the diagonal-normalised distance to the nearer exit."""
    d = min(euclidean(bee, e) for e in field.entrances)
    return zeta_or_one * d / math.hypot(field.width, field.height)


def theta(value: float, fit: float) -> float:
    """New meadow value for a cell visited by a bee of fitness ``fit``."""
    if fit < PIVOT:
        value += RAISE
    elif fit > PIVOT:
        value -= LOWER
    return min(1.0, max(0.0, value))


def map_update(field: ScalarField, bees: list[CellCoord], zeta: float) -> ScalarField:
    """Apply :func:`theta` at every bee, fitness taken with factor ``zeta``.

    Several bees on one cell apply their changes one after another.
    """
    out = field.copy()
    for bee in bees:
        out[bee] = theta(out[bee], fitness(bee, field, zeta))
    return out


def waggle_probabilities(state: BeeColonyState) -> list[float]:
    g = np.array([fitness(b, state.field, 1.0) for b in state.bees])
    total = g.sum()
    if total == 0:
        return [1.0 / len(g)] * len(g)
    return (g / total).tolist()


def _round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def bee_move(state: BeeColonyState, i: int, best_set: list[int],
             rng: RandomSource) -> CellCoord:
    """Shift bee ``i`` along one random axis by a random fraction of its
    offset from a randomly chosen best bee, staying on the grid.
    """
    if not best_set:
        raise ValueError("best_set must not be empty")
    k = best_set[rng.choice(len(best_set))]
    axis = rng.choice(2)
    step = rng.symmetric()
    me, other = state.bees[i], state.bees[k]
    delta = _round_half_away(step * (me[axis] - other[axis]))
    pos = list(me)
    limit = (state.field.width, state.field.height)[axis] - 1
    pos[axis] = min(max(pos[axis] + delta, 0), limit)
    return CellCoord(*pos)


def _random_cell(width: int, height: int, rng: RandomSource) -> CellCoord:
    return CellCoord(rng.randint(0, width - 1), rng.randint(0, height - 1))


def initial_state(width: int, height: int, params: BeeColonyParams,
                  rng: RandomSource, entrances=None) -> BeeColonyState:
    if entrances is None:
        entrances = place_entrances(width, height, rng)
    fld = ScalarField.uniform(width, height, params.zeta, entrances)
    for e in fld.entrances:
        fld[e] = min(1.0, 3.0 * params.zeta)
    bees = [_random_cell(width, height, rng) for _ in range(params.n)]
    return BeeColonyState(fld, bees)


def rank_bees(state: BeeColonyState) -> list[int]:
    """Bee indices sorted by dance weight, best (closest to an exit) first."""
    probs = waggle_probabilities(state)
    return sorted(range(len(probs)), key=lambda i: (probs[i], i))


def iterate(state: BeeColonyState, params: BeeColonyParams,
            rng: RandomSource) -> BeeColonyState:
    fld = map_update(state.field, state.bees, params.zeta)
    state = BeeColonyState(fld, list(state.bees), state.iteration)
    order = rank_bees(state)
    best, rest = order[:params.m], order[params.m:]
    w, h = fld.width, fld.height
    for i in rest:
        if params.replace == "reseed":
            state.bees[i] = _random_cell(w, h, rng)
        else:
            state.bees[i] = state.bees[best[rng.choice(len(best))]]
    for i in rest:
        state.bees[i] = bee_move(state, i, best, rng)
    state.iteration += 1
    return state


def run_abca(config: GeneratorConfig, rng: RandomSource) -> GenerationResult:
    cfg = config.resolved()
    params = BeeColonyParams.from_config(cfg)
    check = StopCheck(cfg, rng)
    state = initial_state(cfg.width, cfg.height, params, rng, cfg.entrances)
    result = None
    for t in range(1, params.max_iterations + 1):
        state = iterate(state, params, rng)
        if t < cfg.min_iterations:
            continue
        grid, report = check(state.field)
        result = GenerationResult(cfg, rng.seed, grid, state.field.copy(), t, report)
        if report.solvable:
            return result
        check.write_back(state.field, grid)
    raise IterationCapExceeded(result)
