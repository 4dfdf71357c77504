"""Ant colony maze generator.

Ants walk the lattice one king-move at a time, ``tour`` moves per
iteration.  At the start of each iteration every cell evaporates by ``rho``
and every cell an ant walked during the previous tour receives that ant's
deposit, the sum of inverse distances to the rest of the colony.  After
thresholding, high-pheromone cells become walls, so the walls are the
colony's recent trails.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field

import numpy as np

from .config import GeneratorConfig
from .engine import GenerationResult, IterationCapExceeded, StopCheck
from .grid import (CellCoord, RandomSource, ScalarField, euclidean, neighbors8,
                   place_entrances)


@dataclass(frozen=True)
class AntColonyParams:
    n: int = 30
    alpha: float = 0.4
    beta: float = 1.0
    rho: float = 0.3
    zeta: float = 0.05
    max_iterations: int = 500
    tabu: int = 8
    tour: int = 8

    def __post_init__(self) -> None:
        if self.tour < 1:
            raise ValueError("tour must be at least 1")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.rho <= 1:
            raise ValueError("rho must lie in [0, 1]")
        if not 0 < self.zeta < 1:
            raise ValueError("zeta must lie in (0, 1)")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be non-negative")

    @classmethod
    def from_config(cls, cfg: GeneratorConfig) -> "AntColonyParams":
        return cls(n=cfg.n, alpha=cfg.alpha, beta=cfg.beta, rho=cfg.rho,
                   zeta=cfg.zeta, max_iterations=cfg.max_iterations, tabu=cfg.tabu,
                   tour=cfg.tour)


@dataclass
class AntColonyState:
    field: ScalarField
    ants: list[CellCoord]
    iteration: int = 0
    # recently visited cells per ant, most recent last
    tabu: list[deque] = dc_field(default_factory=list)
    # cells walked since the last pheromone update, per ant
    trails: list[list[CellCoord]] = dc_field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.tabu:
            self.tabu = [deque() for _ in self.ants]
        if not self.trails:
            self.trails = [[a] for a in self.ants]


def gamma_all(ants: list[CellCoord]) -> np.ndarray:
    """Deposit of every ant at once; co-located pairs contribute nothing."""
    pos = np.asarray(ants, dtype=float).reshape(-1, 2)
    diff = pos[:, None, :] - pos[None, :, :]
    dist = np.sqrt((diff ** 2).sum(axis=-1))
    with np.errstate(divide="ignore"):
        inv = np.where(dist > 0, 1.0 / dist, 0.0)
    return inv.sum(axis=1)


def gamma_deposit(state: AntColonyState, i: int) -> float:
    if len(state.ants) < 2:
        return 0.0
    return float(gamma_all(state.ants)[i])


def pheromone_update(state: AntColonyState, params: AntColonyParams) -> AntColonyState:
    """Evaporate everywhere, deposit along each ant's trail, clamp to [zeta, 1].

    A trail that holds only the ant's current cell reduces this to a deposit
    on occupied cells.  Ants sharing a cell add their deposits together.
    """
    values = (1.0 - params.rho) * state.field.values
    deposits = gamma_all(state.ants) if len(state.ants) > 1 else np.zeros(len(state.ants))
    for trail, g in zip(state.trails, deposits):
        for cell in dict.fromkeys(trail):
            values[cell.row, cell.col] += g
    np.clip(values, params.zeta, 1.0, out=values)
    fld = ScalarField(state.field.width, state.field.height, values, state.field.entrances)
    return AntColonyState(fld, list(state.ants), state.iteration,
                          [deque(d) for d in state.tabu], [[a] for a in state.ants])


def _candidates(state: AntColonyState, i: int) -> list[CellCoord]:
    fld = state.field
    around = neighbors8(state.ants[i], fld.width, fld.height)
    fresh = [c for c in around if c not in state.tabu[i]]
    return fresh or around


def transition_probabilities(state: AntColonyState, params: AntColonyParams,
                             i: int) -> list[tuple[CellCoord, float]]:
    """Pheromone^alpha times (1/distance)^beta, normalised over the candidates.

    Candidates are the 8-neighbours not on the ant's tabu list, or all
    8-neighbours if every one of them is tabu.
    """
    here = state.ants[i]
    cands = _candidates(state, i)
    weights = [
        state.field[c] ** params.alpha * (1.0 / euclidean(here, c)) ** params.beta
        for c in cands
    ]
    total = sum(weights)
    return [(c, w / total) for c, w in zip(cands, weights)]


def ant_step(state: AntColonyState, params: AntColonyParams, i: int,
             rng: RandomSource) -> CellCoord:
    """Step towards the most probable candidate, breaking exact ties with ``rng``."""
    probs = transition_probabilities(state, params, i)
    best = max(p for _, p in probs)
    tied = [c for c, p in probs if p == best]
    target = tied[rng.choice(len(tied))] if len(tied) > 1 else tied[0]
    here = state.ants[i]
    return CellCoord(here.col + int(np.sign(target.col - here.col)),
                     here.row + int(np.sign(target.row - here.row)))


def initial_state(width: int, height: int, params: AntColonyParams,
                  rng: RandomSource, entrances=None) -> AntColonyState:
    """Uniform field with brighter entrances and ants scattered over the interior."""
    if entrances is None:
        entrances = place_entrances(width, height, rng)
    base = max(params.zeta, min(params.alpha, 1.0))
    fld = ScalarField.uniform(width, height, base, entrances)
    for e in fld.entrances:
        fld[e] = min(1.0, 3.0 * base)
    lo_c, hi_c = (1, width - 2) if width >= 3 else (0, width - 1)
    lo_r, hi_r = (1, height - 2) if height >= 3 else (0, height - 1)
    ants = [CellCoord(rng.randint(lo_c, hi_c), rng.randint(lo_r, hi_r))
            for _ in range(params.n)]
    return AntColonyState(fld, ants)


def iterate(state: AntColonyState, params: AntColonyParams,
            rng: RandomSource) -> AntColonyState:
    """One pass: pheromone update, then every ant takes one step."""
    state = pheromone_update(state, params)
    for _ in range(params.tour):
        for i in range(len(state.ants)):
            nxt = ant_step(state, params, i, rng)
            memory = state.tabu[i]
            memory.append(state.ants[i])
            while len(memory) > params.tabu:
                memory.popleft()
            state.ants[i] = nxt
            state.trails[i].append(nxt)
    state.iteration += 1
    return state


def run_aaca(config: GeneratorConfig, rng: RandomSource) -> GenerationResult:
    cfg = config.resolved()
    params = AntColonyParams.from_config(cfg)
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
