"""Pieces shared by the swarm generation loops."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .config import GeneratorConfig
from .grid import MazeGrid, RandomSource, ScalarField
from .mazeify import MazeifyParams, finalize
from .validator import QueenParams, SolveReport, oracle_solvable, queen_march


@dataclass
class GenerationResult:
    config: GeneratorConfig
    seed: int
    grid: MazeGrid
    field: Optional[ScalarField]
    iterations: int
    report: SolveReport

    @property
    def solvable(self) -> bool:
        return self.report.solvable


class IterationCapExceeded(RuntimeError):
    """The iteration cap was hit before the maze became passable.

    The last field and board are kept on ``result`` for inspection.
    """

    def __init__(self, result: GenerationResult):
        super().__init__(
            f"{result.config.algo}: no passage after {result.iterations} iterations"
        )
        self.result = result


class StopCheck:
    """Builds the board from a field and asks the queen or the oracle about it.

    Carving and queen walks draw from their own streams so the swarm's
    random sequence does not depend on how often the check runs.
    """

    def __init__(self, cfg: GeneratorConfig, rng: RandomSource):
        self.cfg = cfg
        self.params = MazeifyParams(kappa=cfg.kappa, r=cfg.r)
        self._carve_rng = rng.spawn()
        self._queen_rng = rng.spawn()

    def __call__(self, field: ScalarField) -> tuple[MazeGrid, SolveReport]:
        grid = finalize(field, self.params, self._carve_rng)
        if self.cfg.stop_check == "queen":
            qp = QueenParams(
                max_steps=self.cfg.queen_max_steps or 4 * grid.width * grid.height,
                trials=self.cfg.queen_trials,
                memory=self.cfg.queen_memory,
            )
            return grid, queen_march(grid, qp, self._queen_rng)
        return grid, oracle_solvable(grid)

    def write_back(self, field: ScalarField, grid: MazeGrid) -> None:
        """Copy the board's openings (alleys, re-opened pockets) into ``field``.

        Used after a failed check so the carved alleys persist into the
        swarm's next iteration.
        """
        opened = grid.passable() & (field.values >= self.cfg.kappa)
        field.values[opened] = self.cfg.zeta
