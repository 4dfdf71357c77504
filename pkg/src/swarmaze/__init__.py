"""Maze generation with ant and bee colony swarms."""

from .config import GeneratorConfig
from .engine import GenerationResult, IterationCapExceeded
from .generate import generate
from .grid import CellCoord, CellKind, MazeGrid, RandomSource, ScalarField
from .validator import SolveReport, oracle_solvable, queen_march

__all__ = [
    "CellCoord",
    "CellKind",
    "GenerationResult",
    "GeneratorConfig",
    "IterationCapExceeded",
    "MazeGrid",
    "RandomSource",
    "ScalarField",
    "SolveReport",
    "generate",
    "oracle_solvable",
    "queen_march",
]
