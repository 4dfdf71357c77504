from __future__ import annotations

from .config import GeneratorConfig
from .engine import GenerationResult
from .grid import RandomSource
from .validator import oracle_solvable


def generate(config: GeneratorConfig, seed: int) -> GenerationResult:
    """Run one generator end to end.

    Raises ``IterationCapExceeded`` when a swarm generator runs out of
    iterations; the exception carries the last board.
    """
    cfg = config.resolved()
    rng = RandomSource(seed)
    if cfg.algo == "aaca":
        from .aaca import run_aaca
        return run_aaca(cfg, rng)
    if cfg.algo == "abca":
        from .abca import run_abca
        return run_abca(cfg, rng)
    from .prim import prim_baseline
    grid = prim_baseline(cfg.width, cfg.height, rng)
    return GenerationResult(cfg, seed, grid, None, 0, oracle_solvable(grid))
