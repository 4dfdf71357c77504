"""Generator configuration shared by the swarm generators, the CLI and the benchmark."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Any, Optional

ALGORITHMS = ("aaca", "abca", "prim")
STOP_CHECKS = ("oracle", "queen")

DEFAULT_ZETA = {"aaca": 0.05, "abca": 0.3, "prim": 0.05}


class ConfigError(ValueError):
    pass


def default_m(n: int) -> int:
    """10% of ``n`` rounded half up, at least one."""
    return max(1, (n + 5) // 10)


@dataclass(frozen=True)
class GeneratorConfig:
    """Every tunable of a generation run.

    Fields left at ``None`` are filled per algorithm by :meth:`resolved`:

    * ``zeta``: 0.05 for the ants, 0.3 for the bees;
    * ``m``: 10% of ``n``, at least one;
    * ``min_iterations`` (iterations before the stop check is first run):
      3 for the ants, ``ceil(width * height / n)`` for the bees;
    * ``max_iterations``: ``min_iterations + 500``.
    """

    algo: str = "aaca"
    width: int = 40
    height: int = 15
    n: int = 30
    m: Optional[int] = None
    alpha: float = 0.4
    beta: float = 1.0
    rho: float = 0.3
    zeta: Optional[float] = None
    kappa: float = 0.5
    r: int = 20
    max_iterations: Optional[int] = None
    min_iterations: Optional[int] = None
    stop_check: str = "oracle"
    tabu: int = 8
    tour: int = 8
    replace: str = "reseed"
    queen_max_steps: Optional[int] = None
    queen_trials: int = 16
    queen_memory: str = "previous"
    entrances: Optional[tuple[tuple[int, int], tuple[int, int]]] = None

    def resolved(self) -> "GeneratorConfig":
        """Fill algorithm-dependent defaults and validate."""
        cfg = self
        if cfg.zeta is None:
            cfg = dataclasses.replace(cfg, zeta=DEFAULT_ZETA.get(cfg.algo, 0.05))
        if cfg.m is None:
            cfg = dataclasses.replace(cfg, m=default_m(cfg.n))
        if cfg.min_iterations is None:
            warm = 3 if cfg.algo == "aaca" else 1
            if cfg.algo == "abca":
                warm = math.ceil(cfg.width * cfg.height / max(cfg.n, 1))
            cfg = dataclasses.replace(cfg, min_iterations=warm)
        if cfg.max_iterations is None:
            cfg = dataclasses.replace(cfg, max_iterations=cfg.min_iterations + 500)
        if cfg.entrances is not None:
            ents = tuple(tuple(int(v) for v in e) for e in cfg.entrances)
            cfg = dataclasses.replace(cfg, entrances=ents)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.algo not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {self.algo!r}")
        if self.width < 2 or self.height < 2:
            raise ConfigError("width and height must be at least 2")
        if self.n < 1:
            raise ConfigError("population size n must be at least 1")
        if self.m is not None and not 1 <= self.m <= self.n:
            raise ConfigError("m must satisfy 1 <= m <= n")
        if self.alpha < 0 or self.beta < 0:
            raise ConfigError("alpha and beta must be non-negative")
        if not 0 <= self.rho <= 1:
            raise ConfigError("rho must lie in [0, 1]")
        if self.zeta is not None and not 0 < self.zeta < 1:
            raise ConfigError("zeta must lie in (0, 1)")
        if not 0 < self.kappa < 1:
            raise ConfigError("kappa must lie in (0, 1)")
        if self.r < 0:
            raise ConfigError("r must be non-negative")
        for name in ("max_iterations", "min_iterations"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ConfigError(f"{name} must be positive")
        if (self.max_iterations is not None and self.min_iterations is not None
                and self.min_iterations > self.max_iterations):
            raise ConfigError("min_iterations may not exceed max_iterations")
        if self.tour < 1:
            raise ConfigError("tour length must be positive")
        if self.stop_check not in STOP_CHECKS:
            raise ConfigError(f"unknown stop check {self.stop_check!r}")
        if self.tabu < 0:
            raise ConfigError("tabu length must be non-negative")
        if self.replace not in ("reseed", "clone"):
            raise ConfigError(f"unknown replacement mode {self.replace!r}")
        if self.queen_memory not in ("previous", "visited"):
            raise ConfigError(f"unknown queen memory {self.queen_memory!r}")
        if self.queen_trials < 1 or (
            self.queen_max_steps is not None and self.queen_max_steps < 1
        ):
            raise ConfigError("queen trials and max steps must be positive")

    def to_dict(self) -> dict[str, Any]:
        d = dataclasses.asdict(self)
        if d["entrances"] is not None:
            d["entrances"] = [list(e) for e in d["entrances"]]
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "GeneratorConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        d = dict(d)
        if d.get("entrances") is not None:
            d["entrances"] = tuple(tuple(e) for e in d["entrances"])
        return cls(**d)
