"""Timing sweep: generation wall-clock against field count for every generator."""

from __future__ import annotations

import csv
import dataclasses
import io
import logging
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .config import GeneratorConfig, default_m
from .engine import IterationCapExceeded
from .generate import generate
from .prim import prim_baseline  # noqa: F401  (re-exported baseline)

log = logging.getLogger(__name__)

GENERATORS = ("aaca", "abca", "prim")
CSV_HEADER = ("generator", "width", "height", "fields", "seed",
              "wall_clock_ms", "iterations", "solvable")
LONG_HEADER = ("generator", "width", "height", "fields", "seed", "metric", "value")
DEFAULT_SIZES = ((30, 20), (50, 30), (60, 50), (100, 60), (100, 100))

# the two published parameter sets, keyed by field count
_SMALL = (600, 30, 20)
_LARGE = (10000, 200, 120)


@dataclass(frozen=True)
class BenchRecord:
    generator: str
    width: int
    height: int
    fields: int
    seed: int
    wall_clock_ms: float
    iterations: int
    solvable: bool

    def __post_init__(self) -> None:
        if self.fields != self.width * self.height:
            raise ValueError("fields must equal width * height")
        if self.wall_clock_ms < 0:
            raise ValueError("wall_clock_ms must be non-negative")


def scaled_params(width: int, height: int) -> dict:
    """Population ``n`` and alley count ``r`` interpolated linearly in field
    count between the 40x15 (n=30, r=20) and 100x100 (n=200, r=120) setups,
    clamped outside that range; ``m`` is 10% of ``n``.
    """
    f = width * height
    t = min(max((f - _SMALL[0]) / (_LARGE[0] - _SMALL[0]), 0.0), 1.0)
    n = int(round(_SMALL[1] + t * (_LARGE[1] - _SMALL[1])))
    r = int(round(_SMALL[2] + t * (_LARGE[2] - _SMALL[2])))
    return {"n": n, "r": r, "m": default_m(n)}


def derive_seed(base: int, size_index: int, repeat: int) -> int:
    ss = np.random.SeedSequence(entropy=base, spawn_key=(size_index, repeat))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _measure(cfg: GeneratorConfig, seed: int) -> tuple[float, int, bool]:
    t0 = time.perf_counter()
    try:
        res = generate(cfg, seed)
        iterations, solvable = res.iterations, res.solvable
    except IterationCapExceeded as e:
        iterations, solvable = e.result.iterations, False
    return (time.perf_counter() - t0) * 1000.0, iterations, solvable


def run_sweep(sizes: Sequence[tuple[int, int]], repeats: int,
              config: Optional[GeneratorConfig] = None, seed: int = 0,
              generators: Sequence[str] = GENERATORS,
              scale_params: bool = True) -> list[BenchRecord]:
    """Time every generator on every size ``repeats`` times.

    All generators share the same derived seed for a given size and repeat.
    One untimed warm-up run per size and generator is made first.  With
    ``scale_params`` the population and alley count follow
    :func:`scaled_params`; otherwise ``config`` is used as given.
    """
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    base = config or GeneratorConfig()
    records = []
    for si, (w, h) in enumerate(sizes):
        overrides = scaled_params(w, h) if scale_params else {}
        for algo in generators:
            cfg = dataclasses.replace(base, algo=algo, width=w, height=h, **overrides)
            _measure(cfg, derive_seed(seed, si, repeats))
            for rep in range(repeats):
                s = derive_seed(seed, si, rep)
                ms, iters, ok = _measure(cfg, s)
                log.info("%s %dx%d seed=%d %.1f ms, %d iterations, solvable=%s",
                         algo, w, h, s, ms, iters, ok)
                records.append(BenchRecord(algo, w, h, w * h, s, ms, iters, ok))
    return records


def to_csv(records: Iterable[BenchRecord], long: bool = False) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if long:
        writer.writerow(LONG_HEADER)
        for rec in records:
            key = (rec.generator, rec.width, rec.height, rec.fields, rec.seed)
            writer.writerow(key + ("wall_clock_ms", f"{rec.wall_clock_ms:.3f}"))
            writer.writerow(key + ("iterations", rec.iterations))
            writer.writerow(key + ("solvable", str(rec.solvable).lower()))
    else:
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow((rec.generator, rec.width, rec.height, rec.fields,
                             rec.seed, f"{rec.wall_clock_ms:.3f}", rec.iterations,
                             str(rec.solvable).lower()))
    return buf.getvalue().encode("ascii")


def from_csv(data: bytes) -> list[BenchRecord]:
    rows = list(csv.DictReader(io.StringIO(data.decode("ascii"))))
    return [
        BenchRecord(
            generator=row["generator"],
            width=int(row["width"]),
            height=int(row["height"]),
            fields=int(row["fields"]),
            seed=int(row["seed"]),
            wall_clock_ms=float(row["wall_clock_ms"]),
            iterations=int(row["iterations"]),
            solvable=row["solvable"] == "true",
        )
        for row in rows
    ]


def summarize(records: Iterable[BenchRecord]) -> list[dict]:
    """Median time and iterations per generator and field count."""
    groups: dict[tuple[str, int], list[BenchRecord]] = {}
    for rec in records:
        groups.setdefault((rec.generator, rec.fields), []).append(rec)
    out = []
    for (gen, fields), recs in sorted(groups.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        out.append({
            "generator": gen,
            "fields": fields,
            "runs": len(recs),
            "median_ms": statistics.median(r.wall_clock_ms for r in recs),
            "median_iterations": statistics.median(r.iterations for r in recs),
            "solvable": sum(r.solvable for r in recs),
        })
    return out
