"""Command-line front end: ``swarmaze generate|validate|render|bench``."""

from __future__ import annotations

import argparse
import logging
import os
import secrets
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench, render
from .config import ALGORITHMS, STOP_CHECKS, ConfigError, GeneratorConfig
from .engine import IterationCapExceeded
from .generate import generate
from .grid import RandomSource
from .validator import QueenParams, oracle_solvable, queen_march

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_UNSOLVABLE = 0, 1, 2, 3
SEED_ENV = "SWARMAZE_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _HelpFormatter(argparse.ArgumentDefaultsHelpFormatter):
    def _get_help_string(self, action: argparse.Action) -> str:
        text = action.help or ""
        if "default" in text or action.default in (None, False, argparse.SUPPRESS):
            return text
        return super()._get_help_string(action)


def _formatter(prog: str) -> argparse.HelpFormatter:
    # fixed width keeps --help output independent of the terminal
    return _HelpFormatter(prog, width=80)


def _coord(text: str) -> tuple[int, int]:
    try:
        col, row = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected COL,ROW, got {text!r}")
    return col, row


def _sizes(text: str) -> list[tuple[int, int]]:
    out = []
    for part in text.split(","):
        try:
            w, h = (int(v) for v in part.lower().split("x"))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected WxH, got {part!r}")
        out.append((w, h))
    return out


def _add_seed(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None,
                   help=f"RNG seed (default: ${SEED_ENV}, else a random seed "
                        "that is printed to stderr)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="swarmaze", formatter_class=_formatter,
                     description="Swarm-intelligence maze generation.")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log progress to stderr (default: off)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    g = sub.add_parser("generate", formatter_class=_formatter,
                       help="generate a maze and write it to a file",
                       description="Generate one maze.")
    g.add_argument("--algo", choices=ALGORITHMS, default="aaca", help="generator")
    g.add_argument("--width", type=int, default=40, help="maze width in cells")
    g.add_argument("--height", type=int, default=15, help="maze height in cells")
    _add_seed(g)
    g.add_argument("--n", type=int, default=30, help="population size")
    g.add_argument("--m", type=int, default=None,
                   help="bees kept per iteration (default: 10%% of n)")
    g.add_argument("--alpha", type=float, default=0.4, help="pheromone exponent")
    g.add_argument("--beta", type=float, default=1.0, help="inverse-distance exponent")
    g.add_argument("--rho", type=float, default=0.3, help="evaporation rate")
    g.add_argument("--zeta", type=float, default=None,
                   help="pheromone floor (ants, default 0.05) or initial meadow "
                        "value (bees, default 0.3)")
    g.add_argument("--kappa", type=float, default=0.5, help="wall threshold")
    g.add_argument("--r", type=int, default=20, help="random alleys to carve")
    g.add_argument("--max-iters", type=int, default=None,
                   help="iteration cap (default: warm-up + 500)")
    g.add_argument("--min-iters", type=int, default=None,
                   help="iterations before the first stop check (default: 3 "
                        "for ants, ceil(width*height/n) for bees)")
    g.add_argument("--tour", type=int, default=8, help="ant moves per iteration")
    g.add_argument("--tabu", type=int, default=8, help="ant tabu-list length")
    g.add_argument("--replace", choices=("reseed", "clone"), default="reseed",
                   help="how non-best bees are replaced")
    g.add_argument("--stop-check", choices=STOP_CHECKS, default="oracle",
                   help="passage test run after each iteration")
    g.add_argument("--queen-trials", type=int, default=16,
                   help="queen walks per entrance")
    g.add_argument("--queen-steps", type=int, default=None,
                   help="queen walk length cap (default: 4*width*height)")
    g.add_argument("--queen-memory", choices=("previous", "visited"),
                   default="previous", help="cells the queen may not step back onto")
    g.add_argument("--entrance", type=_coord, default=None, metavar="COL,ROW",
                   help="entrance cell, needs --exit (default: random row on "
                        "the left edge)")
    g.add_argument("--exit", type=_coord, default=None, metavar="COL,ROW",
                   help="exit cell, needs --entrance (default: random row on "
                        "the right edge)")
    g.add_argument("--format", choices=("ascii", "pbm", "json"), default="ascii",
                   help="output format")
    g.add_argument("--inflate", action="store_true",
                   help="PBM only: 2x2 pixels per cell with wall inflation "
                        "(default: off)")
    g.add_argument("--out", default="-", help="output file, - for stdout")

    v = sub.add_parser("validate", formatter_class=_formatter,
                       help="check a JSON maze with the queen and the oracle",
                       description="Run the queen's march and the exact oracle on a "
                                   "JSON maze. Exit 0 iff the oracle finds a passage.")
    v.add_argument("file", help="maze document written by 'generate --format json'")
    v.add_argument("--seed", type=int, default=None,
                   help="queen RNG seed (default: the seed stored in the file)")
    v.add_argument("--queen-trials", type=int, default=16,
                   help="queen walks per entrance")
    v.add_argument("--queen-steps", type=int, default=None,
                   help="queen walk length cap (default: 4*width*height)")
    v.add_argument("--queen-memory", choices=("previous", "visited"),
                   default="previous", help="cells the queen may not step back onto")

    r = sub.add_parser("render", formatter_class=_formatter,
                       help="convert a JSON maze to ASCII or PBM",
                       description="Re-render a JSON maze document.")
    r.add_argument("file", help="maze document written by 'generate --format json'")
    r.add_argument("--format", choices=("ascii", "pbm"), default="ascii",
                   help="output format")
    r.add_argument("--inflate", action="store_true",
                   help="PBM only: 2x2 pixels per cell with wall inflation "
                        "(default: off)")
    r.add_argument("--out", default="-", help="output file, - for stdout")

    b = sub.add_parser("bench", formatter_class=_formatter,
                       help="time the generators over a range of maze sizes",
                       description="Timing sweep over maze sizes; writes CSV.")
    b.add_argument("--sizes", type=_sizes,
                   default=list(bench.DEFAULT_SIZES),
                   help="comma-separated WxH list (default: "
                        + ",".join(f"{w}x{h}" for w, h in bench.DEFAULT_SIZES) + ")")
    b.add_argument("--repeats", type=int, default=3, help="timed runs per size")
    _add_seed(b)
    b.add_argument("--algos", default=",".join(bench.GENERATORS),
                   help="comma-separated generators to time")
    b.add_argument("--params", choices=("scaled", "fixed"), default="scaled",
                   help="'scaled' scales n, r and m with the field count; 'fixed' "
                        "uses --n/--r/--m at every size")
    b.add_argument("--n", type=int, default=30, help="population size (fixed params)")
    b.add_argument("--m", type=int, default=None, help="bees kept, fixed params (default: 10%% of n)")
    b.add_argument("--r", type=int, default=20, help="random alleys (fixed params)")
    b.add_argument("--format", choices=("wide", "long"), default="wide",
                   help="CSV layout; 'long' has one measurement per row")
    b.add_argument("--plot", default=None, metavar="PNG",
                   help="also render the time-vs-fields figure to this file "
                        "(default: no figure)")
    b.add_argument("--out", default="-", help="CSV output file, - for stdout")
    return parser


def resolve_seed(seed: Optional[int]) -> int:
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"${SEED_ENV} is not an integer: {env!r}")
    seed = secrets.randbits(63)
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _write(out: str, data: bytes) -> None:
    if out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _encode(grid, cfg, seed, fmt: str, inflate: bool) -> bytes:
    if fmt == "json":
        return render.to_json(grid, cfg, seed)
    if fmt == "pbm":
        return render.to_pbm(grid, inflate)
    return render.to_ascii(grid).encode("ascii")


def config_from_args(args: argparse.Namespace) -> GeneratorConfig:
    if (args.entrance is None) != (args.exit is None):
        raise UsageError("--entrance and --exit must be given together")
    entrances = (args.entrance, args.exit) if args.entrance else None
    cfg = GeneratorConfig(
        algo=args.algo, width=args.width, height=args.height, n=args.n, m=args.m,
        alpha=args.alpha, beta=args.beta, rho=args.rho, zeta=args.zeta,
        kappa=args.kappa, r=args.r, max_iterations=args.max_iters,
        min_iterations=args.min_iters, stop_check=args.stop_check, tabu=args.tabu,
        tour=args.tour, replace=args.replace, queen_max_steps=args.queen_steps,
        queen_trials=args.queen_trials, queen_memory=args.queen_memory,
        entrances=entrances,
    )
    cfg.validate()
    return cfg


def cmd_generate(args: argparse.Namespace) -> int:
    if args.inflate and args.format != "pbm":
        raise UsageError("--inflate only applies to --format pbm")
    cfg = config_from_args(args)
    seed = resolve_seed(args.seed)
    code = EXIT_OK
    try:
        result = generate(cfg, seed)
    except IterationCapExceeded as e:
        result = e.result
        print(f"warning: {e}; writing the last board anyway", file=sys.stderr)
        code = EXIT_CAP
    except ValueError as e:
        raise UsageError(str(e))
    _write(args.out, _encode(result.grid, cfg, seed, args.format, args.inflate))
    logging.getLogger(__name__).info(
        "%s %dx%d seed=%d: %d iterations", cfg.algo, cfg.width, cfg.height,
        seed, result.iterations)
    return code


def _load(path: str):
    try:
        return render.from_json(Path(path).read_bytes())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")
    except render.MazeFormatError as e:
        raise UsageError(f"{path}: {type(e).__name__}: {e}")


def validate_grid(grid, seed: int, trials: int = 16, max_steps: Optional[int] = None,
                  memory: str = "previous"):
    params = QueenParams(max_steps=max_steps or 4 * grid.width * grid.height,
                         trials=trials, memory=memory)
    return queen_march(grid, params, RandomSource(seed)), oracle_solvable(grid)


def cmd_validate(args: argparse.Namespace) -> int:
    grid, _, file_seed = _load(args.file)
    seed = args.seed if args.seed is not None else file_seed
    queen, oracle = validate_grid(grid, seed, args.queen_trials, args.queen_steps,
                                  args.queen_memory)
    if queen.solvable:
        print(f"queen: passage found, walk of {len(queen.path) - 1} steps")
    else:
        print(f"queen: no passage found in {queen.steps_taken} steps")
    if oracle.solvable:
        print(f"oracle: passage exists, shortest path {oracle.steps_taken} steps")
    else:
        print("oracle: no passage")
    return EXIT_OK if oracle.solvable else EXIT_UNSOLVABLE


def cmd_render(args: argparse.Namespace) -> int:
    if args.inflate and args.format != "pbm":
        raise UsageError("--inflate only applies to --format pbm")
    grid, cfg, seed = _load(args.file)
    _write(args.out, _encode(grid, cfg, seed, args.format, args.inflate))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = set(algos) - set(bench.GENERATORS)
    if unknown or not algos:
        raise UsageError(f"unknown generators: {sorted(unknown)}")
    if args.repeats < 1:
        raise UsageError("--repeats must be at least 1")
    seed = resolve_seed(args.seed)
    base = GeneratorConfig(n=args.n, m=args.m, r=args.r)
    try:
        records = bench.run_sweep(args.sizes, args.repeats, base, seed, algos,
                                  scale_params=args.params == "scaled")
    except ValueError as e:
        raise UsageError(str(e))
    _write(args.out, bench.to_csv(records, long=args.format == "long"))
    summary_stream = sys.stderr if args.out == "-" else sys.stdout
    print("generator  fields  runs  median_ms  median_iters  solvable",
          file=summary_stream)
    for row in bench.summarize(records):
        print(f"{row['generator']:<9} {row['fields']:>7} {row['runs']:>5} "
              f"{row['median_ms']:>10.1f} {row['median_iterations']:>13} "
              f"{row['solvable']:>9}", file=summary_stream)
    if args.plot:
        from .report import timing_figure
        timing_figure(records, args.plot)
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "validate": cmd_validate,
    "render": cmd_render,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ConfigError) as e:
        print(f"swarmaze {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
