"""Maze serialisation: ASCII text, plain PBM bitmaps and JSON documents."""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .config import ConfigError, GeneratorConfig
from .grid import CellKind, GridError, MazeGrid

SCHEMA_VERSION = 1
GLYPHS = {CellKind.WALL: "#", CellKind.OPEN: ".", CellKind.ENTRANCE: "S", CellKind.EXIT: "E"}
KINDS = {g: k for k, g in GLYPHS.items()}
_LUT = np.array([GLYPHS[CellKind(i)] for i in range(4)])

# plain PBM readers expect lines of at most 70 characters
_PBM_CHUNK = 35


class MazeFormatError(ValueError):
    pass


class MalformedDocumentError(MazeFormatError):
    pass


class SchemaVersionError(MazeFormatError):
    pass


class AlphabetError(MazeFormatError):
    pass


def _cells_string(grid: MazeGrid) -> str:
    return "".join(_LUT[grid.cells.ravel()])


def _parse_cells(text: str, width: int, height: int) -> MazeGrid:
    bad = set(text) - set(KINDS)
    if bad:
        raise AlphabetError(f"characters outside '#.SE': {''.join(sorted(bad))!r}")
    if len(text) != width * height:
        raise MalformedDocumentError(
            f"expected {width * height} cells, got {len(text)}"
        )
    codes = np.array([KINDS[ch] for ch in text], dtype=np.int8)
    return MazeGrid(width, height, codes.reshape(height, width))


def to_ascii(grid: MazeGrid) -> str:
    """``#`` wall, ``.`` open, ``S`` entrance, ``E`` exit; one line per row."""
    return "".join("".join(_LUT[row]) + "\n" for row in grid.cells)


def from_ascii(text: str) -> MazeGrid:
    lines = text.splitlines()
    if not lines or any(len(l) != len(lines[0]) for l in lines):
        raise MalformedDocumentError("ASCII maze must be a non-empty rectangle")
    return _parse_cells("".join(lines), len(lines[0]), len(lines))


def pixel_grid(grid: MazeGrid, inflate: bool = False) -> np.ndarray:
    """Boolean wall mask, one pixel per cell or 2x2 pixels per cell.

    Inflated rendering: a wall cell is a solid 2x2 block.  An open cell keeps
    its top-left pixel open, opens its top-right pixel only when the right
    neighbour is open, its bottom-left only when the lower neighbour is open,
    and its bottom-right pixel is always wall.  Passages therefore survive
    and no new ones appear.
    """
    walls = grid.cells == CellKind.WALL
    if not inflate:
        return walls.copy()
    h, w = walls.shape
    px = np.ones((2 * h, 2 * w), dtype=bool)
    open_ = ~walls
    right = np.zeros_like(open_)
    right[:, :-1] = open_[:, :-1] & open_[:, 1:]
    down = np.zeros_like(open_)
    down[:-1, :] = open_[:-1, :] & open_[1:, :]
    px[0::2, 0::2] = walls
    px[0::2, 1::2] = ~right
    px[1::2, 0::2] = ~down
    return px


def to_pbm(grid: MazeGrid, inflate: bool = False) -> bytes:
    """Plain (P1) portable bitmap; 1 is a wall pixel."""
    px = pixel_grid(grid, inflate)
    h, w = px.shape
    out = [f"P1\n{w} {h}\n"]
    for row in px.astype(np.uint8):
        bits = [str(b) for b in row]
        for i in range(0, w, _PBM_CHUNK):
            out.append(" ".join(bits[i:i + _PBM_CHUNK]) + "\n")
    return "".join(out).encode("ascii")


def from_pbm(data: bytes) -> np.ndarray:
    """Read a plain PBM back into a boolean wall mask."""
    tokens = []
    for line in data.decode("ascii").splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if not tokens or tokens[0] != "P1":
        raise MalformedDocumentError("not a plain PBM (missing P1 magic)")
    try:
        w, h = int(tokens[1]), int(tokens[2])
    except (IndexError, ValueError) as e:
        raise MalformedDocumentError("bad PBM header") from e
    # plain PBM allows pixels to run together without spaces
    bits = "".join(tokens[3:])
    if len(bits) != w * h or set(bits) - {"0", "1"}:
        raise MalformedDocumentError("PBM payload does not match header")
    return (np.frombuffer(bits.encode(), dtype=np.uint8) == ord("1")).reshape(h, w)


def to_json(grid: MazeGrid, config: GeneratorConfig, seed: int) -> bytes:
    params = config.to_dict()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "generator": params.pop("algo"),
        "width": grid.width,
        "height": grid.height,
        "cells": _cells_string(grid),
        "params": {k: v for k, v in params.items() if k not in ("width", "height")},
        "seed": seed,
    }
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")


_REQUIRED = {
    "generator": str,
    "width": int,
    "height": int,
    "cells": str,
    "params": dict,
    "seed": int,
}


def from_json(data: bytes) -> tuple[MazeGrid, GeneratorConfig, int]:
    try:
        doc: Any = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise MalformedDocumentError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict) or "schema_version" not in doc:
        raise MalformedDocumentError("missing schema_version")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaVersionError(
            f"schema_version {doc['schema_version']!r}, expected {SCHEMA_VERSION}"
        )
    for key, typ in _REQUIRED.items():
        if key not in doc:
            raise MalformedDocumentError(f"missing field {key!r}")
        if not isinstance(doc[key], typ) or isinstance(doc[key], bool):
            raise MalformedDocumentError(f"field {key!r} must be {typ.__name__}")
    width, height = doc["width"], doc["height"]
    if width < 2 or height < 2:
        raise MalformedDocumentError("maze must be at least 2x2")
    grid = _parse_cells(doc["cells"], width, height)
    try:
        grid.entrance, grid.exit
    except GridError as e:
        raise MalformedDocumentError(str(e)) from e
    try:
        config = GeneratorConfig.from_dict(
            {**doc["params"], "algo": doc["generator"], "width": width, "height": height}
        )
    except (ConfigError, TypeError) as e:
        raise MalformedDocumentError(f"bad params: {e}") from e
    return grid, config, doc["seed"]
