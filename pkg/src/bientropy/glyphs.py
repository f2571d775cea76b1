"""7x5 dot-matrix glyphs: file format, raster scans and per-set statistics.

A glyph file is a sequence of blocks separated by blank lines::

    name: A
    .###.
    #...#
    #...#
    #####
    #...#
    #...#
    #...#

Cells are '#' or '1' for set dots, '.' or '0' for clear ones.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np

from .bitstring import BitString
from .entropy import bien, tbien
from .stats import SampleStats, summarize

ROWS, COLS = 7, 5
HORIZONTAL = "horizontal"
VERTICAL = "vertical"
_CELL = {".": 0, "0": 0, "#": 1, "1": 1}


@dataclass(frozen=True)
class GlyphGrid:
    name: str
    cells: np.ndarray

    def __post_init__(self):
        cells = np.asarray(self.cells, dtype=np.uint8)
        if cells.shape != (ROWS, COLS):
            raise ValueError(f"glyph {self.name!r} must be {ROWS}x{COLS}, got {cells.shape}")
        if cells.max(initial=0) > 1:
            raise ValueError(f"glyph {self.name!r} has non-binary cells")
        object.__setattr__(self, "cells", cells)


def parse_glyph_file(text: str) -> List[GlyphGrid]:
    blocks: List[List[str]] = []
    current: List[str] = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)

    glyphs = []
    seen = set()
    for block in blocks:
        head, rows = block[0], block[1:]
        if not head.lower().startswith("name:"):
            raise ValueError(f"glyph block must start with 'name:', got {head!r}")
        name = head[5:].strip()
        if name in seen:
            raise ValueError(f"duplicate glyph name {name!r}")
        seen.add(name)
        if len(rows) != ROWS:
            raise ValueError(f"glyph {name!r}: expected {ROWS} rows, got {len(rows)}")
        cells = []
        for row in rows:
            if len(row) != COLS:
                raise ValueError(f"glyph {name!r}: expected {COLS} columns in {row!r}")
            try:
                cells.append([_CELL[c] for c in row])
            except KeyError as exc:
                raise ValueError(f"glyph {name!r}: invalid cell {exc.args[0]!r}") from None
        glyphs.append(GlyphGrid(name, np.array(cells)))
    return glyphs


def read_glyph_file(path) -> List[GlyphGrid]:
    with open(path, encoding="utf-8") as fh:
        return parse_glyph_file(fh.read())


def render_glyph_file(glyphs: Sequence[GlyphGrid]) -> str:
    out = []
    for g in glyphs:
        lines = [f"name: {g.name}"]
        lines += ["".join("#" if c else "." for c in row) for row in g.cells]
        out.append("\n".join(lines))
    return "\n\n".join(out) + "\n"


def raster(g: GlyphGrid, orientation: str = HORIZONTAL) -> BitString:
    """Row-major (horizontal) or column-major (vertical) scan into 35 bits."""
    if orientation == HORIZONTAL:
        flat = g.cells.ravel(order="C")
    elif orientation == VERTICAL:
        flat = g.cells.ravel(order="F")
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return BitString.from_numpy(flat)


_METRIC = {"bien": bien, "tbien": tbien}


@dataclass
class CharsetReport:
    orientation: str
    metric: str
    names: List[str]
    scores: List[float]
    stats: SampleStats


def charset_report(glyphs: Sequence[GlyphGrid], orientation: str = HORIZONTAL,
                   metric: str = "bien") -> CharsetReport:
    if not glyphs:
        raise ValueError("empty glyph set")
    fn = _METRIC[metric]
    scores = [fn(raster(g, orientation)) for g in glyphs]
    return CharsetReport(orientation, metric, [g.name for g in glyphs], scores, summarize(scores))


def charset_table(glyphs: Sequence[GlyphGrid]) -> Dict[str, CharsetReport]:
    """All four metric/orientation combinations, keyed ``bien_h``, ``bien_v``, ``tbien_h``, ``tbien_v``."""
    return {
        f"{m}_{o[0]}": charset_report(glyphs, o, m)
        for m in ("bien", "tbien")
        for o in (HORIZONTAL, VERTICAL)
    }
