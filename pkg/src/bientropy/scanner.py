"""Windowed TBiEn over raw file bytes."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .entropy import WeightingScheme, pack_bytes, score_packed
from .stats import SampleStats, summarize

_BATCH = 1024


@dataclass
class ScanReport:
    window_bits: int
    windows: List[Tuple[int, float]]  # (offset in bytes, tbien)
    stats: SampleStats
    truncated_tail_bits: int

    def to_dict(self) -> dict:
        return {
            "window_bits": self.window_bits,
            "windows": len(self.windows),
            "stats": self.stats.to_dict(),
            "truncated_tail_bits": self.truncated_tail_bits,
        }


def scan_bytes(data: bytes, window_bits: int = 1024, max_windows: Optional[int] = None,
               threads: int = 1) -> ScanReport:
    """TBiEn of consecutive non-overlapping windows, bits read MSB first within each byte.

    The trailing partial window is skipped and its size reported.
    """
    if window_bits < 16 or window_bits % 8:
        raise ValueError("window_bits must be a multiple of 8 and at least 16")
    wbytes = window_bits // 8
    available = len(data) // wbytes
    if available == 0:
        raise ValueError(f"input of {8 * len(data)} bits is smaller than one {window_bits}-bit window")
    count = available if max_windows is None else min(max_windows, available)
    if count < 1:
        raise ValueError("max_windows must be positive")
    rows = np.frombuffer(data, dtype=np.uint8, count=count * wbytes).reshape(count, wbytes)
    words = pack_bytes(rows)

    def run(lo):
        return score_packed(words[lo : lo + _BATCH], window_bits, WeightingScheme.LOGARITHMIC)

    starts = range(0, count, _BATCH)
    if threads > 1 and count > _BATCH:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, starts))
    else:
        parts = [run(lo) for lo in starts]
    scores = np.concatenate(parts)
    windows = [(i * wbytes, float(s)) for i, s in enumerate(scores)]
    tail = 8 * (len(data) - available * wbytes)
    return ScanReport(window_bits, windows, summarize(scores), tail)


def scan_file(path, window_bits: int = 1024, max_windows: Optional[int] = None,
              threads: int = 1) -> ScanReport:
    with open(path, "rb") as fh:
        data = fh.read()
    return scan_bytes(data, window_bits, max_windows, threads)
