"""Exhaustive evaluation of every n-bit string."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from .bitstring import APERIODIC, CLASSES, NPERIODIC, PERIODIC
from .entropy import BIEN_MAX_BITS, WeightingScheme, score_packed
from .stats import SampleStats, summarize

MAX_ENUM_BITS = 24
METRICS = ("bien", "tbien")
_SCHEME = {"bien": WeightingScheme.POWER_LAW, "tbien": WeightingScheme.LOGARITHMIC}
_CLASS_CODES = np.array(CLASSES)
CHUNK = 1 << 18


@dataclass
class EnumerationTable:
    n: int
    values: np.ndarray
    scores: Dict[str, np.ndarray]
    classes: np.ndarray  # index into CLASSES
    stats: Dict[str, SampleStats] = field(default_factory=dict)
    class_counts: Dict[str, int] = field(default_factory=dict)
    adjusted_r2: Optional[float] = None

    def class_names(self) -> np.ndarray:
        return _CLASS_CODES[self.classes]

    def summary(self) -> dict:
        return {
            "n": self.n,
            "count": int(self.values.size),
            "stats": {k: v.to_dict() for k, v in self.stats.items()},
            "class_counts": dict(self.class_counts),
            "adjusted_r2": self.adjusted_r2,
        }

    def rows(self) -> Iterable[Tuple[int, str, Optional[float], Optional[float], str]]:
        names = self.class_names()
        b = self.scores.get("bien")
        t = self.scores.get("tbien")
        for i, v in enumerate(self.values.tolist()):
            yield (
                v,
                format(v, f"0{self.n}b"),
                None if b is None else float(b[i]),
                None if t is None else float(t[i]),
                str(names[i]),
            )


def _pascal_parity_mask(n: int) -> int:
    # bit i set iff C(n-1, i) is odd (Lucas); row is symmetric so bit order is irrelevant
    m = n - 1
    return sum(1 << i for i in range(n) if i & m == i)


def classify_values(values: np.ndarray, n: int) -> np.ndarray:
    """Vectorized periodicity class codes for n-bit integers."""
    values = np.asarray(values, dtype=np.uint64)
    last = np.bitwise_count(values & np.uint64(_pascal_parity_mask(n))) & 1
    periodic = np.zeros(values.shape, dtype=bool)
    for p in range(1, n // 2 + 1):
        if n % p:
            continue
        low = np.uint64((1 << (n - p)) - 1)
        periodic |= (values >> np.uint64(p)) == (values & low)
    codes = np.full(values.shape, CLASSES.index(NPERIODIC), dtype=np.int8)
    codes[periodic] = CLASSES.index(PERIODIC)
    codes[last == 1] = CLASSES.index(APERIODIC)
    return codes


def _chunk(n: int, lo: int, hi: int, metrics: Tuple[str, ...]):
    values = np.arange(lo, hi, dtype=np.uint64)
    words = (values << np.uint64(64 - n))[:, None]
    scores = {m: score_packed(words, n, _SCHEME[m]) for m in metrics}
    return values, scores, classify_values(values, n)


def adjusted_r_squared(x, y) -> float:
    """Adjusted R^2 of the least-squares line y ~ a + b x."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError("x and y differ in length")
    m = x.size
    if m < 3:
        raise ValueError("need at least 3 points")
    xc = x - x.mean()
    yc = y - y.mean()
    sxx = float(xc @ xc)
    if sxx == 0.0:
        raise ValueError("x has zero variance")
    syy = float(yc @ yc)
    if syy == 0.0:
        r2 = 1.0
    else:
        sxy = float(xc @ yc)
        r2 = sxy * sxy / (sxx * syy)
    return 1.0 - (1.0 - r2) * (m - 1) / (m - 2)


def enumerate_strings(n: int, metrics: Iterable[str] = METRICS, threads: int = 1,
                      ranges: Optional[List[Tuple[int, int]]] = None) -> EnumerationTable:
    """Score and classify all 2**n strings of length ``n``.

    ``ranges`` overrides the partition of ``[0, 2**n)`` into work units;
    results do not depend on it or on ``threads``.
    """
    if not 2 <= n <= MAX_ENUM_BITS:
        raise ValueError(f"n must be in [2, {MAX_ENUM_BITS}]")
    metrics = tuple(m for m in METRICS if m in set(metrics))
    if not metrics:
        raise ValueError("no known metric requested")
    if "bien" in metrics and n > BIEN_MAX_BITS:
        metrics = tuple(m for m in metrics if m != "bien")
    total = 1 << n
    if ranges is None:
        ranges = [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]
    if sorted(ranges) != ranges or ranges[0][0] != 0 or ranges[-1][1] != total or any(
        a[1] != b[0] for a, b in zip(ranges, ranges[1:])
    ):
        raise ValueError("ranges must tile [0, 2**n) in order")

    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: _chunk(n, r[0], r[1], metrics), ranges))
    else:
        parts = [_chunk(n, lo, hi, metrics) for lo, hi in ranges]

    values = np.concatenate([p[0] for p in parts])
    scores = {m: np.concatenate([p[1][m] for p in parts]) for m in metrics}
    classes = np.concatenate([p[2] for p in parts])
    table = EnumerationTable(n, values, scores, classes)
    table.stats = {m: summarize(scores[m]) for m in metrics}
    counts = np.bincount(classes, minlength=len(CLASSES))
    table.class_counts = {c: int(counts[i]) for i, c in enumerate(CLASSES)}
    if len(metrics) == 2 and float(np.ptp(scores["bien"])) > 0:
        table.adjusted_r2 = adjusted_r_squared(scores["bien"], scores["tbien"])
    return table


def ascending_dump(table: EnumerationTable, metric: str) -> List[Tuple[int, float]]:
    """(value, score) pairs by ascending score, ties by ascending value."""
    if metric not in table.scores:
        raise ValueError(f"metric {metric!r} was not computed")
    s = table.scores[metric]
    order = np.lexsort((table.values, s))
    return [(int(table.values[i]), float(s[i])) for i in order]


def histogram(table: EnumerationTable, metric: str, bin_width: float) -> List[Tuple[float, int]]:
    """Counts per bin [edge, edge + width); the last bin also takes its right edge."""
    if not 0 < bin_width <= 1:
        raise ValueError("bin width must be in (0, 1]")
    if metric not in table.scores:
        raise ValueError(f"metric {metric!r} was not computed")
    nbins = max(1, math.ceil(1.0 / bin_width - 1e-9))
    edges = np.round(np.arange(nbins) * bin_width, 12)
    idx = np.searchsorted(edges, table.scores[metric], side="right") - 1
    idx = np.clip(idx, 0, nbins - 1)
    counts = np.bincount(idx, minlength=nbins)
    return [(float(e), int(c)) for e, c in zip(edges, counts)]
