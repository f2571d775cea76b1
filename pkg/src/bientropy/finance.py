"""Threshold-binarized price changes and BiEntropy-decile holding returns.

Rows of a price matrix are trading days in ascending order, columns are
tickers. Row and day indices in samples are 1-based.
"""
from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import asdict, dataclass
from typing import Iterator, List, Optional, Sequence

import numpy as np

from .bitstring import BitString
from .entropy import bien, tbien
from .rng import Xoshiro256StarStar
from .stats import decile_partition, summarize

WINDOW = 32
_METRIC = {"bien": bien, "tbien": tbien}


@dataclass
class PriceMatrix:
    prices: np.ndarray
    day_labels: List[str]
    ticker_labels: List[str]

    def __post_init__(self):
        p = np.asarray(self.prices, dtype=float)
        if p.ndim != 2 or p.size == 0:
            raise ValueError("prices must be a non-empty 2-D array")
        if not np.all(np.isfinite(p)) or np.any(p <= 0):
            raise ValueError("prices must be finite and strictly positive")
        if len(self.day_labels) != p.shape[0] or len(self.ticker_labels) != p.shape[1]:
            raise ValueError("label counts do not match the price grid")
        self.prices = p

    @property
    def shape(self):
        return self.prices.shape


def parse_prices(text: str) -> PriceMatrix:
    """CSV with a header of ticker labels and day labels in the first column."""
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if any(cell.strip() for cell in r)]
    if len(rows) < 2:
        raise ValueError("price CSV needs a header and at least one data row")
    header = rows[0]
    tickers = [h.strip() for h in header[1:]]
    if not tickers:
        raise ValueError("price CSV has no ticker columns")
    days, grid = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ValueError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        values = []
        for cell in row[1:]:
            cell = cell.strip()
            if not cell:
                raise ValueError(f"line {lineno}: missing price")
            try:
                v = float(cell)
            except ValueError:
                raise ValueError(f"line {lineno}: non-numeric price {cell!r}") from None
            if not math.isfinite(v):
                raise ValueError(f"line {lineno}: non-finite price {cell!r}")
            if v == 0:
                raise ValueError(f"line {lineno}: zero price")
            if v < 0:
                raise ValueError(f"line {lineno}: negative price")
            values.append(v)
        days.append(row[0].strip())
        grid.append(values)
    return PriceMatrix(np.array(grid), days, tickers)


def load_prices(path) -> PriceMatrix:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_prices(fh.read())


@dataclass
class ThresholdBits:
    bits: np.ndarray
    R: float

    @property
    def sparsity(self) -> float:
        """Fraction of ones."""
        return float(self.bits.mean())


def threshold_transform(P: PriceMatrix, R: float) -> ThresholdBits:
    """Bit is 1 where |P[i]/P[i-1] - 1| > R; the first day is all zeros."""
    if R < 0:
        raise ValueError("threshold must be non-negative")
    p = P.prices
    bits = np.zeros(p.shape, dtype=np.uint8)
    bits[1:] = np.abs(p[1:] / p[:-1] - 1.0) > R
    return ThresholdBits(bits, float(R))


@dataclass(frozen=True)
class HoldingSample:
    k: int
    i: int
    j: int
    d: int
    S: float
    C: float
    H: float
    B: float


def iter_holdings(P: PriceMatrix, T: ThresholdBits, seed: int, i_max: Optional[int] = None,
                  d_min: int = 32, d_max: int = 63, d_fixed: Optional[int] = None,
                  metric: str = "tbien") -> Iterator[HoldingSample]:
    """Endless seeded stream of holding samples.

    Each sample draws the start row i on [1, i_max], the column uniformly,
    then (unless ``d_fixed``) the holding length on [d_min, d_max].
    """
    rows, cols = P.shape
    if T.bits.shape != P.shape:
        raise ValueError("threshold bits and prices differ in shape")
    if d_fixed is not None:
        d_min = d_max = d_fixed
    if d_min < 1 or d_max < d_min:
        raise ValueError("invalid holding length range")
    if i_max is None:
        i_max = rows - max(d_max, WINDOW - 1)
    if i_max < 1 or i_max + d_max > rows or i_max + WINDOW - 1 > rows:
        raise ValueError(f"i_max={i_max} with d_max={d_max} does not fit {rows} rows")
    fn = _METRIC[metric]
    rng = Xoshiro256StarStar(seed)
    for k in itertools.count(1):
        i = rng.integers(1, i_max)
        j = rng.integers(1, cols)
        d = d_min if d_min == d_max else rng.integers(d_min, d_max)
        S = float(P.prices[i - 1, j - 1])
        C = float(P.prices[i + d - 1, j - 1])
        B = fn(BitString.from_numpy(T.bits[i - 1 : i - 1 + WINDOW, j - 1]))
        yield HoldingSample(k, i, j, d, S, C, C / S, B)


def sample_holdings(P: PriceMatrix, T: ThresholdBits, count: int, seed: int,
                    i_max: Optional[int] = None, d_min: int = 32, d_max: int = 63,
                    d_fixed: Optional[int] = None, metric: str = "tbien") -> List[HoldingSample]:
    if count < 10:
        raise ValueError("need at least 10 samples")
    stream = iter_holdings(P, T, seed, i_max, d_min, d_max, d_fixed, metric)
    return list(itertools.islice(stream, count))


@dataclass(frozen=True)
class DecileSide:
    mean_return: float  # sum of closes over sum of starts
    stdev: Optional[float]  # sample stdev of per-sample H
    size: int


@dataclass
class DecileReport:
    R: Optional[float]
    samples: int
    upper: DecileSide
    lower: DecileSide
    sparsity: Optional[float]
    outliers_replaced: int
    members: List[HoldingSample]
    upper_k: List[int]
    lower_k: List[int]

    @property
    def spread(self) -> float:
        return self.upper.mean_return - self.lower.mean_return

    def to_dict(self) -> dict:
        return {
            "R": self.R,
            "samples": self.samples,
            "upper": asdict(self.upper),
            "lower": asdict(self.lower),
            "spread": self.spread,
            "sparsity": self.sparsity,
            "outliers_replaced": self.outliers_replaced,
        }


def _side(group: Sequence[HoldingSample]) -> DecileSide:
    s = sum(x.S for x in group)
    c = sum(x.C for x in group)
    return DecileSide(c / s, summarize([x.H for x in group]).stdev, len(group))


def decile_report(samples: Sequence[HoldingSample], outlier_sd: Optional[float] = 3.0,
                  resample: Optional[Iterator[HoldingSample]] = None, R: Optional[float] = None,
                  sparsity: Optional[float] = None, max_draws: int = 1_000_000) -> DecileReport:
    """Upper and lower BiEntropy-decile holding returns.

    Samples whose H lies more than ``outlier_sd`` sample stdevs from the mean
    are dropped. When ``resample`` is given, each one is replaced by the next
    draw from it that falls inside the same bounds.
    """
    samples = list(samples)
    if len(samples) < 10:
        raise ValueError("need at least 10 samples")
    replaced = 0
    if outlier_sd:
        st = summarize([x.H for x in samples])
        band = outlier_sd * (st.stdev or 0.0)

        def ok(x):
            return abs(x.H - st.mean) <= band

        kept = [x for x in samples if ok(x)]
        replaced = len(samples) - len(kept)
        if replaced and resample is not None:
            draws = 0
            while len(kept) < len(samples):
                x = next(resample)
                draws += 1
                if draws > max_draws:
                    raise RuntimeError("could not draw in-band replacement samples")
                if ok(x):
                    kept.append(x)
        samples = kept
    if len(samples) < 10:
        raise ValueError("fewer than 10 samples survive outlier removal")
    upper, lower = decile_partition([x.B for x in samples], samples)
    return DecileReport(R, len(samples), _side(upper), _side(lower), sparsity, replaced,
                        samples, [x.k for x in upper], [x.k for x in lower])


def run_pipeline(P: PriceMatrix, R: float, samples: int = 1000, seed: int = 0,
                 d_fixed: Optional[int] = None, metric: str = "tbien",
                 outlier_sd: Optional[float] = 3.0, i_max: Optional[int] = None,
                 d_min: int = 32, d_max: int = 63) -> DecileReport:
    """Threshold, sample, drop outliers and report, all driven by one seed."""
    T = threshold_transform(P, R)
    stream = iter_holdings(P, T, seed, i_max, d_min, d_max, d_fixed, metric)
    initial = list(itertools.islice(stream, samples))
    return decile_report(initial, outlier_sd, stream, R=R, sparsity=T.sparsity)


def planted_prices(days: int = 500, tickers: int = 40, signal_columns: Sequence[int] = range(8),
                   drift: float = 0.04, mean_hold: float = 47.5, amplitude: float = 0.02,
                   quiet_step: float = 0.009, seed: int = 0) -> PriceMatrix:
    """Synthetic prices with a planted volatility/return link.

    Signal columns follow a trend growing by ``drift`` every ``mean_hold``
    days, with a level jitter of +/-``amplitude`` whose sign flips at random;
    each flip moves the price by roughly twice the amplitude. Other columns
    random-walk with daily moves below ``quiet_step``, so any threshold
    above it binarizes them to zeros.
    """
    rng = np.random.default_rng(seed)
    t = np.arange(days)
    prices = np.empty((days, tickers))
    signal = set(signal_columns)
    growth = (1.0 + drift) ** (1.0 / mean_hold)
    for j in range(tickers):
        base = rng.uniform(20.0, 500.0)
        if j in signal:
            eps = rng.choice([-1.0, 1.0], size=days)
            prices[:, j] = base * growth ** t * (1.0 + amplitude * eps)
        else:
            steps = rng.uniform(-quiet_step, quiet_step, size=days)
            steps[0] = 0.0
            prices[:, j] = base * np.cumprod(1.0 + steps)
    return PriceMatrix(prices, [f"d{i + 1}" for i in range(days)],
                       [f"T{j + 1}" for j in range(tickers)])


def planted_spread(drift: float = 0.04, mean_hold: float = 47.5, d_min: int = 32,
                   d_max: int = 63, d_fixed: Optional[int] = None) -> float:
    """Expected upper-minus-lower return for :func:`planted_prices` data."""
    ds = [d_fixed] if d_fixed is not None else range(d_min, d_max + 1)
    return sum((1.0 + drift) ** (d / mean_hold) for d in ds) / len(ds) - 1.0
