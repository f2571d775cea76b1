"""Sample statistics, Welch's unequal-variance t-test and decile partitioning."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

_EPS = 1e-15
_TINY = 1e-300


@dataclass(frozen=True)
class SampleStats:
    n: int
    mean: float
    stdev: Optional[float]  # sample stdev (divisor n-1); None when n == 1

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class WelchResult:
    t: float
    df: float
    p_two_sided: float

    def to_dict(self) -> dict:
        return {"t": self.t, "df": self.df, "p": self.p_two_sided}


def summarize(xs) -> SampleStats:
    """Mean and sample stdev by Welford's single-pass update.

    Float arrays take numpy's pairwise-summed two-pass route instead, which
    is at least as accurate and keeps million-element inputs fast.
    """
    if isinstance(xs, np.ndarray) and xs.size > 1:
        xs = xs.astype(float, copy=False).ravel()
        return SampleStats(int(xs.size), float(xs.mean()), float(xs.std(ddof=1)))
    n = 0
    mean = 0.0
    m2 = 0.0
    for x in xs:
        x = float(x)
        n += 1
        delta = x - mean
        mean += delta / n
        m2 += delta * (x - mean)
    if n == 0:
        raise ValueError("cannot summarize an empty sample")
    stdev = math.sqrt(max(m2, 0.0) / (n - 1)) if n > 1 else None
    return SampleStats(n, mean, stdev)


def _betacf(a: float, b: float, x: float) -> float:
    # modified Lentz evaluation of the incomplete beta continued fraction
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, 10000):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def betainc_regularized(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if x == 0.0 or x == 1.0:
        return x
    log_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def t_sf_two_sided(t: float, df: float) -> float:
    """P(|T| >= |t|) for Student's t with ``df`` degrees of freedom."""
    if df <= 0:
        raise ValueError("degrees of freedom must be positive")
    if math.isinf(t):
        return 0.0
    return betainc_regularized(df / 2.0, 0.5, df / (df + t * t))


def t_cdf(t: float, df: float) -> float:
    tail = 0.5 * t_sf_two_sided(t, df)
    return 1.0 - tail if t > 0 else tail


def welch_test(a: Sequence[float], b: Sequence[float]) -> WelchResult:
    """Two-sided Welch t-test of mean(a) against mean(b)."""
    sa, sb = summarize(a), summarize(b)
    if sa.n < 2 or sb.n < 2:
        raise ValueError("each sample needs at least 2 values")
    va = sa.stdev ** 2 / sa.n
    vb = sb.stdev ** 2 / sb.n
    if va == 0.0 and vb == 0.0:
        raise ValueError("both samples have zero variance")
    se2 = va + vb
    t = (sa.mean - sb.mean) / math.sqrt(se2)
    df = se2 * se2 / (va * va / (sa.n - 1) + vb * vb / (sb.n - 1))
    return WelchResult(t, df, t_sf_two_sided(t, df))


def decile_partition(keys: Sequence[float], payload: Sequence) -> Tuple[list, list]:
    """Split ``payload`` into the top and bottom tenths by descending key.

    Ties keep original index order. Each decile holds ``len(keys) // 10``
    items, listed in ranking order.
    """
    if len(keys) != len(payload):
        raise ValueError("keys and payload differ in length")
    m = len(keys)
    if m < 10:
        raise ValueError("need at least 10 entries for deciles")
    order = sorted(range(m), key=lambda i: (-keys[i], i))
    size = m // 10
    upper = [payload[i] for i in order[:size]]
    lower = [payload[i] for i in order[m - size:]]
    return upper, lower
