"""Shannon entropy and the weighted BiEntropy family.

Two evaluation paths share one definition:

* :func:`entropy_profile` / :func:`bien` / :func:`tbien` work on a single
  :class:`~bientropy.bitstring.BitString` (integer-packed).
* :func:`score_packed` evaluates many equal-length strings at once on a
  ``(m, words)`` array of ``uint64`` words, shift-XORing every row per
  derivative step. The scanner, enumeration and sectioned analyses use it.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .bitstring import BitString, _mask

BIEN_MAX_BITS = 64


class WeightingScheme(str, enum.Enum):
    POWER_LAW = "power_law"
    LOGARITHMIC = "logarithmic"
    UNIFORM = "uniform"
    LINEAR = "linear"

    def weight(self, k: int) -> float:
        """Raw weight of derivative ``k`` (k = 0 is the string itself)."""
        if self is WeightingScheme.POWER_LAW:
            return math.ldexp(1.0, k)
        if self is WeightingScheme.LOGARITHMIC:
            return math.log2(k + 2)
        if self is WeightingScheme.UNIFORM:
            return 1.0
        return float(k + 1)

    def normalized_weights(self, n: int) -> np.ndarray:
        """Weights for k = 0..n-2 scaled to sum to one."""
        if n < 2:
            raise ValueError("weights need n >= 2")
        k = np.arange(n - 1)
        if self is WeightingScheme.POWER_LAW:
            # 2^k / (2^(n-1) - 1) without forming 2^(n-1); tiny k underflow to 0
            top = n - 1
            return np.ldexp(1.0, k - top) / (1.0 - math.ldexp(1.0, -top))
        if self is WeightingScheme.LOGARITHMIC:
            w = np.log2(k + 2.0)
        elif self is WeightingScheme.UNIFORM:
            w = np.ones(n - 1)
        else:
            w = k + 1.0
        return w / w.sum()


def shannon_entropy(p: float) -> float:
    """Binary entropy H(p) in bits, with 0 log 0 taken as 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability out of range: {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    q = 1.0 - p
    return -p * math.log2(p) - q * math.log2(q)


@functools.lru_cache(maxsize=4096)
def _entropy_table(length: int) -> np.ndarray:
    """H(c / length) for c = 0..length."""
    p = np.arange(length + 1) / length
    q = 1.0 - p
    with np.errstate(divide="ignore", invalid="ignore"):
        h = -p * np.log2(p) - q * np.log2(q)
    h[0] = h[-1] = 0.0
    return h


@dataclass(frozen=True)
class ProfileRow:
    k: int
    p: float
    h: float
    weight: float

    @property
    def weighted(self) -> float:
        return self.h * self.weight


@dataclass(frozen=True)
class EntropyProfile:
    rows: List[ProfileRow]
    score: float
    scheme: WeightingScheme

    def to_dict(self) -> dict:
        return {
            "scheme": self.scheme.value,
            "score": self.score,
            "rows": [
                {"k": r.k, "p": r.p, "H": r.h, "weight": r.weight, "weighted": r.weighted}
                for r in self.rows
            ],
        }


def _profile_counts(s: BitString) -> List[int]:
    """Ones count of d_k(s) for k = 0..n-2."""
    x, n = s.value, s.n
    counts = []
    while n > 1:
        counts.append(x.bit_count())
        x = (x ^ (x >> 1)) & _mask(n - 1)
        n -= 1
    return counts


def _score_from_counts(counts: Sequence[int], n: int, scheme: WeightingScheme) -> float:
    w = scheme.normalized_weights(n)
    total = 0.0
    for k, c in enumerate(counts):
        total += shannon_entropy(c / (n - k)) * w[k]
    return float(total)


def entropy_profile(s: BitString, scheme=WeightingScheme.POWER_LAW) -> EntropyProfile:
    scheme = WeightingScheme(scheme)
    if s.n < 2:
        raise ValueError("BiEntropy needs at least 2 bits")
    counts = _profile_counts(s)
    rows = []
    for k, c in enumerate(counts):
        p = c / (s.n - k)
        rows.append(ProfileRow(k, p, shannon_entropy(p), scheme.weight(k)))
    return EntropyProfile(rows, _score_from_counts(counts, s.n, scheme), scheme)


def score(s: BitString, scheme=WeightingScheme.POWER_LAW) -> float:
    if s.n < 2:
        raise ValueError("BiEntropy needs at least 2 bits")
    scheme = WeightingScheme(scheme)
    return _score_from_counts(_profile_counts(s), s.n, scheme)


def bien(s: BitString, cap: int = BIEN_MAX_BITS) -> float:
    """Power-law BiEntropy. Strings longer than ``cap`` are refused; use :func:`tbien`."""
    if s.n > cap:
        raise ValueError(f"bien is limited to {cap} bits (got {s.n}); use tbien for long strings")
    return score(s, WeightingScheme.POWER_LAW)


def tbien(s: BitString) -> float:
    """Logarithmically weighted BiEntropy, suitable for long strings."""
    return score(s, WeightingScheme.LOGARITHMIC)


# batched kernel ---------------------------------------------------------

def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack an ``(m, n)`` 0/1 array into ``(m, ceil(n/64))`` uint64 words, first bit in bit 63."""
    bits = np.atleast_2d(np.asarray(bits, dtype=np.uint8))
    m, n = bits.shape
    words = -(-n // 64)
    packed = np.packbits(bits, axis=1)
    padded = np.zeros((m, words * 8), dtype=np.uint8)
    padded[:, : packed.shape[1]] = packed
    return padded.view(">u8").astype(np.uint64)


def pack_bytes(rows: np.ndarray) -> np.ndarray:
    """Pack an ``(m, nbytes)`` uint8 array (MSB-first bits) into uint64 words."""
    rows = np.atleast_2d(np.asarray(rows, dtype=np.uint8))
    m, nbytes = rows.shape
    words = -(-nbytes // 8)
    padded = np.zeros((m, words * 8), dtype=np.uint8)
    padded[:, :nbytes] = rows
    return padded.view(">u8").astype(np.uint64)


def derivative_packed(words: np.ndarray, length: int) -> np.ndarray:
    """One derivative step on packed rows of ``length`` bits; returns new words (length - 1 bits)."""
    one = np.uint64(1)
    shifted = words << one
    shifted[:, :-1] |= words[:, 1:] >> np.uint64(63)
    out = words ^ shifted
    last = length - 1
    out[:, last // 64] &= ~(one << np.uint64(63 - last % 64))
    return out


def ones_counts_packed(words: np.ndarray, n: int) -> np.ndarray:
    """Ones count of d_k for k = 0..n-2, shape ``(m, n-1)``."""
    words = np.array(words, dtype=np.uint64, copy=True)
    counts = np.empty((words.shape[0], n - 1), dtype=np.int64)
    length = n
    for k in range(n - 1):
        active = -(-length // 64)
        counts[:, k] = np.bitwise_count(words[:, :active]).sum(axis=1)
        if k < n - 2:
            words = derivative_packed(words[:, :active], length)
        length -= 1
    return counts


def score_packed(words: np.ndarray, n: int, scheme=WeightingScheme.POWER_LAW) -> np.ndarray:
    """BiEntropy of every row of a packed ``(m, words)`` array of ``n``-bit strings."""
    scheme = WeightingScheme(scheme)
    if n < 2:
        raise ValueError("BiEntropy needs at least 2 bits")
    words = np.array(np.atleast_2d(words), dtype=np.uint64, copy=True)
    if words.shape[1] * 64 < n:
        raise ValueError("not enough words for the requested length")
    w = scheme.normalized_weights(n)
    total = np.zeros(words.shape[0])
    length = n
    for k in range(n - 1):
        active = -(-length // 64)
        words = words[:, :active]
        c = np.bitwise_count(words).sum(axis=1, dtype=np.int64)
        total += _entropy_table(length)[c] * w[k]
        if k < n - 2:
            words = derivative_packed(words, length)
        length -= 1
    return total


def score_many(bits: np.ndarray, scheme=WeightingScheme.POWER_LAW) -> np.ndarray:
    """BiEntropy of every row of an ``(m, n)`` 0/1 array."""
    bits = np.atleast_2d(bits)
    return score_packed(pack_rows(bits), bits.shape[1], scheme)


def bien_many(bits: np.ndarray, cap: int = BIEN_MAX_BITS) -> np.ndarray:
    bits = np.atleast_2d(bits)
    if bits.shape[1] > cap:
        raise ValueError(f"bien is limited to {cap} bits (got {bits.shape[1]}); use tbien")
    return score_many(bits, WeightingScheme.POWER_LAW)


def tbien_many(bits: np.ndarray) -> np.ndarray:
    return score_many(bits, WeightingScheme.LOGARITHMIC)
