"""Prime encodings, digit expansions and sectioned BiEntropy analysis."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .bitstring import PERIODIC, BitString, classify
from .entropy import BIEN_MAX_BITS, WeightingScheme, bien, score_many, tbien
from .stats import SampleStats, summarize

_SCHEME = {"bien": WeightingScheme.POWER_LAW, "tbien": WeightingScheme.LOGARITHMIC}


def prime_sieve(limit: int) -> np.ndarray:
    """Boolean array ``is_prime[0..limit]`` by the sieve of Eratosthenes."""
    is_prime = np.ones(max(limit + 1, 2), dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return is_prime[: limit + 1]


def bep(n: int) -> BitString:
    """Binary encoded primes: bit i is 1 iff the natural number i + 1 is prime (i = 1..n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return BitString.from_numpy(prime_sieve(n + 1)[2 : n + 2])


def penni(n: int) -> BitString:
    """Prime encoded non-negative integers: bit j is 1 iff j - 1 is prime (j = 1..n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return BitString.from_numpy(prime_sieve(n)[:n])


GENERATORS = {"bep": bep, "penni": penni}


def _generator(name):
    if callable(name):
        return name
    try:
        return GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}") from None


def prefix_curve(generator, max_n: int, metric: str = "tbien") -> List[Tuple[int, float]]:
    """Score of every prefix of length 2..max_n."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    if metric == "bien" and max_n > BIEN_MAX_BITS:
        raise ValueError(f"bien prefixes are limited to {BIEN_MAX_BITS} bits; use tbien")
    fn = {"bien": bien, "tbien": tbien}[metric]
    full = _generator(generator)(max_n)
    return [(n, fn(full[:n])) for n in range(2, max_n + 1)]


def check_nonperiodicity(generator, max_even_n: int) -> List[dict]:
    """Even-length prefixes (4..max_even_n) that classify as periodic; empty when none do."""
    if max_even_n < 4 or max_even_n % 2:
        raise ValueError("max_even_n must be an even number >= 4")
    full = _generator(generator)(max_even_n)
    violations = []
    for n in range(4, max_even_n + 1, 2):
        report = classify(full[:n], evidence=False)
        if report.cls == PERIODIC:
            violations.append({"n": n, "period": report.period})
    return violations


@dataclass(frozen=True)
class DigitStream:
    digits: np.ndarray
    source_label: str = ""

    def __post_init__(self):
        d = np.asarray(self.digits, dtype=np.int8)
        if d.ndim != 1:
            raise ValueError("digits must be one-dimensional")
        if d.size and (d.min() < 0 or d.max() > 9):
            raise ValueError("digits must lie in 0..9")
        object.__setattr__(self, "digits", d)

    def __len__(self):
        return int(self.digits.size)


def champernowne(count: int, integer_part: bool = False) -> DigitStream:
    """First ``count`` digits of 0.123456789101112...

    With ``integer_part`` the leading '0' before the decimal point is
    counted as the first digit, as in digit files that list the whole
    expansion.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    parts = ["0"] if integer_part else []
    have = len(parts)
    k = 1
    while have < count:
        s = str(k)
        parts.append(s)
        have += len(s)
        k += 1
    text = "".join(parts)[:count]
    label = "champernowne" + ("+int" if integer_part else "")
    return DigitStream(np.frombuffer(text.encode(), dtype=np.uint8) - ord("0"), label)


def parse_digits(text: str, label: str = "") -> DigitStream:
    """Keep only the decimal digits of ``text`` (points, whitespace and newlines dropped)."""
    raw = np.frombuffer(text.encode("ascii", errors="ignore"), dtype=np.uint8)
    keep = raw[(raw >= ord("0")) & (raw <= ord("9"))]
    if keep.size == 0:
        raise ValueError("no digits found")
    return DigitStream(keep - ord("0"), label)


def read_digits(path) -> DigitStream:
    with open(path, "r", encoding="ascii", errors="ignore") as fh:
        return parse_digits(fh.read(), str(path))


def encode_half(d: DigitStream) -> BitString:
    """One bit per digit: 0-4 -> 0, 5-9 -> 1."""
    if len(d) == 0:
        raise ValueError("empty digit stream")
    return BitString.from_numpy((d.digits >= 5).astype(np.uint8))


_OCTAL = [[int(b) for b in format(v, "03b")] for v in range(8)] + [[0], [1]]


def encode_octal(d: DigitStream) -> BitString:
    """Digits 0-7 as three bits MSB first, 8 as a single 0 and 9 as a single 1."""
    if len(d) == 0:
        raise ValueError("empty digit stream")
    bits = [b for v in d.digits.tolist() for b in _OCTAL[v]]
    return BitString.from_bits(bits)


ENCODINGS = {"half": encode_half, "octal": encode_octal}


@dataclass
class SectionReport:
    section_bits: int
    metric: str
    scores: np.ndarray
    stats: SampleStats
    running_mean: np.ndarray

    def to_dict(self) -> dict:
        return {
            "section_bits": self.section_bits,
            "metric": self.metric,
            "stats": self.stats.to_dict(),
        }


def sections(bits: BitString, section_bits: int, count: int) -> np.ndarray:
    """``(count, section_bits)`` array of consecutive non-overlapping slices from bit 1."""
    need = count * section_bits
    if count < 1 or section_bits < 1:
        raise ValueError("count and section_bits must be positive")
    if bits.n < need:
        raise ValueError(f"need {need} bits, have {bits.n}")
    return bits[:need].to_numpy().reshape(count, section_bits)


def sectioned_analysis(bits: BitString, section_bits: int, count: int,
                       metric: str = "bien") -> SectionReport:
    if section_bits < 2:
        raise ValueError("sections need at least 2 bits")
    if metric not in _SCHEME:
        raise ValueError(f"unknown metric {metric!r}")
    if metric == "bien" and section_bits > BIEN_MAX_BITS:
        raise ValueError(f"bien sections are limited to {BIEN_MAX_BITS} bits; use tbien")
    scores = score_many(sections(bits, section_bits, count), _SCHEME[metric])
    running = np.cumsum(scores) / np.arange(1, count + 1)
    return SectionReport(section_bits, metric, scores, summarize(scores), running)

