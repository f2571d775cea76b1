"""Packed finite bit strings, binary derivatives and periodicity analysis.

A :class:`BitString` stores its digits in a single Python integer with the
first digit in the most significant position, so shifting and XOR run over
machine words inside the interpreter rather than digit by digit.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

PERIODIC = "periodic"
NPERIODIC = "nperiodic"
APERIODIC = "aperiodic"
CLASSES = (PERIODIC, NPERIODIC, APERIODIC)


def _mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class BitString:
    """Immutable bit string of explicit length ``n``.

    ``value`` holds the digits with digit 1 as the most significant bit.
    Indexing through ``s[i]`` is 0-based.
    """

    value: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a bit string needs at least one bit")
        if self.value < 0 or self.value >> self.n:
            raise ValueError(f"value does not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitString":
        bits = list(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b!r}")
            value = (value << 1) | int(b)
        return cls(value, len(bits))

    @classmethod
    def from_numpy(cls, bits: np.ndarray) -> "BitString":
        bits = np.asarray(bits, dtype=np.uint8).ravel()
        if bits.size == 0:
            raise ValueError("a bit string needs at least one bit")
        if bits.max(initial=0) > 1:
            raise ValueError("array must contain only 0 and 1")
        pad = (-bits.size) % 8
        packed = np.packbits(bits).tobytes()
        return cls(int.from_bytes(packed, "big") >> pad, int(bits.size))

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitString":
        """Bytes read most-significant bit first."""
        return cls(int.from_bytes(data, "big"), 8 * len(data))

    def to_numpy(self) -> np.ndarray:
        pad = (-self.n) % 8
        raw = (self.value << pad).to_bytes((self.n + pad) // 8, "big")
        return np.unpackbits(np.frombuffer(raw, dtype=np.uint8))[: self.n]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i):
        if isinstance(i, slice):
            start, stop, step = i.indices(self.n)
            if step != 1:
                return BitString.from_bits(self.to_numpy()[i].tolist())
            if stop <= start:
                raise ValueError("empty slice")
            width = stop - start
            return BitString((self.value >> (self.n - stop)) & _mask(width), width)
        if i < 0:
            i += self.n
        if not 0 <= i < self.n:
            raise IndexError("bit index out of range")
        return (self.value >> (self.n - 1 - i)) & 1

    def __iter__(self):
        for i in range(self.n):
            yield (self.value >> (self.n - 1 - i)) & 1

    def __xor__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("XOR needs equal lengths")
        return BitString(self.value ^ other.value, self.n)

    def __invert__(self) -> "BitString":
        return BitString(self.value ^ _mask(self.n), self.n)

    def __add__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString((self.value << other.n) | other.value, self.n + other.n)

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"BitString('{self}')"

    def ones(self) -> int:
        return self.value.bit_count()


def parse_bits(text: str) -> BitString:
    """Parse '0'/'1' characters, skipping whitespace."""
    digits = []
    for ch in text:
        if ch in "01":
            digits.append(ch)
        elif not ch.isspace():
            raise ValueError(f"invalid character {ch!r} in bit string")
    if not digits:
        raise ValueError("no bits in input")
    return BitString(int("".join(digits), 2), len(digits))


def render_bits(s: BitString) -> str:
    return str(s)


def reverse(s: BitString) -> BitString:
    return BitString(int(str(s)[::-1], 2), s.n)


def derivative(s: BitString) -> BitString:
    """First binary derivative: d[i] = s[i] XOR s[i+1], length n-1."""
    if s.n < 2:
        raise ValueError("derivative needs at least 2 bits")
    return BitString((s.value ^ (s.value >> 1)) & _mask(s.n - 1), s.n - 1)


def derivatives(s: BitString) -> List[BitString]:
    """All n-1 derivatives d_1(s) .. d_{n-1}(s)."""
    if s.n < 2:
        raise ValueError("derivatives need at least 2 bits")
    out = []
    cur = s
    while cur.n > 1:
        cur = derivative(cur)
        out.append(cur)
    return out


def last_derivative(s: BitString) -> int:
    """The single bit d_{n-1}(s)."""
    if s.n < 2:
        raise ValueError("derivatives need at least 2 bits")
    x, n = s.value, s.n
    while n > 1:
        x = (x ^ (x >> 1)) & _mask(n - 1)
        n -= 1
    return x


def ones_fraction(s: BitString) -> float:
    return s.value.bit_count() / s.n


def _has_period(x: int, n: int, p: int) -> bool:
    # s[i+p] == s[i] for every i <=> dropping the last p bits equals dropping the first p
    return (x >> p) == (x & _mask(n - p))


def find_period(s: BitString) -> Optional[int]:
    """Least P <= n/2 dividing n with s[i+P] = s[i] throughout, or None."""
    if s.n < 2:
        raise ValueError("period search needs at least 2 bits")
    for p in range(1, s.n // 2 + 1):
        if s.n % p == 0 and _has_period(s.value, s.n, p):
            return p
    return None


def find_eventual_period(s: BitString) -> Optional[Tuple[int, int]]:
    """Least offset k, then least P, such that the suffix after k digits has period P.

    At least two full periods must follow the offset (k <= n - 2P). Taking
    the offset first keeps every periodic string at offset 0.
    Returns ``(P, k)`` or None.
    """
    n = s.n
    if n < 2:
        raise ValueError("period search needs at least 2 bits")
    for k in range(0, n - 1):
        m = n - k
        x = s.value & _mask(m)
        for p in range(1, m // 2 + 1):
            if _has_period(x, m, p):
                return p, k
    return None


@dataclass(frozen=True)
class PeriodicityReport:
    cls: str
    period: Optional[int]
    eventual_period: Optional[Tuple[int, int]]
    last_derivative_bit: int

    def to_dict(self) -> dict:
        return {
            "class": self.cls,
            "period": self.period,
            "eventual_period": list(self.eventual_period) if self.eventual_period else None,
            "last_derivative_bit": self.last_derivative_bit,
        }


def classify(s: BitString, evidence: bool = True) -> PeriodicityReport:
    """Derivative-driven periodicity class.

    aperiodic when the last derivative is 1; otherwise periodic if
    :func:`find_period` succeeds, else nperiodic. ``evidence=False`` skips
    the eventual-period search, which is quadratic in the worst case.
    """
    last = last_derivative(s)
    period = find_period(s) if last == 0 else None
    if last == 1:
        cls = APERIODIC
    elif period is not None:
        cls = PERIODIC
    else:
        cls = NPERIODIC
    eventual = find_eventual_period(s) if evidence else None
    return PeriodicityReport(cls, period, eventual, last)
