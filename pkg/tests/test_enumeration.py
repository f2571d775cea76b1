import numpy as np
import pytest

from bientropy.bitstring import CLASSES, BitString, classify
from bientropy.entropy import bien, tbien
from bientropy.enumeration import (
    adjusted_r_squared, ascending_dump, classify_values, enumerate_strings, histogram,
)
from oracles import bien_naive, int_bits, xor_derivative


@pytest.fixture(scope="module")
def t8():
    return enumerate_strings(8)


def test_two_bit_table():
    t = enumerate_strings(2)
    assert t.scores["bien"].tolist() == [0.0, 1.0, 1.0, 0.0]


def test_four_bit_stats():
    t = enumerate_strings(4)
    assert t.stats["bien"].mean == pytest.approx(0.594, abs=1e-3)
    assert t.stats["bien"].stdev == pytest.approx(0.389, abs=1e-3)


def test_eight_bit_summary(t8):
    assert t8.class_counts == {"periodic": 16, "nperiodic": 112, "aperiodic": 128}
    assert t8.stats["bien"].mean == pytest.approx(0.625, abs=1e-3)
    assert t8.stats["tbien"].mean == pytest.approx(0.747, abs=1e-3)
    assert t8.adjusted_r2 == pytest.approx(0.85, abs=0.01)
    s = t8.summary()
    assert s["count"] == 256 and s["class_counts"]["aperiodic"] == 128


@pytest.mark.parametrize("n", [2, 3, 5, 8, 11])
def test_vector_classes_match_scalar(n):
    codes = classify_values(np.arange(2 ** n), n)
    for v in range(2 ** n):
        assert CLASSES[codes[v]] == classify(BitString(v, n), evidence=False).cls


@pytest.mark.parametrize("n", [3, 6, 9])
def test_last_derivative_parity_against_xor(n):
    codes = classify_values(np.arange(2 ** n), n)
    for v in range(2 ** n):
        cur = int_bits(v, n)
        while len(cur) > 1:
            cur = xor_derivative(cur)
        assert (CLASSES[codes[v]] == "aperiodic") == (cur[0] == 1)


def test_scores_against_naive():
    t = enumerate_strings(6)
    for v in range(64):
        assert t.scores["bien"][v] == pytest.approx(bien_naive(int_bits(v, 6)), abs=1e-12)


def test_threads_and_ranges_do_not_change_results():
    a = enumerate_strings(10)
    b = enumerate_strings(10, threads=4, ranges=[(0, 100), (100, 513), (513, 1024)])
    for m in ("bien", "tbien"):
        assert np.array_equal(a.scores[m], b.scores[m])
    assert np.array_equal(a.classes, b.classes)


@pytest.mark.parametrize("ranges", [[(0, 10)], [(0, 10), (11, 16)], [(1, 16)]])
def test_bad_ranges(ranges):
    with pytest.raises(ValueError):
        enumerate_strings(4, ranges=ranges)


@pytest.mark.parametrize("n", [1, 25])
def test_bad_n(n):
    with pytest.raises(ValueError):
        enumerate_strings(n)


def test_single_metric():
    t = enumerate_strings(5, metrics=["tbien"])
    assert set(t.scores) == {"tbien"} and t.adjusted_r2 is None
    with pytest.raises(ValueError):
        ascending_dump(t, "bien")
    with pytest.raises(ValueError):
        enumerate_strings(5, metrics=["nope"])


def test_rows(t8):
    rows = list(t8.rows())
    assert len(rows) == 256
    v, bits, b, tb, cls = rows[0b01101011]
    assert bits == "01101011" and cls == classify(BitString(v, 8)).cls
    assert b == bien(BitString(v, 8)) and tb == tbien(BitString(v, 8))


class TestAdjustedR2:
    def test_perfect(self):
        x = np.arange(10.0)
        assert adjusted_r_squared(x, 2 * x + 1) == pytest.approx(1.0)

    def test_orthogonal(self):
        x = np.tile([1.0, -1.0], 500)
        y = np.repeat([1.0, -1.0], 500)
        r = adjusted_r_squared(x, y)
        assert r <= 0 and r == pytest.approx(0.0, abs=1e-2)

    def test_errors(self):
        with pytest.raises(ValueError):
            adjusted_r_squared([1, 2], [1, 2])
        with pytest.raises(ValueError):
            adjusted_r_squared([1, 1, 1], [1, 2, 3])
        with pytest.raises(ValueError):
            adjusted_r_squared([1, 2, 3], [1, 2])


class TestDump:
    def test_two_bit(self):
        assert ascending_dump(enumerate_strings(2), "bien") == [(0, 0.0), (3, 0.0), (1, 1.0), (2, 1.0)]

    def test_four_bit_head(self):
        head = [s for _, s in ascending_dump(enumerate_strings(4), "bien")[:4]]
        assert head == pytest.approx([0, 0, 1 / 7, 1 / 7], abs=1e-12)

    def test_eight_bit_tail(self, t8):
        tail = ascending_dump(t8, "bien")[-128:]
        assert all(s > 0.90 for _, s in tail)

    def test_sorted(self, t8):
        d = ascending_dump(t8, "tbien")
        assert all(a[1] < b[1] or (a[1] == b[1] and a[0] < b[0]) for a, b in zip(d, d[1:]))


class TestHistogram:
    def test_eight_bit_top_bin(self, t8):
        h = histogram(t8, "bien", 0.1)
        assert len(h) == 10 and h[-1] == (0.9, 128)
        assert sum(c for _, c in h) == 256

    def test_two_bit(self):
        assert histogram(enumerate_strings(2), "bien", 0.5) == [(0.0, 2), (0.5, 2)]

    @pytest.mark.parametrize("w", [0.0, 1.5])
    def test_bad_width(self, w):
        with pytest.raises(ValueError):
            histogram(enumerate_strings(2), "bien", w)

    @pytest.mark.parametrize("w", [0.03, 0.25, 1.0])
    def test_conservation(self, t8, w):
        assert sum(c for _, c in histogram(t8, "tbien", w)) == 256
