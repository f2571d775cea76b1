"""Acceptance criteria, each checked at its stated tolerance.

Run ``pytest tests/test_acceptance.py`` (or the whole suite); the terminal
summary prints one PASS/FAIL line per criterion.
"""
import hashlib
import json
import time

import numpy as np
import pytest

from bientropy.bitstring import BitString, parse_bits
from bientropy.cli import run
from bientropy.entropy import bien, bien_many, tbien, tbien_many
from bientropy.enumeration import enumerate_strings
from bientropy.finance import (
    HoldingSample, PriceMatrix, decile_report, planted_prices, planted_spread, run_pipeline,
    threshold_transform,
)
from bientropy.scanner import scan_bytes
from bientropy.sequences import (
    bep, champernowne, check_nonperiodicity, encode_half, penni, prefix_curve, sectioned_analysis,
)
from bientropy.stats import welch_test
from oracles import bien_naive, int_bits, tbien_naive

from test_stats import DATA


def within(value, target, tol):
    return abs(value - target) <= tol


def keystream(nbytes, seed=b"acceptance"):
    """SHA-256 in counter mode: a seeded, cryptographic-quality byte stream."""
    out = bytearray()
    i = 0
    while len(out) < nbytes:
        out += hashlib.sha256(seed + i.to_bytes(8, "big")).digest()
        i += 1
    return bytes(out[:nbytes])


@pytest.fixture(scope="module")
def four():
    return enumerate_strings(4)


@pytest.fixture(scope="module")
def eight():
    return enumerate_strings(8)


# 1 ---------------------------------------------------------------------

@pytest.mark.criterion(1, "two-bit BiEn table exact")
def test_c01_two_bit_table(record_property):
    got = {t: bien(parse_bits(t)) for t in ("00", "01", "10", "11")}
    record_property("measured", f"{got}")
    assert got == {"00": 0.0, "01": 1.0, "10": 1.0, "11": 0.0}


# 2 ---------------------------------------------------------------------

@pytest.mark.criterion(2, "worked examples bien(1011), tbien(1001)")
def test_c02_worked_examples(record_property):
    b, t = bien(parse_bits("1011")), tbien(parse_bits("1001"))
    record_property("measured", f"bien(1011)={b:.4f} tbien(1001)={t:.4f}")
    assert within(b, 0.95, 0.005)
    assert within(t, 0.54, 0.005)


# 3 ---------------------------------------------------------------------

@pytest.mark.criterion(3, "4-bit enumeration mean/stdev")
def test_c03_four_bit_bien(four, record_property):
    s = four.stats["bien"]
    record_property("measured", f"BiEn {s.mean:.4f}/{s.stdev:.4f} (target 0.594/0.389)")
    assert within(s.mean, 0.594, 0.001)
    assert within(s.stdev, 0.389, 0.001)


@pytest.mark.criterion(3, "4-bit enumeration mean/stdev")
def test_c03_four_bit_tbien_stdev(four, record_property):
    s = four.stats["tbien"]
    record_property("measured", f"TBiEn stdev {s.stdev:.4f} (target 0.355)")
    assert within(s.stdev, 0.355, 0.001)


@pytest.mark.criterion(3, "4-bit enumeration mean/stdev")
def test_c03_four_bit_tbien_mean(four, record_property):
    s = four.stats["tbien"]
    record_property("measured", f"TBiEn mean {s.mean:.4f} (target 0.644)")
    assert within(s.mean, 0.644, 0.001)


# 4 ---------------------------------------------------------------------

@pytest.mark.criterion(4, "8-bit enumeration stats, R2, classes, class score bounds")
def test_c04_eight_bit_stats(eight, record_property):
    b, t = eight.stats["bien"], eight.stats["tbien"]
    record_property("measured", f"BiEn {b.mean:.4f}/{b.stdev:.4f} TBiEn {t.mean:.4f}/{t.stdev:.4f}")
    assert within(b.mean, 0.625, 0.001) and within(b.stdev, 0.340, 0.001)
    assert within(t.mean, 0.747, 0.001) and within(t.stdev, 0.209, 0.001)


@pytest.mark.criterion(4, "8-bit enumeration stats, R2, classes, class score bounds")
def test_c04_eight_bit_r2(eight, record_property):
    record_property("measured", f"adjR2 {eight.adjusted_r2:.4f}")
    assert within(eight.adjusted_r2, 0.85, 0.01)


@pytest.mark.criterion(4, "8-bit enumeration stats, R2, classes, class score bounds")
def test_c04_eight_bit_classes(eight, record_property):
    record_property("measured", f"classes {eight.class_counts}")
    assert eight.class_counts == {"periodic": 16, "nperiodic": 112, "aperiodic": 128}
    names = eight.class_names()
    b = eight.scores["bien"]
    assert np.all(b[names == "aperiodic"] > 0.90)
    assert np.all(b[names == "periodic"] < 0.10)


# 5 ---------------------------------------------------------------------

@pytest.mark.criterion(5, "packed kernel equals naive oracle for all n <= 12")
def test_c05_oracle_equivalence(record_property):
    worst = 0.0
    for n in range(2, 13):
        rows = np.array([int_bits(v, n) for v in range(2 ** n)], dtype=np.uint8)
        b, t = bien_many(rows), tbien_many(rows)
        for v in range(2 ** n):
            bits = rows[v].tolist()
            worst = max(worst, abs(b[v] - bien_naive(bits)), abs(t[v] - tbien_naive(bits)))
    record_property("measured", f"max |diff| {worst:.1e}")
    assert worst <= 1e-12


# 6 ---------------------------------------------------------------------

@pytest.mark.criterion(6, "prime listings and non-periodicity through 2048")
def test_c06_listings():
    assert str(bep(18)) == "110101000101000101"
    assert str(penni(16)) == "0011010100010100"


@pytest.mark.criterion(6, "prime listings and non-periodicity through 2048")
def test_c06_nonperiodicity(record_property):
    t0 = time.perf_counter()
    vb = check_nonperiodicity("bep", 2048)
    vp = check_nonperiodicity("penni", 2048)
    dt = time.perf_counter() - t0
    record_property("measured", f"violations {len(vb)}+{len(vp)} in {dt:.2f}s")
    assert vb == [] and vp == []
    assert dt < 5.0


# 7 ---------------------------------------------------------------------

@pytest.mark.criterion(7, "BEP TBiEn dip in [110, 140]")
def test_c07_bep_dip(record_property):
    curve = [(n, s) for n, s in prefix_curve("bep", 512) if n >= 64]
    argmin = min(curve, key=lambda x: x[1])[0]
    record_property("measured", f"argmin n={argmin}")
    assert 110 <= argmin <= 140


# 8 ---------------------------------------------------------------------

@pytest.mark.criterion(8, "Champernowne 1000 x 32-bit BiEn mean/stdev")
def test_c08_champernowne(record_property):
    # the digit stream includes the leading integer digit 0 of 0.1234...
    bits = encode_half(champernowne(32000, integer_part=True))
    st = sectioned_analysis(bits, 32, 1000, "bien").stats
    record_property("measured", f"{st.mean:.4f}/{st.stdev:.4f} (target 0.6707/0.3763)")
    assert within(st.mean, 0.6707, 0.010)
    assert within(st.stdev, 0.3763, 0.010)


# 9 ---------------------------------------------------------------------

@pytest.fixture(scope="module")
def random_scan():
    return scan_bytes(keystream(1000 * 128), 1024)


@pytest.mark.criterion(9, "scanner on random and all-zero bytes")
def test_c09_random_mean(random_scan, record_property):
    mean = random_scan.stats.mean
    record_property("measured", f"mean {mean:.4f} (target 0.991)")
    assert len(random_scan.windows) == 1000
    assert within(mean, 0.991, 0.004)


@pytest.mark.criterion(9, "scanner on random and all-zero bytes")
def test_c09_random_stdev(random_scan, record_property):
    stdev = random_scan.stats.stdev
    record_property("measured", f"stdev {stdev:.4f} (target 0.055)")
    assert within(stdev, 0.055, 0.015)


@pytest.mark.criterion(9, "scanner on random and all-zero bytes")
def test_c09_zero_file():
    r = scan_bytes(bytes(1000 * 128), 1024)
    assert len(r.windows) == 1000 and all(s == 0.0 for _, s in r.windows)


# 10 --------------------------------------------------------------------

@pytest.mark.criterion(10, "invariance suite")
def test_c10_complement_reversal(record_property):
    rng = np.random.default_rng(2024)
    lengths = rng.integers(2, 65, size=10_000)
    worst = 0.0
    for n in np.unique(lengths):
        rows = rng.integers(0, 2, size=(int((lengths == n).sum()), int(n)), dtype=np.uint8)
        for fn in (bien_many, tbien_many):
            base = fn(rows)
            worst = max(worst, np.abs(fn(1 - rows) - base).max(), np.abs(fn(rows[:, ::-1]) - base).max())
            if n >= 3:
                assert np.all(base < 1.0)
    # the scalar path too, on a subset
    for row in rng.integers(0, 2, size=(200, 40)):
        s = BitString.from_numpy(row)
        assert bien(~s) == pytest.approx(bien(s), abs=1e-12)
    record_property("measured", f"max invariance gap {worst:.1e}")
    assert worst <= 1e-12


@pytest.mark.criterion(10, "invariance suite")
def test_c10_threshold_monotone():
    rng = np.random.default_rng(7)
    Rs = np.linspace(0, 0.05, 26)
    for _ in range(50):
        prices = 100 * np.cumprod(1 + rng.normal(0, 0.02, size=(60, 8)), axis=0)
        P = PriceMatrix(prices, [str(i) for i in range(60)], [str(j) for j in range(8)])
        prev = None
        for R in Rs:
            T = threshold_transform(P, R)
            if prev is not None:
                assert np.all(T.bits <= prev.bits) and T.sparsity <= prev.sparsity
            prev = T


@pytest.mark.criterion(10, "invariance suite")
def test_c10_decile_identity():
    rng = np.random.default_rng(11)
    samples = [HoldingSample(k, 1, 1, 32, S, S * H, H, B) for k, (S, H, B) in enumerate(
        zip(rng.uniform(1, 1000, 1000), rng.uniform(0.7, 1.3, 1000), rng.random(1000)))]
    r = decile_report(samples, outlier_sd=None)
    by_k = {x.k: x for x in r.members}
    for side, ks in ((r.upper, r.upper_k), (r.lower, r.lower_k)):
        g = [by_k[k] for k in ks]
        assert abs(side.mean_return - sum(x.S * x.H for x in g) / sum(x.S for x in g)) <= 1e-9


# 11 --------------------------------------------------------------------

@pytest.mark.criterion(11, "finance planted spread within 1% and byte-identical reports")
def test_c11_planted_spread(record_property):
    spreads = [run_pipeline(planted_prices(seed=s), 0.01, samples=1000, seed=s).spread
               for s in range(10)]
    mean = float(np.mean(spreads))
    target = planted_spread()
    record_property("measured", f"spread {mean:.4f} vs plant {target:.4f}")
    assert within(mean, target, 0.01)


@pytest.mark.criterion(11, "finance planted spread within 1% and byte-identical reports")
def test_c11_byte_identical(tmp_path, capsys):
    P = planted_prices(seed=3)
    lines = ["day," + ",".join(P.ticker_labels)]
    lines += [d + "," + ",".join(repr(float(x)) for x in row) for d, row in zip(P.day_labels, P.prices)]
    csv_path = tmp_path / "prices.csv"
    csv_path.write_text("\n".join(lines) + "\n")
    outs = []
    for threads in ("1", "4"):
        for fmt in ("json", "csv"):
            out = tmp_path / f"r{threads}.{fmt}"
            argv = ["finance", "--prices", str(csv_path), "--threshold", "0.01", "--samples", "1000",
                    "--seed", "5", "--format", fmt, "--threads", threads, "--out", str(out)]
            assert run(argv) == 0
            outs.append(out.read_bytes().replace(str(out).encode(), b"OUT"))
    assert outs[0] == outs[2] and outs[1] == outs[3]
    assert json.loads(outs[0])["result"]["samples"] == 1000


# 12 --------------------------------------------------------------------

@pytest.mark.criterion(12, "Welch test matches reference table (p to 1e-6)")
def test_c12_welch_reference(record_property):
    cases = json.loads((DATA / "welch_reference.json").read_text())
    worst = max(abs(welch_test(c["a"], c["b"]).p_two_sided - c["p"]) for c in cases)
    record_property("measured", f"{len(cases)} pairs, max |dp| {worst:.1e}")
    assert len(cases) == 12 and worst <= 1e-6


# 13 --------------------------------------------------------------------

@pytest.mark.criterion(13, "8-bit enumeration + scanner run under 2 s")
def test_c13_performance(record_property):
    data = keystream(1000 * 128)
    t0 = time.perf_counter()
    enumerate_strings(8)
    scan_bytes(data, 1024)
    scan_bytes(bytes(len(data)), 1024)
    dt = time.perf_counter() - t0
    record_property("measured", f"{dt:.3f}s")
    assert dt < 2.0


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
