"""Acceptance suite: one test per criterion, each printing a pass/fail line
with its runtime against the stated budget (run with -s to watch live).

Every tolerance is pinned here; nothing is deferred to later calibration.
"""

import io
import json
import subprocess
import sys
import time
import xml.etree.ElementTree as ET
from contextlib import contextmanager

import numpy as np

from chmean import (
    FiniteDistribution,
    circle_through,
    harmonic_mean,
    invert_circline,
    invert_region,
    lognormal_experiment,
    mean_inverse,
    region_contains,
    two_point_mean,
)
from chmean.estimates import (
    suite_classical,
    suite_disk,
    suite_inner,
    suite_modulus,
    suite_proof_i,
)
from chmean.geometry import Disk
from chmean.montecarlo import ComplexNormalParams
from chmean.sweeps import read_csv
from oracles import oracle_invert_disk, random_circline

SEED = 20250811


@contextmanager
def criterion(num: int, desc: str, budget: float):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\n[criterion {num}] FAIL: {desc}")
        raise
    dt = time.perf_counter() - t0
    verdict = "PASS" if dt <= budget else "FAIL (over time budget)"
    print(f"\n[criterion {num}] {verdict}: {desc} [{dt:.2f}s / {budget:g}s]")
    assert dt <= budget, f"runtime {dt:.2f}s exceeded the {budget:g}s budget"


def cli(*args):
    return subprocess.run([sys.executable, "-m", "chmean", *args],
                          capture_output=True, text=True)


def test_criterion_1_example_one():
    with criterion(1, "two atoms 1+i, 1-i: H(1/2) = 2; 11-step sweep on |z-1| = 1",
                   budget=1.0):
        h = harmonic_mean(FiniteDistribution(((1 + 1j, 0.5), (1 - 1j, 0.5))))
        assert abs(h - 2) <= 1e-14
        for k in range(11):
            theta = k / 10
            hk = harmonic_mean(FiniteDistribution(((1 + 1j, 1 - theta), (1 - 1j, theta))))
            assert abs(abs(hk - 1) - 1.0) <= 1e-12  # on the circle |z-1| = 1


def test_criterion_2_example_two():
    with criterion(2, "atoms 8, 1+i: H(1/5) = 4+2i; sweep on |z-(4-3i)| = 5; "
                      "Im h maximal at theta = 0.2", budget=1.0):
        h = harmonic_mean(FiniteDistribution(((8, 0.8), (1 + 1j, 0.2))))
        assert abs(h - (4 + 2j)) <= 1e-13
        for k in range(11):
            theta = k / 10
            hk = harmonic_mean(FiniteDistribution(((8, 1 - theta), (1 + 1j, theta))))
            assert abs(abs(hk - (4 - 3j)) - 5.0) <= 1e-12
        thetas = np.arange(0.0, 1.0 + 1e-12, 1e-4)
        c1, c2 = 8 + 0j, 1 + 1j
        values = (c1 * c2) / (c1 * thetas + c2 * (1.0 - thetas))
        peak = float(thetas[int(np.argmax(values.imag))])
        assert abs(peak - 0.2) <= 1e-4 + 1e-12


def test_criterion_3_modulus_suite():
    with criterion(3, "1e4 random distributions: |H[Z]| >= H[|Z|] - 1e-10; "
                      "equality cases |slack| <= 1e-10", budget=5.0):
        result = suite_modulus(10_000, seed=SEED, tol=1e-10)
        assert result.ok, result.failures[:1]
        assert result.worst_slack >= -1e-10
        assert result.passed == 11_000  # 1e4 random + 1e3 equality cases


def test_criterion_4_inner_product_suite():
    with criterion(4, "same population: c.H[Z] >= H[c.Z] - 1e-10 for c = 1 and "
                      "1e3 random unit c; I >= -1e-10, forms agree to 1e-12",
                   budget=5.0):
        result = suite_inner(10_000, seed=SEED, tol=1e-10)
        assert result.ok, result.failures[:1]
        assert result.refused == 0  # every random c carried a valid certificate
        assert result.passed == 12_000  # 1e4 for c=1, 1e3 random c, 1e3 equality
        proof = suite_proof_i(10_000, seed=SEED, tol=1e-10)
        assert proof.ok, proof.failures[:1]
        assert proof.worst_slack >= -1e-10


def test_criterion_5_disk_bound_suite():
    with criterion(5, "1e4 disks (r <= 0.95|c|): H[Z] in D and E[1/Z] in the "
                      "inverted region; 1e3 boundary disks r = |c|", budget=10.0):
        # check_disk_bound raises if E[1/Z] escapes invert_region(D), so a
        # clean run certifies the proof path on every case
        result = suite_disk(10_000, seed=SEED, tol=1e-10)
        assert result.ok, result.failures[:1]
        assert result.refused == 0
        assert result.passed == 11_000  # 1e4 interior + 1e3 boundary cases


def test_criterion_6_geometry_oracle():
    with criterion(6, "invert_region matches the 64-sample boundary oracle to "
                      "1e-9 on 1e3 disks; inversion round-trip bit-exact; "
                      "worked circumcircles to 1e-12", budget=2.0):
        rng = np.random.default_rng(SEED)
        fitted = 0
        while fitted < 1000:
            c = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
            if abs(c) < 0.3:
                continue
            disk = Disk(c, float(rng.uniform(0.05, 0.95)) * abs(c))
            img = invert_region(disk)
            center, radius = oracle_invert_disk(disk, samples=64)
            assert abs(img.center - center) <= 1e-9 * max(1.0, abs(center))
            assert abs(img.radius - radius) <= 1e-9 * max(1.0, radius)
            fitted += 1
        for _ in range(1000):
            g = random_circline(rng)
            gg = invert_circline(invert_circline(g))
            assert (gg.a, gg.b, gg.c) == (g.a, g.b, g.c)  # bitwise round trip
        g1 = circle_through(1 + 1j, 1 - 1j, 0j)
        assert abs(g1.center - 1) <= 1e-12 and abs(g1.radius - 1) <= 1e-12
        g2 = circle_through(8 + 0j, 1 + 1j, 0j)
        assert abs(g2.center - (4 - 3j)) <= 1e-12 and abs(g2.radius - 5) <= 1e-12


def test_criterion_7_lognormal_identity():
    with criterion(7, "lognormal: E[exp Z] and H[exp Z] within 10*se of e^mu "
                      "and of each other, n = 1e6", budget=30.0):
        for mu, sigma in [(0j, 0.5), (1 + (np.pi / 4) * 1j, 0.25)]:
            res = lognormal_experiment(ComplexNormalParams(mu, sigma), 1_000_000,
                                       seed=SEED)
            budget10 = 10 * res.se_estimate
            assert res.err_arith <= budget10
            assert res.err_harm <= budget10
            assert abs(res.arith - res.harm) <= budget10


def test_criterion_8_classical_suite():
    with criterion(8, "1e4 positive distributions: inf <= H <= sup and "
                      "H <= E within 1e-12; Jensen equality iff constant", budget=2.0):
        result = suite_classical(10_000, seed=SEED, tol=1e-12)
        assert result.ok, result.failures[:1]
        # equality iff constant: strict side on non-constant draws
        rng = np.random.default_rng(SEED + 1)
        from chmean import RealDistribution, check_classical

        for _ in range(100):
            xs = rng.uniform(0.1, 50, 6)
            w = rng.uniform(0.1, 1, 6)
            w /= w.sum()
            _, jensen = check_classical(RealDistribution(tuple(zip(xs.tolist(), w))),
                                        tol=1e-12)
            assert jensen.slack > 1e-12  # non-constant: strictly below E[X]
            x0 = float(xs[0])
            _, jensen = check_classical(RealDistribution(((x0, 0.3), (x0, 0.7))),
                                        tol=1e-12)
            assert abs(jensen.slack) <= 1e-12  # constant: equality


def test_criterion_9_cli_contract(tmp_path):
    with criterion(9, "exit codes {0,1,2,3}; CSV round-trip at 1e-12; "
                      "degenerate two-point input reports DegenerateMean (exit 2)",
                   budget=30.0):
        # exit 0: Example 1 file
        ok_file = tmp_path / "ex1.json"
        ok_file.write_text(json.dumps(
            {"atoms": [{"re": 1, "im": 1, "w": 0.5}, {"re": 1, "im": -1, "w": 0.5}]}))
        proc = cli("hmean", str(ok_file))
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["harmonic_mean"] == {"re": 2.0, "im": 0.0}

        # exit 1: invariant violation (atom at 0), diagnostic names the atom
        bad_file = tmp_path / "bad.json"
        bad_file.write_text(json.dumps(
            {"atoms": [{"re": 0, "im": 0, "w": 1.0}]}))
        proc = cli("hmean", str(bad_file))
        assert proc.returncode == 1 and "atom 0" in proc.stderr

        # exit 2: degenerate two-point input (-1, 2) at the degenerate weight
        # (weight 1/3 on -1, i.e. theta = P(Z=2) = 2/3: E[1/Z] = 0 exactly)
        deg_file = tmp_path / "deg.json"
        deg_file.write_text(json.dumps(
            {"atoms": [{"re": -1, "im": 0, "w": 1 / 3}, {"re": 2, "im": 0, "w": 2 / 3}]}))
        proc = cli("hmean", str(deg_file))
        assert proc.returncode == 2
        assert json.loads(proc.stdout)["harmonic_mean"] is None

        # ... and the sweep hits the same weight on a 4-step grid
        sweep_csv = tmp_path / "deg.csv"
        proc = cli("sweep2", "-1", "2", "--steps", "4", "--out", str(sweep_csv))
        assert proc.returncode == 2
        rows = read_csv(io.StringIO(sweep_csv.read_text()))
        assert rows[2].degenerate and rows[2].h is None

        # exit 3: verification failure (zero tolerance trips equality noise)
        proc = cli("verify", "modulus", "--cases", "500", "--seed", "110", "--tol", "0")
        assert proc.returncode == 3

        # CSV round-trip at 1e-12
        out = tmp_path / "sweep.csv"
        proc = cli("sweep2", "8", "1+1i", "--steps", "11", "--out", str(out))
        assert proc.returncode == 0
        from chmean import two_point_locus

        locus = two_point_locus(8 + 0j, 1 + 1j)
        for row in read_csv(io.StringIO(out.read_text())):
            assert abs(two_point_mean(8 + 0j, 1 + 1j, row.theta) - row.h) == 0.0
            assert abs(locus.distance(row.h) - row.locus_distance) <= 1e-12

        # SVG is structurally sound (steps markers + one locus path)
        svg = tmp_path / "sweep.svg"
        proc = cli("sweep2", "8", "1+1i", "--steps", "11", "--format", "svg",
                   "--out", str(svg))
        assert proc.returncode == 0
        root = ET.fromstring(svg.read_text())
        ns = "{http://www.w3.org/2000/svg}"
        assert len([e for e in root.iter(f"{ns}circle") if e.get("class") == "pt"]) == 11
        assert len([e for e in root.iter(f"{ns}path") if e.get("class") == "locus"]) == 1

        # verify exits 0 across all suites at the default tolerance
        proc = cli("verify", "all", "--cases", "100", "--seed", "42")
        assert proc.returncode == 0
