"""Acceptance gate: every criterion at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  Criteria 1 and 2 share a single full boundary sweep.
"""

import math
import os
import time
from fractions import Fraction

import numpy as np
import pytest

from equisum.constructions import construct, construct_prop1, construct_prop2
from equisum.feasibility import (
    VerdictKind,
    certified_apex_inequality,
    certified_f_decreasing,
    certified_ratio_increasing,
    check_inequality,
    classify,
    d2_pair_bound_holds,
    derive_parameters,
    lemma_certificate,
)
from equisum.geometry import circumradius_sq, regular_simplex
from equisum.mixednorm import pointset_to_json, verify_equilateral
from equisum.sweep import emit_report_csv, emit_report_json, run_sweep

EXPECTED_FAILING = sorted(
    [(28, 40)]
    + [(29, b) for b in range(39, 45)]
    + [(30, b) for b in range(40, 48)]
)


def report_line(criterion: int, name: str, ok: bool, extra: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({extra})" if extra else ""
    print(f"ACCEPTANCE {criterion} [{name}]: {status}{suffix}")
    assert ok, f"criterion {criterion} ({name}) failed"


@pytest.fixture(scope="module")
def boundary_sweep():
    t0 = time.perf_counter()
    report = run_sweep(2, 30)
    return report, time.perf_counter() - t0


def test_criterion_1_boundary_table(boundary_sweep):
    report, elapsed = boundary_sweep
    ok = (
        report.failing_pairs == EXPECTED_FAILING
        and len(report.failing_pairs) == 15
        and report.conclusive
        and elapsed < 60.0
    )
    report_line(1, "boundary table a in [2,30]", ok, f"{len(report.records)} pairs, {elapsed:.1f}s")


def test_criterion_2_below_28_clean(boundary_sweep):
    report, _ = boundary_sweep
    small = [rec for rec in report.records if rec.a <= 27]
    ok = all(rec.verdict != "InequalityFails" for rec in small) and len(small) > 0
    report_line(2, "no failures for a <= 27", ok, f"{len(small)} pairs")


def test_criterion_3_lemma_certification():
    t0 = time.perf_counter()
    certs = all(lemma_certificate(a) for a in range(2, 41))
    holds = True
    for a in range(2, 31):
        base = a * a + a
        for b in range(base, base + 51):
            verdict = check_inequality(derive_parameters(a, b))
            holds = holds and verdict.kind is VerdictKind.INEQUALITY_HOLDS
    elapsed = time.perf_counter() - t0
    ok = certs and holds and elapsed < 60.0
    report_line(3, "lemma certificates + threshold region", ok, f"{elapsed:.1f}s")


def test_criterion_4_constructions_verify():
    ok = True
    checked = 0
    for a in range(1, 13):
        for b in range(a, 13):
            verdict = classify(a, b)
            if verdict.kind in (VerdictKind.INEQUALITY_FAILS, VerdictKind.INDETERMINATE):
                continue
            result = construct(a, b)
            rep = verify_equilateral(result.point_set, 1e-9)
            ok = ok and rep.passed and len(result.point_set) == a + b + 1
            checked += 1
    for a in range(2, 51):
        rep = verify_equilateral(construct_prop2(a).point_set, 1e-9)
        ok = ok and rep.passed and len(construct_prop2(a).point_set) == 2 * a + 1
    for b in range(1, 51):
        rep = verify_equilateral(construct_prop1(b).point_set, 1e-9)
        ok = ok and rep.passed and len(construct_prop1(b).point_set) == b + 2
    report_line(4, "constructions verified at 1e-9", ok, f"{checked} pairs + props")


def test_criterion_5_simplex_geometry():
    ok = True
    for m in range(1, 51):
        side = 1.0 if m % 2 else 0.73
        verts = regular_simplex(m, side, m - 1 if m > 1 else 0)
        d = float(circumradius_sq(m - 1)) ** 0.5
        for i in range(m):
            ok = ok and abs(np.linalg.norm(verts[i]) - side * d) <= 1e-12 * side
            for j in range(i + 1, m):
                ok = ok and abs(np.linalg.norm(verts[i] - verts[j]) - side) <= 1e-12 * side
        if verts.size:
            ok = ok and np.max(np.abs(verts.sum(axis=0))) <= 1e-12 * side
    report_line(5, "simplex postconditions m <= 50 at 1e-12", ok)


def test_criterion_6_proof_step_inequalities():
    t0 = time.perf_counter()
    apex = all(certified_apex_inequality(c) for c in range(2, 10**4 + 1))
    f_mono = all(certified_f_decreasing(n) for n in range(1, 101))
    ratio_mono = all(certified_ratio_increasing(c) for c in range(2, 101))
    d2_bound = all(d2_pair_bound_holds(a) for a in range(2, 101))
    ok = apex and f_mono and ratio_mono and d2_bound
    report_line(6, "proof-step inequalities certified", ok, f"{time.perf_counter() - t0:.1f}s")


def binary64_margin(a: int, b: int) -> float:
    """Independent plain-float evaluation of the feasibility inequality."""
    c = 1 + b // (a + 1)
    beta = b % (a + 1)
    alpha = a + 1 - beta

    def d2(m):
        return m / (2.0 * m + 2.0) if m >= 1 else 0.0

    def f(n):
        return 1.0 - math.sqrt(n / (n + 1.0))

    g = 1.0 - math.sqrt(0.5 * ((c - 1.0) / c + c / (c + 1.0)))
    return g * g - d2(alpha - 1) * f(c - 1) ** 2 - d2(beta - 1) * f(c) ** 2


def test_criterion_7_oracle_equivalence():
    t0 = time.perf_counter()
    ok = True
    pairs = 0
    for a in range(2, 31):
        for b in range(a + 1, a * a + a + 1):
            verdict = check_inequality(derive_parameters(a, b))
            ok = ok and verdict.kind is not VerdictKind.INDETERMINATE
            certified_holds = verdict.kind is VerdictKind.INEQUALITY_HOLDS
            ok = ok and certified_holds == (binary64_margin(a, b) >= 0.0)
            pairs += 1
    report_line(7, "certified == binary64 oracle", ok, f"{pairs} pairs, {time.perf_counter() - t0:.1f}s")


def test_criterion_8_determinism():
    jobs = min(4, os.cpu_count() or 1)

    def pipeline():
        artifacts = []
        ps = construct(5, 8).point_set
        artifacts.append(pointset_to_json(ps))
        rep = verify_equilateral(ps, 1e-9)
        artifacts.append(repr(rep))
        sweep = run_sweep(2, 10, jobs=jobs)
        artifacts.append(emit_report_json(sweep))
        artifacts.append(emit_report_csv(sweep))
        return artifacts

    first, second = pipeline(), pipeline()
    serial = emit_report_json(run_sweep(2, 10, jobs=1))
    ok = first == second and serial == first[2]
    report_line(8, "byte-identical artifacts across runs", ok, f"jobs={jobs}")
