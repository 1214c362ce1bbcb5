"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""

import itertools
import random
import time

import pytest

import oracles
from conftest import random_curve, random_degree
from nodalbn import (
    Subcurve,
    alternating_multidegree,
    circular_component_count,
    circular_curve,
    circular_semistable_multidegrees,
    complement,
    component_dimension,
    correspondence,
    edge_cut,
    enumerate_components,
    is_semistable,
    is_semistable_g1,
    is_stable,
    n_components,
    normalize,
    solve_twister,
    subcurve_genus,
    total_genus,
    twister_multidegree,
    two_component_classification,
    two_component_curve,
)
from nodalbn.brill_noether import _components
from nodalbn.twister import indicator

RESULTS: list[str] = []


@pytest.fixture
def record(request):
    name = request.node.name

    def _record(ok: bool, detail: str):
        RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        return ok

    return _record


CIRCULAR_GENERA = [g for n in (3, 4, 5, 6) for g in itertools.product((1, 2), repeat=n)]
TWO_COMPONENT = [
    (g1, g2, k)
    for g1, g2, k in itertools.product(range(4), range(4), range(1, 4))
    if g1 + g2 + k - 1 >= 2
]
CASE_COUNTS = {"a": 0, "b": 1, "c": 1, "d": 2}


def _random_family(seed=2024, n=1000):
    rng = random.Random(seed)
    return [random_curve(rng, max_gamma=7, max_mult=3, max_genus=3, min_genus_total=2) for _ in range(n)]


def instances_1_to_4():
    for ell in (2, 3, 4):
        genera = [1] * (2 * ell)
        yield circular_curve(genera), alternating_multidegree(genera)
    for genera in CIRCULAR_GENERA:
        curve = circular_curve(genera)
        for d in circular_semistable_multidegrees(genera):
            yield curve, d
    for g1, g2, k in TWO_COMPONENT:
        rep = two_component_classification(g1, g2, k)
        curve = two_component_curve(g1, g2, k)
        yield curve, rep.d
        yield curve, rep.e


def test_ac01_alternating_circular_count(record):
    failures = []
    for ell in (2, 3, 4):
        genera = [1] * (2 * ell)
        curve = circular_curve(genera)
        d = alternating_multidegree(genera)
        _components.cache_clear()
        start = time.perf_counter()
        n = len(enumerate_components(curve, d))
        elapsed = time.perf_counter() - start
        if n != 1 + ell**2 or elapsed >= 1.0:
            failures.append((2 * ell, n, elapsed))
    record(not failures, f"1 + l^2 components for gamma=4,6,8 (5, 10, 17), each < 1 s; failures={failures}")
    assert not failures


def test_ac02_closed_form_count_agrees(record):
    start = time.perf_counter()
    checked, mismatches = 0, []
    for genera in CIRCULAR_GENERA:
        curve = circular_curve(genera)
        for d in circular_semistable_multidegrees(genera):
            if is_stable(curve, d):
                continue
            checked += 1
            formula = circular_component_count(genera, d)
            enumerated = len(enumerate_components(curve, d))
            if formula != enumerated:
                mismatches.append((genera, d, formula, enumerated))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 30 and checked > 0
    record(ok, f"{checked} strictly semistable instances, {len(mismatches)} mismatches, {elapsed:.1f} s (< 30 s)")
    assert ok


def test_ac03_semistable_pattern_set(record):
    start = time.perf_counter()
    bad = []
    for genera in CIRCULAR_GENERA:
        curve = circular_curve(genera)
        g = total_genus(curve)
        thresholds = oracles.g1_thresholds(curve)
        brute = {
            d
            for d in itertools.product(*[range(x - 2, x + 3) for x in genera])
            if sum(d) == g - 1 and oracles.semistable_g1_fast(thresholds, d)
        }
        generated = circular_semistable_multidegrees(genera)
        if set(generated) != brute or len(generated) != len(brute):
            bad.append(genera)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record(ok, f"{len(CIRCULAR_GENERA)} genera vectors, {len(bad)} set mismatches, {elapsed:.1f} s (< 30 s)")
    assert ok


def test_ac04_two_component_case_table(record):
    start = time.perf_counter()
    bad = []
    for g1, g2, k in TWO_COMPONENT:
        curve = two_component_curve(g1, g2, k)
        rep = two_component_classification(g1, g2, k)
        n_d = len(enumerate_components(curve, rep.d))
        n_e = len(enumerate_components(curve, rep.e))
        want = CASE_COUNTS[rep.case]
        if not (n_d == n_e == want == rep.count_d == rep.count_e):
            bad.append((g1, g2, k, rep.case, n_d, n_e))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5
    record(ok, f"{len(TWO_COMPONENT)} curves, {len(bad)} mismatches, {elapsed:.2f} s (< 5 s)")
    assert ok


def test_ac05_canonical_vs_degree_g_minus_1(record):
    rng = random.Random(5)
    samples = disagreements = 0
    while samples < 1000:
        curve = random_curve(rng, max_gamma=7, max_mult=3, max_genus=3, min_genus_total=2)
        g = total_genus(curve)
        d = random_degree(rng, curve, g - 1, low=-2, high=max(curve.genera) + 2)
        if d is None:
            continue
        samples += 1
        if is_semistable(curve, d) != is_semistable_g1(curve, d):
            disagreements += 1
    ok = samples >= 1000 and disagreements == 0
    record(ok, f"{samples} random samples, {disagreements} disagreements")
    assert ok


def test_ac06_genus_additivity(record):
    checked = failures = 0
    for curve in _random_family():
        g = total_genus(curve)
        for mask in range(1, curve.full_mask):
            z = Subcurve(mask)
            zc = complement(curve, z)
            rhs = (
                subcurve_genus(curve, z) + subcurve_genus(curve, zc) + edge_cut(curve, z)
                + 1 - n_components(curve, z) - n_components(curve, zc)
            )
            checked += 1
            failures += rhs != g
    ok = failures == 0 and checked > 0
    record(ok, f"{checked} proper subcurves on 1000 curves, {failures} failures")
    assert ok


def test_ac07_twisted_multidegree_semistable(record):
    labels = violations = 0
    for curve, d in instances_1_to_4():
        g = total_genus(curve)
        for lab in enumerate_components(curve, d):
            labels += 1
            minus_rest = [-x for x in indicator(curve, complement(curve, lab.z))]
            e = tuple(a + b for a, b in zip(d, twister_multidegree(curve, minus_rest)))
            if sum(e) != g - 1 or not is_semistable_g1(curve, e):
                violations += 1
    ok = violations == 0 and labels > 0
    record(ok, f"{labels} labels, {violations} violations")
    assert ok


def _positive_genus_curves():
    for g1, g2, k in TWO_COMPONENT:
        if g1 >= 1 and g2 >= 1:
            curve = two_component_curve(g1, g2, k)
            g = total_genus(curve)
            ds = [(a, g - 1 - a) for a in range(g1 - 1, g1 + k)]
            yield curve, [d for d in ds if is_semistable_g1(curve, d)]
    for genera in CIRCULAR_GENERA:
        yield circular_curve(genera), circular_semistable_multidegrees(genera)


def test_ac08_twister_correspondence(record):
    pairs_checked = failures = 0
    bases = {}
    for curve, ds in _positive_genus_curves():
        for d, e in itertools.product(ds, ds):
            if solve_twister(curve, [b - a for a, b in zip(d, e)]) is None:
                continue
            pairs_checked += 1
            src = enumerate_components(curve, d)
            tgt = enumerate_components(curve, e)
            pairs = correspondence(curve, d, e)
            complete = (
                pairs is not None
                and len(src) == len(tgt) == len(pairs)
                and {p.source.z for p in pairs} == {lab.z for lab in src}
                and {p.target.z for p in pairs} == {lab.z for lab in tgt}
            )
            failures += not complete
            for p in pairs or ():
                bases[p.basis] = bases.get(p.basis, 0) + 1
    ok = failures == 0 and pairs_checked > 0
    record(ok, f"{pairs_checked} twister-related pairs, {failures} failures; pairing bases {bases}")
    assert ok


def test_ac09_dimension_bookkeeping(record):
    labels = violations = 0
    for curve, d in instances_1_to_4():
        g = total_genus(curve)
        for lab in enumerate_components(curve, d):
            labels += 1
            violations += component_dimension(curve, lab) != g - 1
    ok = violations == 0 and labels > 0
    record(ok, f"{labels} labels, {violations} violations")
    assert ok


def test_ac10_twister_round_trip(record):
    rng = random.Random(10)
    trials = failures = 0
    for curve in _random_family(seed=77):
        c = [rng.randint(-5, 5) for _ in range(curve.gamma)]
        trials += 1
        failures += solve_twister(curve, twister_multidegree(curve, c)) != normalize(c)
    rejected = solve_twister(two_component_curve(0, 0, 2), (1, -1)) is None
    ok = trials >= 1000 and failures == 0 and rejected
    record(ok, f"{trials} round trips, {failures} failures; (1,-1) on k=2 rejected: {rejected}")
    assert ok
