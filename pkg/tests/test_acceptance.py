"""Acceptance criteria 1-12, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line; the lines are
repeated in the pytest terminal summary. Run this file directly to see just
these checks.
"""

from __future__ import annotations

import random
import time
from functools import lru_cache

import pytest
from conftest import ACCEPTANCE
from oracles import OracleReport, curve_region_count, distance_exhaustive, q_naive, seifert_signature

from knotq.curves import (
    NotComposable,
    OpenGaussCode,
    connected_sum,
    connected_sum_map,
    curve2_chain,
    distance,
    enumerate_codes,
    enumerate_curves,
    realizations,
    realize,
    reverse_map,
    verify_lemma_bounds,
)
from knotq.diagrams.pd import bridge_length, parse_pd, perturb
from knotq.diagrams.signature import signature
from knotq.diagrams.skein import SkeinEngine, q_at_minus_one
from knotq.maximality import Outcome, scan, signature_test, unknotting_test
from knotq.tables import load_fixtures

PERTURBED_PER_KNOT = 20


def report(n: int, ok: bool, text: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {text}"
    ACCEPTANCE[n] = line
    print(line)
    assert ok, line


@lru_cache(maxsize=None)
def fixtures():
    return tuple(load_fixtures())


@lru_cache(maxsize=None)
def engine():
    return SkeinEngine()


@lru_cache(maxsize=None)
def perturbed():
    """``(name, diagram, Q)`` for 20 seeded perturbations of every fixture."""
    out = []
    for k, rec in enumerate(fixtures()):
        rng = random.Random(1000 + k)
        base = rec.diagram()
        for _ in range(PERTURBED_PER_KNOT):
            d = perturb(base, rng, rng.randint(1, 4))
            if rng.random() < 0.5:
                d = d.mirror()
            out.append((rec.name, d, engine().evaluate(d).poly))
    return tuple(out)


def test_criterion_1_perko_top_degree():
    perko = next(r for r in fixtures() if r.name == "10_161")
    t0 = time.perf_counter()
    q = SkeinEngine().evaluate(perko.diagram()).poly
    elapsed = time.perf_counter() - t0
    ok = q.max_degree() == 6 and elapsed < 60
    report(1, ok, f"maxdeg Q(10_161) = {q.max_degree()} (want 6) in {elapsed:.2f}s (< 60s)")


def test_criterion_2_perko_verdict():
    verdicts = {v.knot: v for v in scan(fixtures())}
    perko = verdicts["10_161"]
    cb = next(t for t in perko.tests if t.test == "crossing_bound")
    ut = unknotting_test(3, 6)
    ok = (
        perko.overall is Outcome.NON_Q_MAXIMAL
        and cb.fired
        and cb.detail.startswith("10 > 6 + max(3,3)")
        and ut.outcome is Outcome.INCONCLUSIVE
    )
    report(2, ok, f"10_161 {perko.overall.value} via crossing_bound [{cb.detail}]; "
                  f"unknotting(u=3, qmax=6) {ut.outcome.value} [{ut.detail}]")


def test_criterion_3_alternating_equality():
    t0 = time.perf_counter()
    chosen = [r for r in fixtures()
              if r.prime and r.alternating and 0 < r.crossing_number <= 8]
    bad = []
    for r in chosen:
        top = engine().evaluate(r.diagram()).poly.max_degree()
        if top != r.crossing_number - 1:
            bad.append((r.name, top))
    elapsed = time.perf_counter() - t0
    ok = len(chosen) >= 10 and not bad and elapsed < 300
    report(3, ok, f"{len(chosen)} prime alternating knots, maxdeg Q = c-1 on all "
                  f"(mismatches {bad or 'none'}) in {elapsed:.1f}s (< 300s)")


def test_criterion_4_kidwell():
    violations = []
    cases = 0
    for rec in fixtures():
        d = rec.diagram()
        q = engine().evaluate(d).poly
        cases += 1
        if q.max_degree() > d.crossing_number - bridge_length(d):
            violations.append(rec.name)
    for name, d, q in perturbed():
        cases += 1
        if q.max_degree() > d.crossing_number - bridge_length(d):
            violations.append(name)
    report(4, not violations, f"maxdeg Q <= c(D) - d(D) on {cases} diagrams "
                              f"({len(fixtures())} fixtures x {PERTURBED_PER_KNOT} perturbations "
                              f"each), violations {len(violations)}")


def test_criterion_5_q_at_minus_one():
    bad = []
    for rec in fixtures():
        value, m = q_at_minus_one(engine().evaluate(rec.diagram()).poly)
        if m is None or m < 0 or value != (-3) ** m:
            bad.append(rec.name)
    m_unknot = q_at_minus_one(engine().evaluate(parse_pd("O")).poly).exponent
    m_unlink = q_at_minus_one(engine().evaluate(parse_pd("O O")).poly).exponent
    ok = not bad and m_unknot == 0 and m_unlink == 1
    report(5, ok, f"Q(-1) = (-3)^m on all {len(fixtures())} fixtures (violations {len(bad)}); "
                  f"unknot m={m_unknot}, 2-unlink m={m_unlink}")


def test_criterion_6_region_count():
    total = bad = 0
    for n in range(7):
        for w in enumerate_codes(n):
            for m in realizations(OpenGaussCode(w)):
                total += 1
                if len(m.faces) != n + 1:
                    bad += 1
    report(6, bad == 0 and total > 0,
           f"{total} realizations of all words with c <= 6 have c+1 regions ({bad} do not)")


def test_criterion_7_distance_bounds():
    t0 = time.perf_counter()
    rep = verify_lemma_bounds(6)
    elapsed = time.perf_counter() - t0
    ok = rep.ok and elapsed < 600
    maxd = [r.max_d_prime for r in rep.rows]
    report(7, ok, f"c <= 6: {sum(r.count for r in rep.rows)} classes, "
                  f"{len(rep.violations)} violations of d <= c, d <= max(2,c-2), d <= max(3,c-3); "
                  f"max prime d by c = {maxd}; {elapsed:.1f}s (< 600s)")


def test_criterion_8_curve2_chain():
    ds = [(m, curve2_chain(m).crossing_number, distance(curve2_chain(m))) for m in range(1, 6)]
    ok = all(d == m and c == 2 * m for m, c, d in ds)
    report(8, ok, "chain of m two-crossing curves: (m, c, d) = " + " ".join(map(str, ds)))


def test_criterion_9_additivity():
    pool = [m.code for n in range(5) for m in enumerate_curves(n)]
    rng = random.Random(9)
    done = rejected = bad = 0
    while done < 200:
        a, b = rng.choice(pool), rng.choice(pool)
        fa, fb = rng.random() < 0.5, rng.random() < 0.5
        try:
            code = connected_sum(a, b, fa, fb)
        except NotComposable:
            rejected += 1
            continue
        done += 1
        ma = realize(a) if fa else reverse_map(realize(a))
        mb = realize(b) if fb else reverse_map(realize(b))
        glued = connected_sum_map(ma, mb)
        want_d = distance(ma) + distance(mb)
        if (code.crossing_number != a.crossing_number + b.crossing_number
                or distance(glued) != want_d or distance(realize(code)) != want_d):
            bad += 1
    report(9, bad == 0, f"{done} composable sums of curves with c <= 4 "
                        f"({rejected} non-composable draws skipped), violations {bad}")


def test_criterion_10_oracles():
    q_rep, d_rep, s_rep = OracleReport(), OracleReport(), OracleReport()
    for rec in fixtures():
        if rec.crossing_number <= 7:
            d = rec.diagram()
            q_rep.record(rec.name, str(engine().evaluate(d).poly), str(q_naive(d, seed=7)))
    for n in range(6):
        for w in enumerate_codes(n):
            for m in realizations(OpenGaussCode(w)):
                d_rep.record(str(m), distance(m), distance_exhaustive(m))
                d_rep.record(f"regions {m}", n + 1, curve_region_count(m))
    for rec in fixtures():
        if rec.crossing_number <= 8:
            d = rec.diagram()
            s_rep.record(rec.name, signature(d), seifert_signature(d))
            s_rep.record(rec.name + " mirror", signature(d.mirror()), seifert_signature(d.mirror()))
    ok = q_rep.ok and d_rep.ok and s_rep.ok
    report(10, ok, f"q_naive {q_rep.cases} cases / {len(q_rep.mismatches)} mismatches; "
                   f"distance_exhaustive {d_rep.cases} / {len(d_rep.mismatches)}; "
                   f"seifert_signature {s_rep.cases} / {len(s_rep.mismatches)}")


def test_criterion_11_invariance():
    base = {rec.name: str(engine().evaluate(rec.diagram()).poly) for rec in fixtures()}
    bad = [name for name, _, q in perturbed() if str(q) != base[name]]
    report(11, not bad, f"{len(perturbed())} perturbed diagrams ({PERTURBED_PER_KNOT} per fixture) "
                        f"render the same Q as their fixture; differing {len(bad)}")


def test_criterion_12_signature_arithmetic():
    fires = signature_test(8, 7)
    trefoil = next(r for r in fixtures() if r.name == "3_1").diagram()
    sigma = signature(trefoil)
    qmax = engine().evaluate(trefoil).poly.max_degree()
    quiet = signature_test(sigma, qmax)
    ok = fires.outcome is Outcome.NON_Q_MAXIMAL and quiet.outcome is Outcome.INCONCLUSIVE
    report(12, ok, f"sigma=8, qmax=7: {fires.outcome.value} [{fires.detail}]; "
                   f"trefoil sigma={sigma}, qmax={qmax}: {quiet.outcome.value} [{quiet.detail}]")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
