"""The slow reference implementations agree with the package on small inputs."""

from __future__ import annotations

import numpy as np
from conftest import FIGURE_EIGHT, HOPF, TREFOIL
from oracles import (
    MU,
    OracleReport,
    braid_form,
    curve_region_count,
    distance_exhaustive,
    q_naive,
    seifert_matrix,
    seifert_signature,
)

from knotq.curves import OpenGaussCode, distance, enumerate_curves, realize
from knotq.diagrams.pd import LinkDiagram, parse_pd
from knotq.diagrams.skein import q_polynomial
from knotq.laurent import parse


def test_q_naive_examples():
    assert q_naive(parse_pd("O")) == 1
    assert q_naive(parse_pd("O O")) == MU
    assert q_naive(parse_pd(TREFOIL)) == parse("2z^2+2z-3")
    for seed in range(5):
        assert q_naive(parse_pd(HOPF), seed) == q_polynomial(parse_pd(HOPF)).poly


def test_q_naive_random_choices_agree():
    d = parse_pd(FIGURE_EIGHT)
    values = {str(q_naive(d, seed)) for seed in range(10)}
    assert values == {"2z^3+4z^2-2z-3"}


def test_seifert_examples():
    assert seifert_signature(parse_pd("O")) == 0
    assert abs(seifert_signature(parse_pd(TREFOIL))) == 2
    assert seifert_signature(parse_pd(FIGURE_EIGHT)) == 0


def test_seifert_matrix_shape_and_form(records):
    for rec in records:
        if not rec.crossing_number:
            continue
        v = seifert_matrix(rec.diagram())
        assert v.shape[0] % 2 == 0
        # V - V^T is the unimodular intersection form of the surface
        assert round(abs(np.linalg.det(v - v.T))) == 1


def test_braid_form_keeps_the_knot(records):
    for rec in records:
        if 4 < rec.crossing_number <= 7:
            d = rec.diagram()
            b = LinkDiagram(tuple(braid_form(d.crossings)))
            assert q_polynomial(b).poly == q_polynomial(d).poly


def test_distance_exhaustive_examples():
    assert distance_exhaustive(realize(OpenGaussCode(()))) == 0
    assert distance_exhaustive(realize(OpenGaussCode((1, 1)))) == 0
    assert distance_exhaustive(realize(OpenGaussCode((1, 2, 1, 2)))) == 1


def test_distance_oracle_small():
    for n in range(4):
        for m in enumerate_curves(n):
            assert distance_exhaustive(m) == distance(m)
            assert curve_region_count(m) == n + 1


def test_report():
    rep = OracleReport()
    rep.record("a", 1, 1)
    assert rep.ok
    rep.record("b", 1, 2)
    assert not rep.ok and rep.cases == 2
    assert rep.mismatches == [("b", 1, 2)]
