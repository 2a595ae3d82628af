from __future__ import annotations

import random

import pytest
from conftest import HOPF
from hypothesis import given, settings
from hypothesis import strategies as st

from knotq.diagrams.pd import parse_pd, perturb
from knotq.diagrams.signature import goeritz_matrix, matrix_signature, signature
from knotq.diagrams.skein import q_polynomial
from knotq.diagrams.unknotting import unknotting_bound_from_bridge
from knotq.laurent import ONE


def test_matrix_signature_small_cases():
    assert matrix_signature([]) == 0
    assert matrix_signature([[3]]) == 1
    assert matrix_signature([[0, 1], [1, 0]]) == 0
    assert matrix_signature([[-2, 1], [1, -2]]) == -2
    assert matrix_signature([[0, 0], [0, 0]]) == 0
    assert matrix_signature([[1, 2, 0], [2, 1, 0], [0, 0, -5]]) == -1


def test_knotinfo_signatures(records, gold):
    for rec in records:
        assert signature(rec.diagram()) == gold[rec.name]["signature"], rec.name


def test_goeritz_determinant_matches(records, gold):
    from fractions import Fraction

    for rec in records:
        if not rec.crossing_number:
            continue
        g, _ = goeritz_matrix(rec.diagram())
        m = [[Fraction(x) for x in row] for row in g]
        det = Fraction(1)
        n = len(m)
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            assert piv is not None
            m[c], m[piv] = m[piv], m[c]
            det *= m[c][c] if piv == c else -m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        assert abs(det) == gold[rec.name]["determinant"], rec.name


def test_mirror_negates(records):
    for rec in records:
        d = rec.diagram()
        assert signature(d.mirror()) == -signature(d)


def test_even_and_bounded_by_unknotting(records):
    for rec in records:
        s = signature(rec.diagram())
        assert s % 2 == 0
        if rec.unknotting_number is not None:
            assert abs(s) <= 2 * rec.unknotting_number


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_invariant_under_perturbation(seed):
    rng = random.Random(seed)
    d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")
    assert signature(perturb(d, rng, 4)) == -2


def test_links_rejected():
    with pytest.raises(ValueError, match="knots only"):
        signature(parse_pd(HOPF))


def test_unknot():
    assert signature(parse_pd("O")) == 0


def test_unknotting_certificates(records):
    for rec in records:
        d = rec.diagram()
        ub = unknotting_bound_from_bridge(d)
        assert ub.bound == (d.crossing_number - ub.bridge_length) // 2
        assert len(ub.switches) <= ub.bound
        assert q_polynomial(d.switch(ub.switches)).poly == ONE, rec.name
        if rec.unknotting_number is not None:
            assert rec.unknotting_number <= ub.bound


def test_unknotting_perko(records):
    perko = next(r for r in records if r.name == "10_161").diagram()
    ub = unknotting_bound_from_bridge(perko)
    # this diagram's longest bridge has length 2, so the bound is 4 >= u = 3
    assert ub.bridge_length == 2
    assert ub.bound == 4
    assert len(ub.switches) == 4
