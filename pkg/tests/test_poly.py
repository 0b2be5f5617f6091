from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lo_invariants.averaging import average_monomial
from lo_invariants.fock import Convention, FockState, convert, enumerate_occupations, random_state
from lo_invariants.lo_action import apply_phase
from lo_invariants.poly import (BatchEvaluator, Monomial, Polynomial, graded_span_dim,
                                norm_polynomial, parse_monomial, parse_polynomial, phase_weight)
from lo_invariants.scalars import GaussianRational as G

V20, V11, V02 = (2, 0), (1, 1), (0, 2)
BASIS = enumerate_occupations(2, 2)


def var(v, conj=False):
    return Polynomial({Monomial({} if conj else {v: 1}, {v: 1} if conj else {}): 1})


def test_phase_weight_examples():
    assert phase_weight(Monomial({V20: 1}, {V20: 1})) == (0, 0)
    assert phase_weight(Monomial({V11: 2}, {V20: 1, V02: 1})) == (0, 0)
    assert phase_weight(Monomial({V20: 1}, {V02: 1})) == (2, -2)


def test_evaluate_examples():
    hom = convert(FockState.basis_state((1, 1), Convention.KET), Convention.MONOMIAL)
    assert norm_polynomial(2, 2).evaluate(hom) == 1
    det = var(V11) ** 2 - 4 * var(V20) * var(V02)
    assert (det * det.conjugate() / 16).evaluate(hom) == F(1, 16)
    zero = FockState(2, 2, {})
    assert (norm_polynomial(2, 2) + Polynomial.constant(F(3, 7))).evaluate(zero) == F(3, 7)


def test_evaluate_rejects_ket_states():
    with pytest.raises(ValueError):
        norm_polynomial(2, 2).evaluate(FockState.basis_state((1, 1), Convention.KET))


def test_graded_span_dim_examples():
    n2 = norm_polynomial(2, 2)
    assert graded_span_dim([], (1, 1)) == 0
    assert graded_span_dim([n2], (2, 2)) == 1
    q = average_monomial(Monomial({V20: 2}, {V20: 2}), 2, 2)
    assert graded_span_dim([n2, q], (2, 2)) == 2
    assert graded_span_dim([n2, n2 * n2], (2, 2)) == 1


def _random_poly(rng, terms=4):
    out = {}
    for _ in range(terms):
        a = {BASIS[i]: int(rng.integers(0, 3)) for i in rng.integers(0, 3, size=2)}
        b = {BASIS[i]: int(rng.integers(0, 3)) for i in rng.integers(0, 3, size=2)}
        out[Monomial(a, b)] = G(F(int(rng.integers(-5, 6)), int(rng.integers(1, 5))),
                                F(int(rng.integers(-5, 6)), int(rng.integers(1, 5))))
    return Polynomial(out)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_ring_axioms(seed):
    rng = np.random.default_rng(seed)
    p, q, r = (_random_poly(rng) for _ in range(3))
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert (p - p) == Polynomial()
    assert (p * q).conjugate() == p.conjugate() * q.conjugate()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_evaluation_is_a_ring_homomorphism(seed):
    rng = np.random.default_rng(seed)
    p, q = _random_poly(rng), _random_poly(rng)
    s = random_state(2, 2, rng, exact=True)
    assert (p * q).evaluate(s) == p.evaluate(s) * q.evaluate(s)
    assert p.conjugate().evaluate(s) == p.evaluate(s).conjugate()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_text_round_trip(seed):
    p = _random_poly(np.random.default_rng(seed))
    assert parse_polynomial(p.to_text()) == p


def test_parse_examples():
    p = parse_polynomial("3/2*a[2,0]^2*abar[1,1] - (1/2+1/3i)*a[0,2]*abar[0,2]")
    assert p.terms[Monomial({V20: 2}, {V11: 1})] == F(3, 2)
    assert p.terms[Monomial({V02: 1}, {V02: 1})] == G(F(-1, 2), F(-1, 3))
    assert parse_monomial("a[1,1]^2*abar[2,0]*abar[0,2]") == Monomial({V11: 2}, {V20: 1, V02: 1})
    with pytest.raises(ValueError):
        parse_polynomial("3*b[1,1]")


def test_phase_invariant_polys_are_phase_invariant():
    rng = np.random.default_rng(4)
    poly = parse_polynomial("a[1,1]^2*abar[2,0]*abar[0,2] + 2*a[2,0]*abar[2,0] - a[1,1]*abar[1,1]")
    for _ in range(10):
        s = random_state(2, 2, rng)
        w = np.exp(2j * np.pi * rng.random(2))
        assert abs(poly.evaluate(apply_phase(w, s)) - poly.evaluate(s)) < 1e-10


def test_batch_evaluator_matches_scalar_evaluation():
    rng = np.random.default_rng(8)
    poly = _random_poly(rng, terms=6)
    states = [random_state(2, 2, rng) for _ in range(5)]
    batch = BatchEvaluator(poly, 2, 2)(np.array([s.as_array() for s in states]))
    assert np.allclose(batch, [complex(poly.evaluate(s)) for s in states])


def test_bidegree_components():
    p = parse_polynomial("a[2,0]*abar[2,0] + a[2,0]^2*abar[1,1]^2 + 5")
    assert p.bidegrees() == {(0, 0), (1, 1), (2, 2)}
    assert p.component((2, 2)) == parse_polynomial("a[2,0]^2*abar[1,1]^2")
