from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from lo_invariants.scalars import (GaussianRational as G, abs2, conj, exact_sqrt, format_scalar,
                                   make_scalar, parse_gaussian, parse_real)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)
gaussians = st.builds(G, rationals, rationals)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


@given(gaussians)
def test_matches_complex_arithmetic(a):
    z = complex(a)
    assert abs(complex(a * a) - z * z) < 1e-9 * (1 + abs(z) ** 2)
    assert abs2(a) == a.re ** 2 + a.im ** 2
    assert conj(conj(a)) == a


@given(gaussians)
def test_text_round_trip(a):
    assert parse_gaussian(format_scalar(a)) == a


def test_hash_matches_fraction_for_reals():
    assert hash(G(F(1, 3))) == hash(F(1, 3))
    assert G(F(1, 3)) == F(1, 3)


def test_exact_sqrt():
    assert exact_sqrt(F(9, 4)) == F(3, 2)
    with pytest.raises(ValueError):
        exact_sqrt(2)


def test_parse_real_forms():
    assert parse_real("3/4") == F(3, 4)
    assert parse_real("0.25") == F(1, 4)
    assert parse_real("1/4", exact=False) == 0.25
    with pytest.raises(ValueError):
        parse_real("abc")
    assert make_scalar("1/2", "-1/3") == G(F(1, 2), F(-1, 3))
    assert make_scalar("0.5", "1", exact=False) == 0.5 + 1j
