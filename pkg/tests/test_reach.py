import math
from fractions import Fraction as F

import numpy as np
import pytest

from lo_invariants.fock import Convention, FockState, norm_sq, random_state
from lo_invariants.lo_action import apply_unitary, random_haar_unitary
from lo_invariants.reach import Method, ReachVerdict, Status, decide_reachability

KET = Convention.KET
R2 = 1 / math.sqrt(2)


def _normalised(s):
    return s.scaled(1 / math.sqrt(float(norm_sq(s))))


def test_single_photon_examples():
    src = FockState(1, 2, {(1, 0): 1.0}, KET)
    dst = FockState(1, 2, {(1, 0): R2, (0, 1): 1j * R2}, KET)
    v = decide_reachability(src, dst)
    assert v.status == Status.REACHABLE and v.method == Method.NORM_N1
    v = decide_reachability(src, dst.scaled(0.5))
    assert v.status == Status.UNREACHABLE and v.witness.name == "norm"


def test_two_photon_example():
    src = FockState.basis_state((1, 1), KET)
    v = decide_reachability(src, FockState(2, 2, {(2, 0): R2}, KET))
    assert v.status == Status.UNREACHABLE
    dets = [w for w in (v.witness, *v.extra_witnesses) if w.name == "f2"]
    assert dets and dets[0].src_value == F(1, 16) and abs(dets[0].dst_value) < 1e-15
    hom = FockState(2, 2, {(2, 0): R2, (0, 2): -R2}, KET)
    assert decide_reachability(src, hom).status == Status.REACHABLE


def test_three_photon_constructed_pair():
    rng = np.random.default_rng(0)
    s = _normalised(random_state(3, 2, rng))
    t = apply_unitary(random_haar_unitary(2, rng), s)
    v = decide_reachability(s, t, D=3)
    assert v.status == Status.REACHABLE and v.unitary is not None


def test_three_photon_mismatch_has_lowest_degree_witness():
    rng = np.random.default_rng(1)
    s, t = _normalised(random_state(3, 2, rng)), _normalised(random_state(3, 2, rng))
    v = decide_reachability(s, t, D=3)
    assert v.status == Status.UNREACHABLE
    degrees = [w.polynomial.bidegree[0] for w in (v.witness, *v.extra_witnesses)]
    assert degrees == sorted(degrees) and degrees[0] == 2


@pytest.mark.parametrize("n,m", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_soundness(n, m):
    rng = np.random.default_rng(100 + 10 * n + m)
    for _ in range(100):
        s = _normalised(random_state(n, m, rng))
        t = apply_unitary(random_haar_unitary(m, rng), s)
        assert decide_reachability(s, t, D=3, restarts=3).status != Status.UNREACHABLE


def test_determinism():
    rng = np.random.default_rng(2)
    s, t = _normalised(random_state(3, 2, rng)), _normalised(random_state(3, 2, rng))
    assert decide_reachability(s, t, seed=4).report() == decide_reachability(s, t, seed=4).report()


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2)])
def test_precomposition_invariance(n, m):
    rng = np.random.default_rng(3)
    for _ in range(5):
        s = _normalised(random_state(n, m, rng))
        t = _normalised(random_state(n, m, rng)) if rng.random() < 0.5 else \
            apply_unitary(random_haar_unitary(m, rng), s)
        v = random_haar_unitary(m, rng)
        a = decide_reachability(s, t, restarts=20).status
        b = decide_reachability(apply_unitary(v, s), t, restarts=20).status
        assert a == b


def test_unreachable_requires_witness():
    with pytest.raises(ValueError):
        ReachVerdict(Status.UNREACHABLE, Method.NORM_N1, 1)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        decide_reachability(FockState.basis_state((1, 1), KET), FockState.basis_state((2, 1), KET))


def test_exact_states_compare_exactly():
    from lo_invariants.scalars import GaussianRational as G
    s = FockState(3, 2, {(3, 0): G(1)})
    t = FockState(3, 2, {(3, 0): G(1), (0, 3): G(F(1, 1000))})
    v = decide_reachability(s, t)
    assert v.status == Status.UNREACHABLE and v.witness.src_value == 6
