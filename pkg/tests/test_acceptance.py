"""Acceptance suite: one test per criterion, each records a PASS/FAIL line.

The lines are printed in the terminal summary (see conftest.py). A failing
criterion is reported as FAIL and the test fails; nothing is relaxed.
"""

import math
from fractions import Fraction as F
from itertools import combinations_with_replacement, permutations, product

import numpy as np

import conftest
from _oracles import haar_samples, mc_moment
from lo_invariants.averaging import average_monomial
from lo_invariants.combinat import count_partitions_max_part
from lo_invariants.fock import (Convention, FockState, enumerate_occupations, norm_sq,
                                random_state, state_to_tensor)
from lo_invariants.lo_action import (apply_unitary, induced_matrix,
                                     random_exact_unitary, random_haar_unitary, tensor_apply)
from lo_invariants.molien import (molien_closed_form, molien_truncated, phase_molien_truncated,
                                  phase_monomial_count, rational_series)
from lo_invariants.phase_basis import (GOLDEN_COUNTS, compare_golden, enumerate_balanced,
                                       hilbert_basis)
from lo_invariants.poly import BatchEvaluator, Monomial, norm_polynomial, parse_polynomial
from lo_invariants.reach import Status, decide_reachability
from lo_invariants.tensor_inv import (build_generating_set, canonical_patterns,
                                      expand_tensor_invariant)
from lo_invariants.two_photon import (char_poly_invariants, reachability_bruteforce_oracle,
                                      two_photon_reachable)
from lo_invariants.weingarten import IndexProfile, haar_integral


def record(k: int, ok: bool, detail: str):
    conftest.ACCEPTANCE_LINES.append(f"ACCEPTANCE {k}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def _unit(state):
    return state.scaled(1 / math.sqrt(float(norm_sq(state))))


def test_criterion_1_molien_closed_forms():
    problems = []
    for m in (2, 3, 4):
        if molien_truncated(1, m, 5).coeffs != (1,) * 6:
            problems.append(f"n=1 m={m}")
    expected = {2: (1, 1, 2, 2, 3), 3: (1, 1, 2, 3, 4)}
    for m, want in expected.items():
        got = molien_truncated(2, m, 4).coeffs
        closed = molien_closed_form(2, m, 4).coeffs
        parts = tuple(count_partitions_max_part(d, m) for d in range(5))
        if not got == closed == parts == want:
            problems.append(f"n=2 m={m}: {got} {closed} {parts}")
    record(1, not problems, "molien closed forms" + (f" mismatches {problems}" if problems else ""))


def test_criterion_2_phase_molien():
    got = phase_molien_truncated(2, 2, 4).coeffs
    closed = rational_series([1, 0, 0, 0, -1], [1, 1, 1, 2, 2], 4)
    counts = tuple(phase_monomial_count(2, 2, d) for d in range(5))
    ok = tuple(got) == tuple(closed) == counts
    record(2, ok, f"phase series {tuple(got)}, rational form {tuple(closed)}, direct count {counts}")


def test_criterion_3_golden_tables():
    problems = []
    for (n, m), count in sorted(GOLDEN_COUNTS.items()):
        basis = hilbert_basis(n, m)
        ok, missing, extra = compare_golden(basis)
        if not (ok and len(basis.generators) == count and basis.certified):
            problems.append(f"({n},{m}): {len(basis.generators)} found, missing {missing}, extra {extra}")
    counts = {k: v for k, v in sorted(GOLDEN_COUNTS.items())}
    record(3, not problems, f"hilbert basis counts {counts}" + (f" {problems}" if problems else ""))


def test_criterion_4_degree_four_average():
    v20, v11, v02 = (2, 0), (1, 1), (0, 2)
    bracket = parse_polynomial(
        "6*a[0,2]^2*abar[0,2]^2 + 6*a[2,0]^2*abar[2,0]^2 + a[1,1]^2*abar[1,1]^2"
        " + 6*a[0,2]*a[1,1]*abar[0,2]*abar[1,1] + 6*a[2,0]*a[1,1]*abar[2,0]*abar[1,1]"
        " + 4*a[0,2]*a[2,0]*abar[0,2]*abar[2,0] + 2*a[0,2]*a[2,0]*abar[1,1]^2"
        " + 2*a[1,1]^2*abar[0,2]*abar[2,0]")
    y = average_monomial(Monomial({v20: 2}, {v20: 2}), 2, 2)
    x = average_monomial(Monomial({v20: 1, v02: 1}, {v11: 2}), 2, 2)
    norm = norm_polynomial(2, 2)
    value_ok = y == bracket * F(8, 15)
    relation_ok = 3 * x == 3 * y - 2 * norm * norm
    # diagnostics: the values the engine actually computes
    factor = F(1, 30) if y == bracket * F(1, 30) else None
    holds = 3 * x == 12 * y - norm * norm * F(1, 2)
    detail = (f"stated prefactor 8/15 {'matches' if value_ok else 'does not match'} "
              f"(computed prefactor {factor}); stated relation "
              f"{'holds' if relation_ok else 'fails'} (3X = 12Y - N^2/2 {'holds' if holds else 'fails'})")
    record(4, value_ok and relation_ok, detail)


def _profile_classes(d: int, m: int):
    """Profiles with d plain and d conjugated factors, up to relabeling rows and columns."""
    pairs = list(product(range(m), repeat=2))
    perms = list(permutations(range(m)))
    seen = set()
    out = []
    for plain in combinations_with_replacement(pairs, d):
        for conj in combinations_with_replacement(pairs, d):
            key = min(
                (tuple(sorted((r[i], c[j]) for i, j in plain)),
                 tuple(sorted((r[i], c[j]) for i, j in conj)))
                for r in perms for c in perms)
            if key not in seen:
                seen.add(key)
                out.append(key)
    return out


def test_criterion_5_weingarten_vs_monte_carlo():
    problems, checked = [], 0
    for m in (2, 3):
        us = haar_samples(m, 100_000, seed=11 + m)
        for d in (1, 2, 3):
            for plain, conj in _profile_classes(d, m):
                prof = IndexProfile(*zip(*plain), *zip(*conj))
                exact = haar_integral(prof, m)
                mean, se = mc_moment(us, prof.rows, prof.cols, prof.conj_rows, prof.conj_cols)
                checked += 1
                if abs(mean - float(exact)) > 3 * se + 1e-15:
                    problems.append((m, plain, conj, str(exact), mean, se))
    zero = average_monomial(Monomial({(2, 0): 1}, {(0, 2): 1}), 2, 2)
    ok = not problems and not zero
    record(5, ok, f"{checked} profile classes within 3 SE, (a20 abar02)* = 0: {not zero}"
           + (f" outliers {problems[:3]}" if problems else ""))


def _invariant_family(n: int, m: int):
    polys = []
    max_d = 6 // n
    for pair in hilbert_basis(n, m).generators:
        if pair.degree <= max_d:
            polys.append(("avg " + pair.to_text(), average_monomial(pair.to_monomial(), n, m)))
    for d in range(1, 4 // n + 1):
        for pair in enumerate_balanced(n, m, d):
            polys.append(("avg " + pair.to_text(), average_monomial(pair.to_monomial(), n, m)))
    for d in range(1, max_d + 1):
        for pat in canonical_patterns(n, d):
            polys.append((f"f_sigma {pat}", expand_tensor_invariant(pat, n, m)))
    return [(name, p) for name, p in polys if p]


def test_criterion_6_invariance_suite():
    rng = np.random.default_rng(6)
    worst, count = 0.0, 0
    for n, m in ((2, 2), (2, 3), (3, 2)):
        dim = len(enumerate_occupations(n, m))
        states = rng.normal(size=(10, dim)) + 1j * rng.normal(size=(10, dim))
        mats = [induced_matrix(random_haar_unitary(m, seed=int(rng.integers(2**31))), n)
                for _ in range(50)]
        moved = np.concatenate([states @ r.T for r in mats])
        base = np.tile(states, (50, 1))
        for _, poly in _invariant_family(n, m):
            ev = BatchEvaluator(poly, n, m)
            f0, f1 = ev(base), ev(moved)
            worst = max(worst, float(np.max(np.abs(f1 - f0) / (1 + np.abs(f0)))))
            count += 1
        if n == 2:
            basis = enumerate_occupations(n, m)
            for s0, s1 in zip(base, moved):
                c0 = char_poly_invariants(FockState(n, m, dict(zip(basis, s0)), Convention.MONOMIAL))
                c1 = char_poly_invariants(FockState(n, m, dict(zip(basis, s1)), Convention.MONOMIAL))
                worst = max(worst, max(abs(a - b) / (1 + abs(a)) for a, b in zip(c0, c1)))
            count += m
    record(6, worst <= 1e-8, f"{count} invariants, worst relative deviation {worst:.2e}")


def test_criterion_7_two_photon_vs_bruteforce():
    rng = np.random.default_rng(7)
    disagreements, reachable_missed, total = [], 0, 0
    for m in (2, 3):
        for i in range(50):
            src = _unit(random_state(2, m, rng))
            if i < 25:
                dst = apply_unitary(random_haar_unitary(m, seed=int(rng.integers(2**31))), src)
            else:
                dst = _unit(random_state(2, m, rng))
            fast = two_photon_reachable(src, dst, tol=1e-6).reachable
            slow = reachability_bruteforce_oracle(src, dst, samples=20, tol=1e-6, seed=i).found
            total += 1
            if i < 25 and not fast:
                reachable_missed += 1
            if fast != slow:
                disagreements.append((m, i, fast, slow))
    ok = not disagreements and reachable_missed == 0
    record(7, ok, f"{total} pairs, {len(disagreements)} disagreements, "
           f"{reachable_missed} constructed-reachable pairs missed")


def test_criterion_8_worked_example():
    r2 = 1 / math.sqrt(2)
    src = FockState.basis_state((1, 1), Convention.KET)
    dst = FockState(2, 2, {(2, 0): r2}, Convention.KET)
    v = decide_reachability(src, dst)
    witnesses = [v.witness, *v.extra_witnesses] if v.witness else []
    det = [w for w in witnesses
           if abs(complex(w.src_value) - 1 / 16) < 1e-12 and abs(complex(w.dst_value)) < 1e-12]
    hom = FockState(2, 2, {(2, 0): r2 * 1j, (0, 2): r2 * 1j}, Convention.KET)
    v2 = decide_reachability(src, hom)
    ok = v.status == Status.UNREACHABLE and bool(det) and v2.status == Status.REACHABLE
    record(8, ok, f"target verdict {v.status.value}, witness "
           f"{det[0].name + ' 1/16 vs 0' if det else 'missing'}; HOM output {v2.status.value}")


def test_criterion_9_convention_consistency():
    rng = np.random.default_rng(9)
    bad = 0
    for n, m in ((2, 2), (3, 2)):
        for _ in range(20):
            s = random_state(n, m, rng, exact=True)
            u = random_exact_unitary(m, rng)
            moved = apply_unitary(u, s)
            if state_to_tensor(moved) != tensor_apply(u, state_to_tensor(s)):
                bad += 1
            if norm_sq(moved) != norm_sq(s):
                bad += 1
    record(9, bad == 0, f"40 exact instances, {bad} failures of the commuting square or norm")


def test_criterion_10_generating_sets():
    gs = build_generating_set(2, 2, 4)
    dims = (1,) + tuple(r.achieved for r in gs.report)
    problems = []
    if dims != (1, 1, 2, 2, 3) or not gs.complete or len(gs) != 2:
        problems.append(f"(2,2): dims {dims}, {len(gs)} generators")
    for m in (2, 3, 4):
        one = build_generating_set(1, m, 3)
        if len(one) != 1 or one.polynomials[0] != norm_polynomial(1, m):
            problems.append(f"(1,{m}): {[p.to_text() for p in one.polynomials]}")
    record(10, not problems, f"(2,2,4) dims {dims} with {len(gs)} generators; n=1 gives the norm"
           + (f" {problems}" if problems else ""))
