"""Haar averaging (Reynolds operator) of polynomials in alpha, conj(alpha).

Writing a monomial of bidegree (d, d) through the symmetric tensor,
``alpha_v = multinomial(n; v) A_{k(v)}``, it becomes ``C A_K conj(A)_{K'}`` with
K, K' index strings of length N = nd. Collins-Sniady then gives

    (A_K conj(A)_{K'})* = sum_{sigma in S} sum_tau Wg(tau sigma^{-1}) f_{tau^{-1}}

where S = {sigma : K_a = K'_{sigma(a)}} and f is the tensor invariant of
:mod:`tensor_inv`. Both f_{tau^{-1}} and sum_{tau in C} Wg(tau sigma^{-1}) only
depend on double cosets, so the inner sums collapse onto a small table of
cycle-type counts computed once per (n, d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .combinat import all_permutations, compose, cycle_type, inverse, multinomial
from .fock import enumerate_occupations, random_state, sorted_indices
from .lo_action import haar_unitaries, induced_matrix
from .poly import BatchEvaluator, Monomial, Polynomial, phase_weight
from .tensor_inv import (ContractionPattern, canonical_wiring, expand_tensor_invariant,
                         wiring_matrix)
from .weingarten import matchings, weingarten_table

AVERAGE_BUDGET = 8


@dataclass(frozen=True)
class _CosetTable:
    classes: tuple          # canonical wiring keys, one per double coset
    reps: tuple             # a permutation in each class
    counts: tuple           # counts[C][D] = {cycle type: #tau in C with type(tau rep_D^-1)}


@lru_cache(maxsize=None)
def _coset_table(n: int, d: int) -> _CosetTable:
    size = n * d
    perms = list(all_permutations(size))
    key_of = {}
    members: dict = {}
    for p in perms:
        key = canonical_wiring(wiring_matrix(p, n))
        key_of[p] = key
        members.setdefault(key, []).append(p)
    classes = tuple(sorted(members))
    reps = tuple(members[c][0] for c in classes)
    counts = []
    for c in classes:
        row = []
        for rep in reps:
            rep_inv = inverse(rep)
            tally: dict = {}
            for tau in members[c]:
                lam = cycle_type(compose(tau, rep_inv))
                tally[lam] = tally.get(lam, 0) + 1
            row.append(tally)
        counts.append(tuple(row))
    return _CosetTable(classes, reps, tuple(counts))


def _index_string(exps, n: int) -> tuple[tuple, int]:
    """Concatenated sorted index tuples and the product of multinomial weights."""
    idx = []
    weight = 1
    for occ, e in exps:
        if sum(occ) != n:
            raise ValueError(f"variable {occ} does not belong to n={n}")
        for _ in range(e):
            idx.extend(sorted_indices(occ))
            weight *= multinomial(n, occ)
    return tuple(idx), weight


def average_monomial(mono: Monomial, n: int, m: int) -> Polynomial:
    """Exact Haar average of a single monomial over U(m)."""
    for occ, _ in mono.alpha + mono.conj:
        if len(occ) != m:
            raise ValueError(f"variable {occ} does not have {m} modes")
    d, d_conj = mono.bidegree
    if d != d_conj or any(phase_weight(mono)):
        return Polynomial()
    if d == 0:
        return Polynomial.constant(1)
    if n * d > AVERAGE_BUDGET:
        raise ValueError(f"n*d = {n * d} exceeds the averaging budget {AVERAGE_BUDGET}")
    k, w = _index_string(mono.alpha, n)
    k_conj, w_conj = _index_string(mono.conj, n)
    table = _coset_table(n, d)
    position = {c: i for i, c in enumerate(table.classes)}
    # |S cap D| for each double coset D
    hits = [0] * len(table.classes)
    for sigma in matchings(k, k_conj):
        hits[position[canonical_wiring(wiring_matrix(sigma, n))]] += 1
    wg = weingarten_table(n * d, m).values
    result = Polynomial()
    for ci, rep in enumerate(table.reps):
        weight = Fraction(0)
        for di, h in enumerate(hits):
            if h:
                weight += h * sum(cnt * wg[lam] for lam, cnt in table.counts[ci][di].items())
        if weight:
            g = expand_tensor_invariant(ContractionPattern(n, d, inverse(rep)), n, m)
            result = result + g * (weight * w * w_conj)
    return result


def average_polynomial(poly: Polynomial, n: int, m: int) -> Polynomial:
    """Termwise average, by linearity of the Haar integral."""
    result = Polynomial()
    for mono, c in poly.terms.items():
        avg = average_monomial(mono, n, m)
        if avg:
            result = result + avg * c
    return result


@dataclass(frozen=True)
class InvarianceReport:
    invariant: bool
    max_deviation: float
    trials: int

    def __bool__(self):
        return self.invariant


def is_invariant_numeric(poly: Polynomial, n: int, m: int, trials: int = 20, seed=0,
                         tol: float = 1e-8, states: int = 5) -> InvarianceReport:
    """Check |f(U.s) - f(s)| <= tol (1 + |f(s)|) on Haar samples U and random states s."""
    rng = np.random.default_rng(seed)
    evaluator = BatchEvaluator(poly, n, m)
    basis = enumerate_occupations(n, m)
    rows = np.array([[complex(random_state(n, m, rng)[v]) for v in basis] for _ in range(states)])
    rows = rows / np.linalg.norm(rows, axis=1, keepdims=True)
    before = evaluator(rows)
    worst = 0.0
    for u in haar_unitaries(m, trials, rng):
        after = evaluator(rows @ induced_matrix(u, n).T)
        dev = np.abs(after - before) / (1 + np.abs(before))
        worst = max(worst, float(dev.max(initial=0.0)))
    return InvarianceReport(worst <= tol, worst, trials * states)


def invariant_constant(n: int, m: int) -> Fraction:
    """The c with (|alpha_{n,0,...,0}|^2)* = c ||alpha||^2."""
    top = (n,) + (0,) * (m - 1)
    mono = Monomial({top: 1}, {top: 1})
    return average_monomial(mono, n, m).terms[mono] / math.factorial(n)
