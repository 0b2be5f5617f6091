"""Tensor-contraction invariants f_sigma and generating-set assembly.

``f_sigma(alpha) = sum_k A^{(x)d}_k conj(A)^{(x)d}_{sigma.k}`` where k runs over
``{0..m-1}^{nd}`` and ``(sigma.k)_j = k_{sigma(j)}``. Positions ``c*n .. c*n+n-1``
belong to the c-th copy of A (and of conj(A)).

Because A is symmetric, f_sigma only depends on how many legs of each A copy
are wired to each conj(A) copy: the d x d *wiring matrix*
``W[c][c'] = #{j in block c' : sigma(j) in block c}``, whose rows and columns
sum to n. Permuting copies permutes rows and columns, so the double coset of
sigma under (S_n wr S_d) x (S_n wr S_d) is the wiring matrix up to row and
column permutations. Its canonical form is the lexicographically smallest
such matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .combinat import inverse, is_permutation, multinomial
from .fock import Convention, FockState, occupation_of, state_to_tensor
from .poly import Monomial, Polynomial
from .scalars import conj

PATTERN_BUDGET = 9


def wiring_matrix(sigma, n: int) -> tuple:
    d = len(sigma) // n
    w = [[0] * d for _ in range(d)]
    for j, s in enumerate(sigma):
        w[s // n][j // n] += 1
    return tuple(tuple(row) for row in w)


@lru_cache(maxsize=None)
def canonical_wiring(w: tuple) -> tuple:
    """Smallest row-major form of w over row and column permutations."""
    d = len(w)
    best = None
    for rows in permutations(range(d)):
        permuted = [w[r] for r in rows]
        cols = sorted(tuple(permuted[i][j] for i in range(d)) for j in range(d))
        cand = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
        if best is None or cand < best:
            best = cand
    return best


def permutation_from_wiring(w: tuple, n: int) -> tuple:
    """A permutation whose wiring matrix is exactly w."""
    d = len(w)
    free = [list(range(c * n, (c + 1) * n)) for c in range(d)]
    sigma = [0] * (n * d)
    for col in range(d):
        j = col * n
        for row in range(d):
            for _ in range(w[row][col]):
                sigma[j] = free[row].pop(0)
                j += 1
    return tuple(sigma)


@dataclass(frozen=True)
class ContractionPattern:
    """A pairing sigma of the nd legs of A^{(x)d} with those of conj(A)^{(x)d}."""

    n: int
    d: int
    sigma: tuple
    canonical_key: tuple = field(init=False, compare=False)

    def __post_init__(self):
        sigma = tuple(int(x) for x in self.sigma)
        if len(sigma) != self.n * self.d or not is_permutation(sigma):
            raise ValueError(f"sigma must be a permutation of {self.n * self.d} legs")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "canonical_key", canonical_wiring(wiring_matrix(sigma, self.n)))

    @classmethod
    def from_wiring(cls, w, n: int) -> ContractionPattern:
        w = tuple(tuple(row) for row in w)
        return cls(n, len(w), permutation_from_wiring(w, n))

    def inverse(self) -> ContractionPattern:
        return ContractionPattern(self.n, self.d, inverse(self.sigma))

    def equivalent(self, other: ContractionPattern) -> bool:
        return (self.n, self.d, self.canonical_key) == (other.n, other.d, other.canonical_key)


def _wirings(n: int, d: int):
    """All d x d nonnegative integer matrices with row and column sums n."""
    def rows(i, col_left):
        if i == d:
            if not any(col_left):
                yield ()
            return
        for row in _compositions(n, d, col_left):
            rest = tuple(c - r for c, r in zip(col_left, row))
            for tail in rows(i + 1, rest):
                yield (row,) + tail
    return rows(0, (n,) * d)


def _compositions(total, parts, caps):
    if parts == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - first, parts - 1, caps[1:]):
            yield (first,) + rest


@lru_cache(maxsize=None)
def canonical_patterns(n: int, d: int) -> tuple[ContractionPattern, ...]:
    """One pattern per double coset, ordered by canonical wiring matrix."""
    if n * d > PATTERN_BUDGET:
        raise ValueError(f"n*d = {n * d} exceeds the pattern budget {PATTERN_BUDGET}")
    keys = sorted({canonical_wiring(w) for w in _wirings(n, d)})
    return tuple(ContractionPattern.from_wiring(w, n) for w in keys)


def tensor_invariant(pattern: ContractionPattern, state: FockState):
    """Evaluate f_sigma on a MONOMIAL state by direct contraction."""
    if state.convention != Convention.MONOMIAL:
        raise ValueError("tensor_invariant expects a MONOMIAL state")
    if state.n != pattern.n:
        raise ValueError(f"pattern is for n={pattern.n} photons, state has n={state.n}")
    n, d, m = pattern.n, pattern.d, state.m
    tensor = state_to_tensor(state)
    sigma = pattern.sigma
    if not state.exact:
        letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
        dense = tensor.dense()
        subs = [letters[c * n:(c + 1) * n] for c in range(d)]
        subs += ["".join(letters[sigma[j]] for j in range(c * n, (c + 1) * n)) for c in range(d)]
        return complex(np.einsum(",".join(subs) + "->", *([dense] * d + [dense.conj()] * d)))
    total = 0
    for k in product(range(m), repeat=n * d):
        term = 1
        for c in range(d):
            term = term * tensor[k[c * n:(c + 1) * n]]
            if term == 0:
                break
        else:
            for c in range(d):
                term = term * conj(tensor[tuple(k[sigma[j]] for j in range(c * n, (c + 1) * n))])
                if term == 0:
                    break
        total = total + term
    return total


@lru_cache(maxsize=None)
def _expand_cached(n: int, m: int, d: int, key: tuple) -> Polynomial:
    sigma = permutation_from_wiring(key, n)
    counts: dict = {}
    for k in product(range(m), repeat=n * d):
        alpha = tuple(sorted(occupation_of(k[c * n:(c + 1) * n], m) for c in range(d)))
        conj_ = tuple(sorted(occupation_of([k[sigma[j]] for j in range(c * n, (c + 1) * n)], m)
                             for c in range(d)))
        counts[(alpha, conj_)] = counts.get((alpha, conj_), 0) + 1
    terms = {}
    for (alpha, conj_), count in counts.items():
        weight = math.prod(multinomial(n, v) for v in alpha + conj_)
        terms[Monomial([(v, 1) for v in alpha], [(v, 1) for v in conj_])] = Fraction(count, weight)
    return Polynomial(terms)


def expand_tensor_invariant(pattern: ContractionPattern, n: int, m: int) -> Polynomial:
    """f_sigma as an exact polynomial in alpha, conj(alpha)."""
    if pattern.n != n:
        raise ValueError("pattern and n disagree")
    if n * pattern.d > PATTERN_BUDGET:
        raise ValueError(f"n*d = {n * pattern.d} exceeds the pattern budget {PATTERN_BUDGET}")
    return _expand_cached(n, m, pattern.d, pattern.canonical_key)


GENERATION_CAVEAT = ("Agreement with the Molien coefficients is checked degree by degree up to D "
                     "only; invariants needed as generators in higher degrees cannot be ruled "
                     "out from this data.")


@dataclass(frozen=True)
class Generator:
    polynomial: Polynomial
    degree: int
    source: str


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    molien: int
    achieved: int

    @property
    def match(self) -> bool:
        return self.molien == self.achieved


@dataclass(frozen=True)
class GeneratingSet:
    n: int
    m: int
    D: int
    generators: tuple
    report: tuple
    caveat: str = GENERATION_CAVEAT

    @property
    def polynomials(self) -> list[Polynomial]:
        return [g.polynomial for g in self.generators]

    @property
    def complete(self) -> bool:
        """True when every degree up to D matches its Molien coefficient."""
        return all(r.match for r in self.report)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _candidates(n: int, m: int, d: int):
    """Invariants of bidegree (d, d): contraction patterns first, then averaged monomials."""
    from .averaging import AVERAGE_BUDGET, average_monomial
    from .phase_basis import enumerate_balanced, hilbert_basis

    if n * d <= PATTERN_BUDGET:
        scale = math.factorial(n) ** d
        for pattern in canonical_patterns(n, d):
            key = ";".join("".join(map(str, row)) for row in pattern.canonical_key)
            yield expand_tensor_invariant(pattern, n, m) * scale, f"contraction[{key}]"
    if n * d <= AVERAGE_BUDGET:
        seen = set()
        phase_gens = [g for g in hilbert_basis(n, m, d) if g.degree == d]
        for pair in phase_gens + enumerate_balanced(n, m, d):
            if pair in seen:
                continue
            seen.add(pair)
            yield average_monomial(pair.to_monomial(), n, m), f"average[{pair.to_text()}]"


def build_generating_set(n: int, m: int, D: int) -> GeneratingSet:
    """Greedy per-degree search for invariants whose products reach the Molien dimensions."""
    from .molien import molien_truncated
    from .poly import graded_products, span_echelon

    targets = molien_truncated(n, m, D)
    gens: list[Generator] = []
    report = []
    for d in range(1, D + 1):
        ech = span_echelon()
        for p in graded_products([g.polynomial for g in gens], (d, d)):
            ech.add(p.terms)
        if len(ech) < targets[d]:
            for poly, source in _candidates(n, m, d):
                if poly and ech.add(poly.terms):
                    gens.append(Generator(poly, d, source))
                    if len(ech) == targets[d]:
                        break
        report.append(DegreeReport(d, targets[d], len(ech)))
    return GeneratingSet(n, m, D, tuple(gens), tuple(report))
