"""Molien series of the invariant ring and of the phase-invariant ring.

Both series depend on |z|^2 only, so a coefficient a_d counts invariants of
bidegree (d, d). The truncated series come from the Weyl integration formula:
with G'(z, w) = prod_v 1/(1 - z w^v) and G = Vandermonde(w) * G', Parseval
turns the torus integral into sums of squared w-coefficients,

    F_d = (1/m!) sum_q |[z^d w^q] G|^2,     F'_d = sum_q |[z^d w^q] G'|^2.

Every z^d coefficient of G is homogeneous in w of degree nd + m(m-1)/2, so
no z^d zbar^d' cross terms survive.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations

from .combinat import count_partitions_max_part
from .fock import enumerate_occupations, fock_dim

MOLIEN_BUDGET = 400


class SeriesKind(str, enum.Enum):
    FULL = "full"
    PHASE = "phase"


@dataclass(frozen=True)
class MolienSeries:
    n: int
    m: int
    coeffs: tuple
    kind: SeriesKind = SeriesKind.FULL

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d]

    def __iter__(self):
        return iter(self.coeffs)

    def to_text(self) -> str:
        return " ".join(str(a) for a in self.coeffs)


def molien_closed_form(n: int, m: int, D: int) -> MolienSeries:
    """1/(1-t) for n = 1 and prod_{k<=m} 1/(1-t^k) for n = 2."""
    if n == 1:
        coeffs = (1,) * (D + 1)
    elif n == 2:
        coeffs = tuple(count_partitions_max_part(d, m) for d in range(D + 1))
    else:
        raise ValueError(f"no closed form known for n={n}")
    return MolienSeries(n, m, coeffs, SeriesKind.FULL)


def _check_budget(n, m, D, budget):
    cost = fock_dim(n, m) * D
    if cost > budget:
        raise ValueError(f"fock_dim*D = {cost} exceeds the Molien budget {budget}")


def _phase_coefficients(n: int, m: int, D: int) -> list[dict]:
    """levels[d][q] = [z^d w^q] prod_v 1/(1 - z w^v) = #multisets of d occupations summing to q."""
    levels = [{(0,) * m: 1}] + [{} for _ in range(D)]
    for v in enumerate_occupations(n, m):
        # multiply by the geometric series in z w^v, low degrees last so each update is fresh
        for d in range(1, D + 1):
            src, dst = levels[d - 1], levels[d]
            for q, c in src.items():
                key = tuple(a + b for a, b in zip(q, v))
                dst[key] = dst.get(key, 0) + c
    return levels


def _vandermonde(m: int) -> dict:
    """prod_{i<j} (w_i - w_j) = sum_pi sign(pi) w^{pi(delta)}."""
    delta = tuple(range(m - 1, -1, -1))
    out = {}
    for perm in permutations(range(m)):
        inversions = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        out[tuple(delta[perm[k]] for k in range(m))] = (-1) ** inversions
    return out


def molien_truncated(n: int, m: int, D: int, budget: int = MOLIEN_BUDGET) -> MolienSeries:
    """Exact a_0..a_D of the invariant ring's Molien series."""
    _check_budget(n, m, D, budget)
    levels = _phase_coefficients(n, m, D)
    vdm = _vandermonde(m)
    coeffs = []
    for level in levels:
        full: dict = {}
        for q, c in level.items():
            for e, s in vdm.items():
                key = tuple(a + b for a, b in zip(q, e))
                full[key] = full.get(key, 0) + s * c
        total = sum(c * c for c in full.values())
        a, rem = divmod(total, math.factorial(m))
        if rem:
            raise ArithmeticError("Parseval sum not divisible by m!")
        coeffs.append(a)
    return MolienSeries(n, m, tuple(coeffs), SeriesKind.FULL)


def phase_molien_truncated(n: int, m: int, D: int, budget: int = MOLIEN_BUDGET) -> MolienSeries:
    """Exact a'_0..a'_D: number of phase-invariant monomials of bidegree (d, d)."""
    _check_budget(n, m, D, budget)
    levels = _phase_coefficients(n, m, D)
    coeffs = tuple(sum(c * c for c in level.values()) for level in levels)
    return MolienSeries(n, m, coeffs, SeriesKind.PHASE)


def phase_monomial_count(n: int, m: int, d: int) -> int:
    """Count balanced monomials of bidegree (d, d) by comparing every pair."""
    sums = []
    for multiset in combinations_with_replacement(enumerate_occupations(n, m), d):
        sums.append(tuple(sum(v[k] for v in multiset) for k in range(m)))
    return sum(1 for a in sums for b in sums if a == b)


def rational_series(numerator, denominator_degrees, D: int) -> tuple:
    """Coefficients of numerator(t) / prod_k (1 - t^k) up to t^D.

    ``numerator`` lists polynomial coefficients from t^0 upward.
    """
    coeffs = [0] * (D + 1)
    for i, c in enumerate(numerator):
        if i <= D:
            coeffs[i] = c
    for k in denominator_degrees:
        for d in range(k, D + 1):
            coeffs[d] += coeffs[d - k]
    return tuple(coeffs)
