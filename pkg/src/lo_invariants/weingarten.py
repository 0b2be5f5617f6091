"""Unitary Weingarten function and exact Haar integrals of matrix entries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import (as_partition, character, compose, cycle_type, dimension,
                       inverse, partitions, schur_at_ones)


@dataclass(frozen=True)
class WeingartenTable:
    d: int
    m: int
    values: dict

    def __getitem__(self, cycle_type_) -> Fraction:
        return self.values[as_partition(cycle_type_)]


@lru_cache(maxsize=None)
def weingarten_table(d: int, m: int) -> WeingartenTable:
    """Wg(mu) for every cycle type mu of S_d.

    Wg(mu) = 1/d!^2 sum_lam chi^lam(1)^2 chi^lam(mu) / s_lam(1^m), where the
    sum only runs over lam with at most m rows (s_lam(1^m) vanishes otherwise).
    """
    if d < 0 or m < 1:
        raise ValueError("need d >= 0 and m >= 1")
    lams = [lam for lam in partitions(d) if len(lam) <= m]
    values = {}
    for mu in partitions(d):
        total = Fraction(0)
        for lam in lams:
            total += Fraction(dimension(lam) ** 2 * character(lam, mu), schur_at_ones(lam, m))
        values[mu] = total / factorial(d) ** 2
    return WeingartenTable(d, m, values)


def weingarten(cycle_type_, m: int) -> Fraction:
    mu = as_partition(cycle_type_)
    return weingarten_table(sum(mu), m)[mu]


@dataclass(frozen=True)
class IndexProfile:
    """Indices of int U_{i_1 j_1}...U_{i_d j_d} conj(U_{i'_1 j'_1})...conj(U_{i'_d' j'_d'}) dU.

    Modes are numbered from 0.
    """

    rows: tuple
    cols: tuple
    conj_rows: tuple
    conj_cols: tuple

    def __post_init__(self):
        for name in ("rows", "cols", "conj_rows", "conj_cols"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        if len(self.rows) != len(self.cols) or len(self.conj_rows) != len(self.conj_cols):
            raise ValueError("row and column index lists must have equal length")

    @property
    def degrees(self) -> tuple[int, int]:
        return len(self.rows), len(self.conj_rows)


def matchings(a, b):
    """All permutations s with a[x] == b[s[x]] for every x."""
    if sorted(a) != sorted(b):
        return []
    d = len(a)
    out = []
    used = [False] * d
    current = [0] * d

    def extend(x):
        if x == d:
            out.append(tuple(current))
            return
        for y in range(d):
            if not used[y] and b[y] == a[x]:
                used[y] = True
                current[x] = y
                extend(x + 1)
                used[y] = False

    extend(0)
    return out


def haar_integral(profile: IndexProfile, m: int) -> Fraction:
    """Exact Haar integral (Collins-Sniady).

    sum over sigma, tau in S_d with i_a = i'_{sigma(a)} and j_a = j'_{tau(a)}
    of Wg(tau sigma^{-1}); zero when the two degrees differ.
    """
    d, d_conj = profile.degrees
    for idx in profile.rows + profile.cols + profile.conj_rows + profile.conj_cols:
        if not 0 <= idx < m:
            raise ValueError(f"index {idx} out of range for m={m}")
    if d != d_conj:
        return Fraction(0)
    sigmas = matchings(profile.rows, profile.conj_rows)
    if not sigmas:
        return Fraction(0)
    taus = matchings(profile.cols, profile.conj_cols)
    table = weingarten_table(d, m)
    total = Fraction(0)
    for s in sigmas:
        s_inv = inverse(s)
        for t in taus:
            total += table.values[cycle_type(compose(t, s_inv))]
    return total


def weingarten_by_permutation(p, m: int) -> Fraction:
    return weingarten(cycle_type(tuple(p)), m)

