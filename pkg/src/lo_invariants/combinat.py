"""Partitions, permutations and symmetric-group characters.

Partitions are tuples of positive ints in nonincreasing order; permutations
are tuples of images of ``0..d-1``. Composition follows ``(p*q)(a) = p(q(a))``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import factorial, prod

Partition = tuple
Permutation = tuple


@lru_cache(maxsize=None)
def partitions(d: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse lexicographic order."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if max_part is None:
        max_part = d
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def count_partitions_max_part(d: int, m: int) -> int:
    """Number of partitions of ``d`` whose parts are all ``<= m``."""
    if d < 0 or m < 1:
        raise ValueError("need d >= 0 and m >= 1")
    table = [1] + [0] * d
    for part in range(1, m + 1):
        for total in range(part, d + 1):
            table[total] += table[total - part]
    return table[d]


def as_partition(parts) -> Partition:
    p = tuple(sorted((int(x) for x in parts if x), reverse=True))
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts!r}")
    return p


def conjugate_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hook_lengths(lam: Partition):
    cols = conjugate_partition(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            yield (i, j), (row - j) + (cols[j] - i) - 1


def dimension(lam: Partition) -> int:
    """chi^lam(identity), by the hook-length formula."""
    return factorial(sum(lam)) // prod(h for _, h in hook_lengths(lam))


def _beta_set(lam: Partition) -> tuple[int, ...]:
    length = len(lam)
    return tuple(part + length - 1 - i for i, part in enumerate(lam))


def _from_beta_set(beta) -> Partition:
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    return tuple(b - (length - 1 - i) for i, b in enumerate(ordered) if b - (length - 1 - i) > 0)


@lru_cache(maxsize=None)
def _character(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    # removing a rim hook of length r <=> sliding one bead down r places
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = [c for c in beta if c != b] + [target]
        sign = -1 if height % 2 else 1
        total += sign * _character(_from_beta_set(new_beta), rest)
    return total


def character(lam, mu) -> int:
    """Irreducible character chi^lam evaluated on cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _character(lam, mu)


def schur_at_ones(lam, m: int) -> int:
    """s_lam(1, ..., 1) with m ones; zero when lam has more than m rows."""
    lam = as_partition(lam)
    if len(lam) > m:
        return 0
    value = Fraction(1)
    for (i, j), hook in hook_lengths(lam):
        value *= Fraction(m + j - i, hook)
    assert value.denominator == 1
    return int(value)


def multinomial(n: int, v) -> int:
    if sum(v) != n or any(x < 0 for x in v):
        raise ValueError(f"occupations {tuple(v)} do not sum to {n}")
    out = factorial(n)
    for x in v:
        out //= factorial(x)
    return out


# -- permutations -----------------------------------------------------------

def all_permutations(d: int):
    return _itertools_permutations(range(d))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p*q)(a) = p(q(a))."""
    return tuple(p[x] for x in q)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycle_type(p: Permutation) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def class_size(mu: Partition) -> int:
    """Number of permutations with cycle type mu."""
    d = sum(mu)
    denom = 1
    for length in set(mu):
        k = mu.count(length)
        denom *= length**k * factorial(k)
    return factorial(d) // denom
