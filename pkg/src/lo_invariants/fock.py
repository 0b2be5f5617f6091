"""Fock-space states of n photons in m modes.

Two coefficient conventions are supported and every state carries its tag:

* ``KET``: coefficients ``c_v`` over the orthonormal basis ``|n_1,...,n_m>``.
* ``MONOMIAL``: coefficients ``alpha_v`` of the creation-operator polynomial
  ``sum_v alpha_v prod_k (a_k^dag)^{n_k} |vac>``, so that
  ``alpha_v = c_v / sqrt(n_1! ... n_m!)``.

Only the MONOMIAL coefficients make the factorial-weighted norm and the
symmetric-tensor picture unitarily equivariant; every invariant in this
package is evaluated on MONOMIAL states.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping

import numpy as np

from .combinat import multinomial
from .scalars import GaussianRational, abs2, exact_sqrt, is_exact

Occupation = tuple


class Convention(str, enum.Enum):
    KET = "ket"
    MONOMIAL = "monomial"


def fock_dim(n: int, m: int) -> int:
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return math.comb(n + m - 1, n)


def enumerate_occupations(n: int, m: int) -> list[Occupation]:
    """All occupation vectors summing to n, lexicographically descending."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if m == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in enumerate_occupations(n - first, m - 1):
            out.append((first,) + rest)
    return out


def factorial_weight(v) -> int:
    """n_1! n_2! ... n_m!"""
    return math.prod(math.factorial(x) for x in v)


def sorted_indices(v) -> tuple[int, ...]:
    """Sorted mode-index tuple of an occupation vector: (2,1) -> (0,0,1)."""
    return tuple(k for k, count in enumerate(v) for _ in range(count))


def occupation_of(indices, m: int) -> Occupation:
    counts = [0] * m
    for k in indices:
        counts[k] += 1
    return tuple(counts)


def _is_zero(x) -> bool:
    return x == 0


@dataclass(frozen=True)
class FockState:
    """A pure state in the n-photon, m-mode Fock space."""

    n: int
    m: int
    amplitudes: Mapping[Occupation, object]
    convention: Convention = Convention.MONOMIAL

    def __post_init__(self):
        conv = Convention(self.convention)
        object.__setattr__(self, "convention", conv)
        clean = {}
        for key, value in dict(self.amplitudes).items():
            key = tuple(int(x) for x in key)
            if len(key) != self.m or sum(key) != self.n or min(key, default=0) < 0:
                raise ValueError(f"occupation {key} is not a state of n={self.n}, m={self.m}")
            if not _is_zero(value):
                clean[key] = value
        object.__setattr__(self, "amplitudes", clean)

    @classmethod
    def from_vector(cls, n, m, values, convention=Convention.MONOMIAL) -> FockState:
        """Build from coefficients listed in :func:`enumerate_occupations` order."""
        basis = enumerate_occupations(n, m)
        values = list(values)
        if len(values) != len(basis):
            raise ValueError(f"expected {len(basis)} amplitudes, got {len(values)}")
        return cls(n, m, dict(zip(basis, values)), convention)

    @classmethod
    def basis_state(cls, occupation, convention=Convention.KET, exact=True) -> FockState:
        occupation = tuple(occupation)
        one = GaussianRational(1) if exact else 1.0 + 0j
        return cls(sum(occupation), len(occupation), {occupation: one}, convention)

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in self.amplitudes.values())

    def __getitem__(self, occupation):
        return self.amplitudes.get(tuple(occupation), 0)

    def vector(self) -> list:
        return [self[v] for v in enumerate_occupations(self.n, self.m)]

    def as_array(self) -> np.ndarray:
        return np.array([complex(x) for x in self.vector()], dtype=complex)

    def scaled(self, factor) -> FockState:
        return FockState(self.n, self.m, {k: v * factor for k, v in self.amplitudes.items()},
                         self.convention)

    def to_float(self) -> FockState:
        return FockState(self.n, self.m, {k: complex(v) for k, v in self.amplitudes.items()},
                         self.convention)

    def __add__(self, other: FockState) -> FockState:
        if (self.n, self.m, self.convention) != (other.n, other.m, other.convention):
            raise ValueError("states live in different spaces or conventions")
        out = dict(self.amplitudes)
        for k, v in other.amplitudes.items():
            out[k] = out.get(k, 0) + v
        return FockState(self.n, self.m, out, self.convention)


def _rescale(value, weight: int, to_monomial: bool):
    if is_exact(value):
        root = exact_sqrt(weight)
        return value / root if to_monomial else value * root
    root = math.sqrt(weight)
    return value / root if to_monomial else value * root


def convert(state: FockState, target) -> FockState:
    """Switch between KET and MONOMIAL coefficients.

    Exact states only convert when every needed ``sqrt(n_1!...n_m!)`` is
    rational; otherwise a ValueError points to the float backend.
    """
    target = Convention(target)
    if state.convention == target:
        return state
    to_monomial = target == Convention.MONOMIAL
    amps = {v: _rescale(c, factorial_weight(v), to_monomial) for v, c in state.amplitudes.items()}
    return FockState(state.n, state.m, amps, target)


def as_monomial(state: FockState) -> FockState:
    return convert(state, Convention.MONOMIAL)


def norm_sq(state: FockState):
    """sum_v n_1!...n_m! |alpha_v|^2 on MONOMIAL coefficients."""
    if state.convention != Convention.MONOMIAL:
        raise ValueError("norm_sq expects a MONOMIAL state; call convert() first")
    total = Fraction(0) if state.exact else 0.0
    for v, a in state.amplitudes.items():
        total += factorial_weight(v) * abs2(a)
    return total


@dataclass(frozen=True)
class SymmetricTensor:
    """Rank-n symmetric tensor over m modes, stored on sorted index tuples."""

    n: int
    m: int
    entries: Mapping[tuple, object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, value in dict(self.entries).items():
            key = tuple(sorted(int(k) for k in key))
            if len(key) != self.n or (key and not (0 <= key[0] and key[-1] < self.m)):
                raise ValueError(f"bad tensor index {key} for n={self.n}, m={self.m}")
            if not _is_zero(value):
                clean[key] = value
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, index):
        return self.entries.get(tuple(sorted(index)), 0)

    def dense(self) -> np.ndarray:
        arr = np.zeros((self.m,) * self.n, dtype=complex)
        for idx in product(range(self.m), repeat=self.n):
            arr[idx] = complex(self[idx])
        return arr


def state_to_tensor(state: FockState) -> SymmetricTensor:
    """A_{k_1..k_n} = alpha_v / multinomial(n; v)."""
    if state.convention != Convention.MONOMIAL:
        raise ValueError("state_to_tensor expects a MONOMIAL state")
    entries = {}
    for v, a in state.amplitudes.items():
        weight = multinomial(state.n, v)
        entries[sorted_indices(v)] = a / weight if is_exact(a) else a / float(weight)
    return SymmetricTensor(state.n, state.m, entries)


def tensor_to_state(tensor: SymmetricTensor) -> FockState:
    amps = {}
    for key, a in tensor.entries.items():
        v = occupation_of(key, tensor.m)
        amps[v] = a * multinomial(tensor.n, v)
    return FockState(tensor.n, tensor.m, amps, Convention.MONOMIAL)


def random_state(n, m, rng, exact=False, convention=Convention.MONOMIAL, denominator=8):
    """Random state for tests: complex Gaussian (float) or small Gaussian rationals."""
    basis = enumerate_occupations(n, m)
    if exact:
        vals = [GaussianRational(Fraction(int(rng.integers(-denominator, denominator + 1)), denominator),
                                 Fraction(int(rng.integers(-denominator, denominator + 1)), denominator))
                for _ in basis]
    else:
        vals = list(rng.normal(size=len(basis)) + 1j * rng.normal(size=len(basis)))
    return FockState(n, m, dict(zip(basis, vals)), convention)
