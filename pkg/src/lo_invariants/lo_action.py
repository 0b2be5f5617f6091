"""Action of m x m unitaries (linear-optical circuits) on Fock states."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .fock import Convention, FockState, SymmetricTensor, convert
from .scalars import GaussianRational, abs2, conj, is_exact


@dataclass(frozen=True)
class ModeUnitary:
    """An m x m unitary, exact (Gaussian rationals) or floating point."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("unitary must be a nonempty square matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_array(cls, array) -> ModeUnitary:
        array = np.asarray(array, dtype=complex)
        return cls(tuple(tuple(complex(x) for x in row) for row in array))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def exact(self) -> bool:
        return all(is_exact(x) for row in self.entries for x in row)

    def __getitem__(self, jk):
        j, k = jk
        return self.entries[j][k]

    def array(self) -> np.ndarray:
        return np.array([[complex(x) for x in row] for row in self.entries], dtype=complex)

    def __matmul__(self, other: ModeUnitary) -> ModeUnitary:
        m = self.m
        return ModeUnitary(tuple(
            tuple(sum((self.entries[i][k] * other.entries[k][j] for k in range(m)), 0)
                  for j in range(m))
            for i in range(m)))

    def dagger(self) -> ModeUnitary:
        m = self.m
        return ModeUnitary(tuple(tuple(conj(self.entries[j][i]) for j in range(m)) for i in range(m)))

    def unitarity_defect(self):
        """max |(U^dag U - I)_{ij}|, exact zero for exact unitaries."""
        prod_ = self.dagger() @ self
        worst = 0
        for i in range(self.m):
            for j in range(self.m):
                delta = prod_.entries[i][j] - (1 if i == j else 0)
                worst = max(worst, abs2(delta))
        return worst if isinstance(worst, Fraction) else float(np.sqrt(worst))


def as_unitary(u) -> ModeUnitary:
    if isinstance(u, ModeUnitary):
        return u
    if isinstance(u, np.ndarray):
        return ModeUnitary.from_array(u)
    return ModeUnitary(u)


def identity(m: int, exact: bool = True) -> ModeUnitary:
    one, zero = (GaussianRational(1), GaussianRational(0)) if exact else (1 + 0j, 0j)
    return ModeUnitary(tuple(tuple(one if i == j else zero for j in range(m)) for i in range(m)))


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for kp, cp in p.items():
        for kq, cq in q.items():
            key = tuple(a + b for a, b in zip(kp, kq))
            out[key] = out.get(key, 0) + cp * cq
    return out


def _basis_image(u: ModeUnitary, v, cache: dict) -> dict:
    """Coefficients of prod_k (sum_j U_{jk} x_j)^{v_k} in the monomials x^w."""
    m = u.m
    out = {tuple([0] * m): 1}
    for k, power in enumerate(v):
        if power == 0:
            continue
        key = (k, power)
        if key not in cache:
            if (k, 1) not in cache:
                cache[(k, 1)] = {
                    tuple(1 if i == j else 0 for i in range(m)): u.entries[j][k]
                    for j in range(m) if u.entries[j][k] != 0
                }
            acc = cache[(k, 1)]
            for _ in range(power - 1):
                acc = _poly_mul(acc, cache[(k, 1)])
            cache[key] = acc
        out = _poly_mul(out, cache[key])
    return out


def apply_unitary(u, state: FockState) -> FockState:
    """rho(U)|state>: substitute a_k^dag -> sum_j U_{jk} a_j^dag and re-expand.

    KET inputs are converted to MONOMIAL coefficients, transformed, and
    returned in the KET convention.
    """
    u = as_unitary(u)
    if u.m != state.m:
        raise ValueError(f"unitary is {u.m}x{u.m} but state has {state.m} modes")
    mono = convert(state, Convention.MONOMIAL)
    cache: dict = {}
    out: dict = {}
    for v, a in mono.amplitudes.items():
        for w, c in _basis_image(u, v, cache).items():
            out[w] = out.get(w, 0) + a * c
    result = FockState(state.n, state.m, out, Convention.MONOMIAL)
    return convert(result, state.convention)


def apply_phase(phases, state: FockState, tol: float = 1e-12) -> FockState:
    """Diagonal unitary: alpha_v -> omega_1^{n_1}...omega_m^{n_m} alpha_v."""
    phases = list(phases)
    if len(phases) != state.m:
        raise ValueError("need one phase per mode")
    for w in phases:
        if is_exact(w):
            if abs2(w) != 1:
                raise ValueError(f"phase {w} does not have unit modulus")
        elif abs(abs(complex(w)) - 1) > tol:
            raise ValueError(f"phase {w} does not have unit modulus")
    amps = {}
    for v, a in state.amplitudes.items():
        factor = 1
        for w, power in zip(phases, v):
            factor = factor * w**power
        amps[v] = a * factor
    return FockState(state.n, state.m, amps, state.convention)


def tensor_apply(u, tensor: SymmetricTensor) -> SymmetricTensor:
    """(U.A)_{k_1..k_n} = sum_j U_{k_1 j_1} ... U_{k_n j_n} A_{j_1..j_n}."""
    u = as_unitary(u)
    if u.m != tensor.m:
        raise ValueError("dimension mismatch")
    m, n = tensor.m, tensor.n
    out = {}
    for k in product(range(m), repeat=n):
        if list(k) != sorted(k):
            continue
        total = 0
        for j in product(range(m), repeat=n):
            a = tensor[j]
            if a == 0:
                continue
            term = a
            for ki, ji in zip(k, j):
                term = term * u.entries[ki][ji]
            total = total + term
        out[k] = total
    return SymmetricTensor(n, m, out)


def haar_unitaries(m: int, size: int, rng) -> np.ndarray:
    """``size`` Haar-distributed m x m unitaries as an array (size, m, m)."""
    z = (rng.normal(size=(size, m, m)) + 1j * rng.normal(size=(size, m, m))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=1, axis2=2)
    return q * (diag / np.abs(diag))[:, None, :]


def random_haar_unitary(m: int, seed=None) -> ModeUnitary:
    """Haar-random unitary via QR of a complex Ginibre matrix with phase-fixed R."""
    if m < 1:
        raise ValueError("m must be positive")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return ModeUnitary.from_array(haar_unitaries(m, 1, rng)[0])


def random_exact_unitary(m: int, rng, bound: int = 3) -> ModeUnitary:
    """Random unitary with Gaussian-rational entries (Cayley transform).

    For anti-Hermitian K with Gaussian-rational entries, (I - K)(I + K)^{-1}
    is unitary and stays exact.
    """
    k = [[GaussianRational(0)] * m for _ in range(m)]
    for i in range(m):
        k[i][i] = GaussianRational(0, Fraction(int(rng.integers(-bound, bound + 1)), 2))
        for j in range(i + 1, m):
            z = GaussianRational(Fraction(int(rng.integers(-bound, bound + 1)), 2),
                                 Fraction(int(rng.integers(-bound, bound + 1)), 2))
            k[i][j] = z
            k[j][i] = -z.conjugate()
    eye = [[GaussianRational(1 if i == j else 0) for j in range(m)] for i in range(m)]
    plus = [[eye[i][j] + k[i][j] for j in range(m)] for i in range(m)]
    minus = [[eye[i][j] - k[i][j] for j in range(m)] for i in range(m)]
    inv = _exact_inverse(plus)
    u = [[sum((minus[i][l] * inv[l][j] for l in range(m)), GaussianRational(0)) for j in range(m)]
         for i in range(m)]
    return ModeUnitary(tuple(tuple(row) for row in u))


def _exact_inverse(a):
    m = len(a)
    aug = [list(row) + [GaussianRational(1 if i == j else 0) for j in range(m)]
           for i, row in enumerate(a)]
    for col in range(m):
        pivot = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


def induced_matrix(u, n: int) -> np.ndarray:
    """rho(U) on MONOMIAL coefficient vectors in :func:`enumerate_occupations` order."""
    from .fock import enumerate_occupations

    u = as_unitary(u)
    if u.exact:
        u = ModeUnitary.from_array(u.array())
    basis = enumerate_occupations(n, u.m)
    index = {v: i for i, v in enumerate(basis)}
    out = np.zeros((len(basis), len(basis)), dtype=complex)
    cache: dict = {}
    for col, v in enumerate(basis):
        for w, c in _basis_image(u, v, cache).items():
            out[index[w], col] += c
    return out
