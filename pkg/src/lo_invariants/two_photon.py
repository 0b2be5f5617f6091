"""Two-photon states as symmetric matrices, and the complete n = 2 reachability test.

For n = 2 the tensor A is a symmetric m x m matrix transforming as U A U^T, so
A^dag A -> conj(U) A^dag A U^T and the spectrum of A^dag A (the squared
singular values of A) is invariant. Two states with the same singular values
are related by a unitary (Takagi factorisation), which makes the test complete.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm, logm
from scipy.optimize import least_squares

from .fock import Convention, FockState, convert, state_to_tensor
from .lo_action import haar_unitaries
from .scalars import GaussianRational, conj


def _as_monomial(state: FockState) -> FockState:
    return convert(state, Convention.MONOMIAL)


def two_photon_matrix(state: FockState) -> list[list]:
    """A with A_kk = alpha_{2e_k} and A_kj = alpha_{e_k + e_j} / 2."""
    if state.n != 2:
        raise ValueError(f"two-photon matrix needs n = 2, got n = {state.n}")
    tensor = state_to_tensor(_as_monomial(state))
    return [[tensor[(k, j)] for j in range(state.m)] for k in range(state.m)]


def _gram(a):
    m = len(a)
    return [[sum((conj(a[k][i]) * a[k][j] for k in range(m)), 0) for j in range(m)]
            for i in range(m)]


def _charpoly_exact(mat) -> list:
    """Faddeev-LeVerrier: coefficients c_1..c_m of X^m + c_1 X^{m-1} + ... + c_m."""
    m = len(mat)
    coeffs = []
    work = [[GaussianRational(0)] * m for _ in range(m)]
    for k in range(1, m + 1):
        c_prev = coeffs[-1] if coeffs else GaussianRational(1)
        # work <- mat @ (work + c_prev I)
        shifted = [[work[i][j] + (c_prev if i == j else 0) for j in range(m)] for i in range(m)]
        work = [[sum((mat[i][l] * shifted[l][j] for l in range(m)), GaussianRational(0))
                 for j in range(m)] for i in range(m)]
        trace = sum((work[i][i] for i in range(m)), GaussianRational(0))
        coeffs.append(-trace / k)
    return coeffs


def char_poly_invariants(state: FockState) -> list:
    """f_1..f_m with det(X - A^dag A) = X^m + f_1 X^{m-1} + ... + f_m.

    Exact states give Fractions, float states give floats.
    """
    if state.n != 2:
        raise ValueError(f"char-poly invariants need n = 2, got n = {state.n}")
    a = two_photon_matrix(state)
    if state.exact:
        a = [[GaussianRational.coerce(x) for x in row] for row in a]
        out = []
        for c in _charpoly_exact(_gram(a)):
            if c.im:
                raise ArithmeticError("non-real coefficient for a Hermitian matrix")
            out.append(c.re)
        return out
    arr = np.array([[complex(x) for x in row] for row in a], dtype=complex)
    return [float(c.real) for c in np.poly(arr.conj().T @ arr)[1:]]


def singular_values(state: FockState) -> np.ndarray:
    a = np.array([[complex(x) for x in row] for row in two_photon_matrix(state)], dtype=complex)
    return np.linalg.svd(a, compute_uv=False)


@dataclass(frozen=True)
class CharPolyWitness:
    """Mismatching coefficients as (k, src value, dst value), lowest k first."""

    entries: tuple

    @property
    def index(self) -> int:
        return self.entries[0][0]

    @property
    def src_value(self):
        return self.entries[0][1]

    @property
    def dst_value(self):
        return self.entries[0][2]

    def get(self, k: int):
        return next(((x, y) for i, x, y in self.entries if i == k), None)

    def to_text(self) -> str:
        return ", ".join(f"f{k}: {x} vs {y}" for k, x, y in self.entries)


@dataclass(frozen=True)
class TwoPhotonVerdict:
    reachable: bool
    witness: CharPolyWitness | None = None

    def __bool__(self):
        return self.reachable


def two_photon_reachable(src: FockState, dst: FockState, tol: float = 1e-9) -> TwoPhotonVerdict:
    """Complete test: equal spectra of A^dag A (exactly, or to tol in floating point)."""
    if (src.n, src.m) != (dst.n, dst.m):
        raise ValueError("states live in different Fock spaces")
    if src.n != 2:
        raise ValueError("two_photon_reachable needs n = 2")
    f_src, f_dst = char_poly_invariants(src), char_poly_invariants(dst)
    if src.exact and dst.exact:
        bad = tuple((k, x, y) for k, (x, y) in enumerate(zip(f_src, f_dst), start=1) if x != y)
        return TwoPhotonVerdict(not bad, CharPolyWitness(bad) if bad else None)
    f_src, f_dst = [float(x) for x in f_src], [float(y) for y in f_dst]
    gap = np.abs(np.sort(singular_values(src)) - np.sort(singular_values(dst)))
    if gap.max(initial=0.0) <= tol:
        return TwoPhotonVerdict(True)
    bad = tuple((k, x, y) for k, (x, y) in enumerate(zip(f_src, f_dst), start=1)
                if abs(x - y) > tol)
    if not bad:
        # spectra differ but every coefficient is within tol: report the worst one
        k = int(np.argmax([abs(x - y) for x, y in zip(f_src, f_dst)]))
        bad = ((k + 1, f_src[k], f_dst[k]),)
    return TwoPhotonVerdict(False, CharPolyWitness(bad))


# -- numerical search over U(m) ----------------------------------------------

def dense_tensor(state: FockState) -> np.ndarray:
    return state_to_tensor(_as_monomial(state).to_float()).dense()


def apply_dense(u: np.ndarray, tensor: np.ndarray) -> np.ndarray:
    """U acting on every leg of a dense symmetric tensor."""
    out = tensor
    for axis in range(tensor.ndim):
        out = np.moveaxis(np.tensordot(u, out, axes=([1], [axis])), 0, axis)
    return out


def _hermitian(params: np.ndarray, m: int) -> np.ndarray:
    h = np.zeros((m, m), dtype=complex)
    iu = np.triu_indices(m, 1)
    k = len(iu[0])
    h[iu] = params[:k] + 1j * params[k:2 * k]
    h = h + h.conj().T
    h[np.diag_indices(m)] = params[2 * k:]
    return h


@dataclass(frozen=True)
class OracleResult:
    found: bool
    residual: float
    unitary: np.ndarray | None = None

    def __bool__(self):
        return self.found


def _apply_batch(us: np.ndarray, tensor: np.ndarray) -> np.ndarray:
    """apply_dense for a stack of unitaries, shape (K, m, m)."""
    letters = "abcdefghij"
    n = tensor.ndim
    out = np.broadcast_to(tensor, (us.shape[0],) + tensor.shape)
    for axis in range(n):
        src = "".join(letters[:n])
        dst = src[:axis] + "z" + src[axis + 1:]
        out = np.einsum(f"kz{src[axis]},k{src}->k{dst}", us, out)
    return out


def reachability_bruteforce_oracle(src: FockState, dst: FockState, samples: int = 20,
                                   tol: float = 1e-6, seed=0, screen: int = 4000) -> OracleResult:
    """Search U = exp(iH) minimising ||rho(U) src - dst||.

    ``screen`` Haar samples are scored first and the best ``samples`` of them
    seed local least-squares refinements. The residual is measured on the
    symmetric tensors, a fixed multiple of the Fock-space distance.
    """
    if (src.n, src.m) != (dst.n, dst.m):
        raise ValueError("states live in different Fock spaces")
    m = src.m
    a, b = dense_tensor(src), dense_tensor(dst)
    scale = max(np.linalg.norm(a), np.linalg.norm(b), 1e-300)
    a, b = a / scale, b / scale

    def residual(params):
        diff = (apply_dense(expm(1j * _hermitian(params, m)), a) - b).ravel()
        return np.concatenate([diff.real, diff.imag])

    rng = np.random.default_rng(seed)
    candidates = np.concatenate([np.eye(m)[None], haar_unitaries(m, max(screen, samples), rng)])
    scores = np.linalg.norm((_apply_batch(candidates, a) - b).reshape(len(candidates), -1), axis=1)
    best, best_u = np.inf, None
    for idx in np.argsort(scores)[:samples]:
        h = -1j * logm(candidates[idx])
        h = (h + h.conj().T) / 2
        iu = np.triu_indices(m, 1)
        x0 = np.concatenate([h[iu].real, h[iu].imag, np.diag(h).real])
        fit = least_squares(residual, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=2000)
        value = float(np.linalg.norm(fit.fun))
        if value < best:
            best, best_u = value, expm(1j * _hermitian(fit.x, m))
        if best < tol:
            break
    found = best < tol
    return OracleResult(found, best, best_u if found else None)
