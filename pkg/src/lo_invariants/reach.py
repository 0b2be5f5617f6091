"""Deciding whether one Fock state can be turned into another by a linear-optical circuit."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fock import Convention, FockState, convert, norm_sq
from .poly import Polynomial, norm_polynomial
from .scalars import format_scalar
from .tensor_inv import build_generating_set
from .two_photon import reachability_bruteforce_oracle, two_photon_reachable


class Status(str, enum.Enum):
    REACHABLE = "REACHABLE"
    UNREACHABLE = "UNREACHABLE"
    UNDECIDED = "UNDECIDED"


class Method(str, enum.Enum):
    NORM_N1 = "NORM_N1"
    SINGULAR_VALUES_N2 = "SINGULAR_VALUES_N2"
    INVARIANT_COMPARISON = "INVARIANT_COMPARISON"


@dataclass(frozen=True)
class Witness:
    """An invariant that separates the two states, with its two values."""

    name: str
    src_value: object
    dst_value: object
    polynomial: Polynomial | None = None

    def to_text(self) -> str:
        return f"{self.name}: {_fmt(self.src_value)} vs {_fmt(self.dst_value)}"


@dataclass(frozen=True)
class ReachVerdict:
    status: Status
    method: Method
    degree_explored: int
    witness: Witness | None = None
    extra_witnesses: tuple = ()
    unitary: np.ndarray | None = None

    def __post_init__(self):
        if self.status == Status.UNREACHABLE and self.witness is None:
            raise ValueError("an UNREACHABLE verdict needs a witness")

    def report(self) -> dict:
        out = {"status": self.status.value, "method": self.method.value,
               "degree_explored": self.degree_explored}
        if self.witness is not None:
            out["witness"] = {"name": self.witness.name,
                              "src": _fmt(self.witness.src_value),
                              "dst": _fmt(self.witness.dst_value)}
            if self.witness.polynomial is not None:
                out["witness"]["polynomial"] = self.witness.polynomial.to_text()
        if self.extra_witnesses:
            out["other_mismatches"] = [w.to_text() for w in self.extra_witnesses]
        if self.unitary is not None:
            out["unitary"] = [[_fmt(complex(x)) for x in row] for row in self.unitary]
        return out


def _fmt(value) -> str:
    if isinstance(value, (float, complex, np.floating, np.complexfloating)):
        z = complex(value)
        if abs(z.imag) <= 1e-12 * max(1.0, abs(z.real)):
            return f"{z.real:.12g}"
        return f"{z.real:.12g}{z.imag:+.12g}i"
    return format_scalar(value)


@lru_cache(maxsize=None)
def _generators(n: int, m: int, D: int):
    return build_generating_set(n, m, D)


def _close(x, y, tol: float, degree: int, exact: bool) -> bool:
    if exact:
        return x == y
    scale = 1 + max(abs(complex(x)), abs(complex(y)))
    return abs(complex(x) - complex(y)) <= tol * max(degree, 1) * scale


def decide_reachability(src: FockState, dst: FockState, D: int = 3, tol: float = 1e-8,
                        seed=0, restarts: int = 20) -> ReachVerdict:
    """REACHABLE / UNREACHABLE (with witness) / UNDECIDED at degree D.

    n = 1 and n = 2 use complete criteria. For n >= 3 a mismatch of any
    generating invariant up to degree D proves unreachability; agreement alone
    proves nothing, so REACHABLE then needs an explicit unitary from the
    numerical search.
    """
    if (src.n, src.m) != (dst.n, dst.m):
        raise ValueError(f"states live in different spaces: (n, m) = {(src.n, src.m)} vs {(dst.n, dst.m)}")
    n, m = src.n, src.m
    src = convert(src, Convention.MONOMIAL)
    dst = convert(dst, Convention.MONOMIAL)
    exact = src.exact and dst.exact
    if n == 1:
        a, b = norm_sq(src), norm_sq(dst)
        if _close(a, b, tol, 1, exact):
            return ReachVerdict(Status.REACHABLE, Method.NORM_N1, 1)
        return ReachVerdict(Status.UNREACHABLE, Method.NORM_N1, 1,
                            Witness("norm", a, b, norm_polynomial(1, m)))
    if n == 2:
        verdict = two_photon_reachable(src, dst, tol=max(tol, 1e-12))
        if verdict:
            return ReachVerdict(Status.REACHABLE, Method.SINGULAR_VALUES_N2, 1)
        ws = [Witness(f"f{k}", x, y) for k, x, y in verdict.witness.entries]
        return ReachVerdict(Status.UNREACHABLE, Method.SINGULAR_VALUES_N2, 1, ws[0], tuple(ws[1:]))
    gens = _generators(n, m, D)
    mismatches = []
    for g in gens:
        x, y = g.polynomial.evaluate(src), g.polynomial.evaluate(dst)
        if not _close(x, y, tol, g.degree, exact):
            mismatches.append((g.degree, g.polynomial.to_text(), Witness(g.source, x, y, g.polynomial)))
    if mismatches:
        mismatches.sort(key=lambda t: (t[0], t[1]))
        ws = [w for _, _, w in mismatches]
        return ReachVerdict(Status.UNREACHABLE, Method.INVARIANT_COMPARISON, D, ws[0], tuple(ws[1:]))
    found = reachability_bruteforce_oracle(src, dst, samples=restarts, seed=seed)
    if found:
        return ReachVerdict(Status.REACHABLE, Method.INVARIANT_COMPARISON, D, unitary=found.unitary)
    return ReachVerdict(Status.UNDECIDED, Method.INVARIANT_COMPARISON, D)
