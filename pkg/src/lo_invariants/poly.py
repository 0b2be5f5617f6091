"""Polynomials in the amplitudes alpha_v and their conjugates.

Conjugate variables are independent formal symbols. A monomial records two
exponent maps, one for the alpha_v and one for the conj(alpha_v), both keyed
by occupation vectors. Coefficients are exact (Fraction or GaussianRational).

Canonical text form, used by the CLI::

    3/2*a[2,0]^2*abar[1,1] - (1/2+1/3i)*a[0,2]*abar[0,2]

Terms are ordered by bidegree and then lexicographically by monomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .fock import Convention, FockState, enumerate_occupations, factorial_weight
from .scalars import GaussianRational, conj, format_scalar, parse_gaussian


def _freeze(exps) -> tuple:
    if isinstance(exps, dict):
        items = exps.items()
    else:
        items = exps
    merged: dict = {}
    for occ, e in items:
        occ = tuple(int(x) for x in occ)
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            merged[occ] = merged.get(occ, 0) + int(e)
    return tuple(sorted(merged.items(), key=lambda kv: tuple(-x for x in kv[0])))


@dataclass(frozen=True, order=False)
class Monomial:
    """prod alpha_v^{a_v} * prod conj(alpha_v)^{b_v}."""

    alpha: tuple = ()
    conj: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "alpha", _freeze(self.alpha))
        object.__setattr__(self, "conj", _freeze(self.conj))

    @property
    def bidegree(self) -> tuple[int, int]:
        return sum(e for _, e in self.alpha), sum(e for _, e in self.conj)

    @property
    def alpha_exps(self) -> dict:
        return dict(self.alpha)

    @property
    def conj_exps(self) -> dict:
        return dict(self.conj)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.alpha + other.alpha, self.conj + other.conj)

    def conjugate(self) -> Monomial:
        return Monomial(self.conj, self.alpha)

    def sort_key(self):
        # descending occupation order inside, so negate for a stable ascending key
        return (self.bidegree,
                tuple((tuple(-x for x in occ), -e) for occ, e in self.alpha),
                tuple((tuple(-x for x in occ), -e) for occ, e in self.conj))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_text(self) -> str:
        parts = []
        for name, exps in (("a", self.alpha), ("abar", self.conj)):
            for occ, e in exps:
                var = f"{name}[{','.join(map(str, occ))}]"
                parts.append(var if e == 1 else f"{var}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.to_text()


def phase_weight(mono: Monomial) -> tuple[int, ...]:
    """sum_v (a_v - b_v) v: the exponent vector picked up under diagonal phases."""
    occs = [occ for occ, _ in mono.alpha] + [occ for occ, _ in mono.conj]
    if not occs:
        return ()
    m = len(occs[0])
    w = [0] * m
    for occ, e in mono.alpha:
        for k in range(m):
            w[k] += e * occ[k]
    for occ, e in mono.conj:
        for k in range(m):
            w[k] -= e * occ[k]
    return tuple(w)


def _clean(c):
    if isinstance(c, GaussianRational):
        return c.re if not c.im else c
    if isinstance(c, int):
        return Fraction(c)
    return c


class Polynomial:
    """Sparse polynomial: a dict Monomial -> exact coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            if c != 0:
                clean[mono] = _clean(c)
        self.terms = clean

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls({Monomial(): c})

    @classmethod
    def from_monomial(cls, mono: Monomial, c=1) -> Polynomial:
        return cls({mono: c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Rational, GaussianRational)):
                other = Polynomial.constant(other)
            else:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = m1 * m2
                out[key] = out.get(key, 0) + c1 * c2
        return Polynomial(out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, scalar):
        return Polynomial({k: v / scalar for k, v in self.terms.items()})

    def __pow__(self, k: int):
        result = Polynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def conjugate(self) -> Polynomial:
        return Polynomial({mono.conjugate(): conj(c) for mono, c in self.terms.items()})

    def bidegrees(self) -> set:
        return {mono.bidegree for mono in self.terms}

    def component(self, bidegree) -> Polynomial:
        bidegree = tuple(bidegree)
        return Polynomial({k: v for k, v in self.terms.items() if k.bidegree == bidegree})

    def components(self) -> dict:
        return {bd: self.component(bd) for bd in sorted(self.bidegrees())}

    @property
    def bidegree(self) -> tuple[int, int]:
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError(f"polynomial is not bihomogeneous: {sorted(degs)}")
        return next(iter(degs))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            negative = False
            if isinstance(c, GaussianRational):
                coef = f"({format_scalar(c)})"
            else:
                negative = c < 0
                coef = format_scalar(-c if negative else c)
            body = mono.to_text()
            if body == "1":
                term = coef
            elif coef == "1":
                term = body
            else:
                term = f"{coef}*{body}"
            if i == 0:
                pieces.append(("-" if negative else "") + term)
            else:
                pieces.append((" - " if negative else " + ") + term)
        return "".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def evaluate(self, state: FockState):
        """Value at a MONOMIAL state; conj variables take conjugated amplitudes."""
        if state.convention != Convention.MONOMIAL:
            raise ValueError("evaluate expects a MONOMIAL state")
        total = 0
        for mono, c in self.terms.items():
            term = c
            for occ, e in mono.alpha:
                _check_dims(occ, state)
                term = term * state[occ] ** e
            for occ, e in mono.conj:
                _check_dims(occ, state)
                term = term * conj(state[occ]) ** e
            total = total + term
        return total


def _check_dims(occ, state: FockState):
    if len(occ) != state.m or sum(occ) != state.n:
        raise ValueError(f"variable {occ} does not belong to n={state.n}, m={state.m}")


def evaluate(poly: Polynomial, state: FockState):
    return poly.evaluate(state)


class BatchEvaluator:
    """Vectorised float evaluation of one polynomial at many states.

    States are rows of coefficients in :func:`enumerate_occupations` order.
    """

    def __init__(self, poly: Polynomial, n: int, m: int):
        basis = enumerate_occupations(n, m)
        index = {v: i for i, v in enumerate(basis)}
        monos = list(poly.terms)
        self.coeffs = np.array([complex(poly.terms[mo]) for mo in monos], dtype=complex)
        self.alpha = np.zeros((len(monos), len(basis)), dtype=int)
        self.conj = np.zeros((len(monos), len(basis)), dtype=int)
        for t, mo in enumerate(monos):
            for occ, e in mo.alpha:
                self.alpha[t, index[occ]] = e
            for occ, e in mo.conj:
                self.conj[t, index[occ]] = e

    def __call__(self, states: np.ndarray) -> np.ndarray:
        states = np.atleast_2d(np.asarray(states, dtype=complex))
        acc = np.ones((states.shape[0], len(self.coeffs)), dtype=complex)
        for v in range(states.shape[1]):
            for exps, vals in ((self.alpha[:, v], states[:, v]), (self.conj[:, v], states[:, v].conj())):
                if exps.any():
                    acc *= vals[:, None] ** exps[None, :]
        return acc @ self.coeffs


def norm_polynomial(n: int, m: int) -> Polynomial:
    """sum_v n_1!...n_m! |alpha_v|^2."""
    return Polynomial({Monomial({v: 1}, {v: 1}): factorial_weight(v)
                       for v in enumerate_occupations(n, m)})


# -- exact linear algebra ------------------------------------------------------

class SparseEchelon:
    """Incremental row echelon form over exact scalars, rows as sparse dicts."""

    def __init__(self, key=None):
        self.rows: dict = {}
        self.key = key or (lambda k: k)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        vec = {k: v for k, v in vec.items() if v != 0}
        while vec:
            lead = max(vec, key=self.key)
            row = self.rows.get(lead)
            if row is None:
                return vec
            f = vec[lead]
            for k, v in row.items():
                nv = vec.get(k, 0) - f * v
                if nv == 0:
                    vec.pop(k, None)
                else:
                    vec[k] = nv
        return vec

    def add(self, vec: dict) -> bool:
        """Insert vec; return True when it enlarged the span."""
        rest = self.reduce(vec)
        if not rest:
            return False
        lead = max(rest, key=self.key)
        p = rest[lead]
        self.rows[lead] = {k: v / p for k, v in rest.items()}
        return True


def _mono_key(mono: Monomial):
    return mono.sort_key()


def span_echelon() -> SparseEchelon:
    return SparseEchelon(key=_mono_key)


def exponent_vectors(degrees, target):
    """Nonnegative integer vectors e with sum_i e_i * degrees[i] == target (bidegrees)."""
    degrees = list(degrees)

    def rec(i, remaining):
        if i == len(degrees):
            if remaining == (0, 0):
                yield ()
            return
        d1, d2 = degrees[i]
        top = min(remaining[0] // d1 if d1 else 10**9, remaining[1] // d2 if d2 else 10**9)
        for e in range(top, -1, -1):
            for rest in rec(i + 1, (remaining[0] - e * d1, remaining[1] - e * d2)):
                yield (e,) + rest

    return rec(0, tuple(target))


def graded_products(polys, bidegree):
    """Products of the bihomogeneous parts of ``polys`` landing in ``bidegree``."""
    parts = []
    for p in polys:
        for bd, comp in p.components().items():
            if bd != (0, 0) and comp:
                parts.append((bd, comp))
    if tuple(bidegree) == (0, 0):
        yield Polynomial.constant(1)
        return
    degrees = [bd for bd, _ in parts]
    powers: dict = {}
    for exps in exponent_vectors(degrees, tuple(bidegree)):
        result = Polynomial.constant(1)
        for i, e in enumerate(exps):
            if e:
                if (i, e) not in powers:
                    powers[(i, e)] = parts[i][1] ** e
                result = result * powers[(i, e)]
        yield result


def graded_span_dim(polys, bidegree) -> int:
    """Dimension of the span of all products of ``polys`` in one bidegree.

    The empty product counts, so bidegree (0, 0) always gives 1.
    """
    ech = span_echelon()
    for p in graded_products(polys, bidegree):
        ech.add(p.terms)
    return len(ech)


# -- text parsing ----------------------------------------------------------------

_FACTOR = re.compile(r"^(abar|a)\[([0-9,\s]+)\](?:\^(\d+))?$")


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text in ("", "1"):
        return Monomial()
    alpha: dict = {}
    conj_: dict = {}
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"malformed monomial factor {factor!r}")
        name, occ, e = match.groups()
        occ = tuple(int(x) for x in occ.split(","))
        target = conj_ if name == "abar" else alpha
        target[occ] = target.get(occ, 0) + int(e or 1)
    return Monomial(alpha, conj_)


def _split_terms(text: str):
    depth = 0
    start = 0
    sign = 1
    out = []
    s = text.strip()
    i = 0
    if s.startswith("-"):
        sign, i, start = -1, 1, 1
    elif s.startswith("+"):
        i, start = 1, 1
    while i < len(s):
        ch = s[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and s[i - 1] not in "eE/*":
            out.append((sign, s[start:i]))
            sign = 1 if ch == "+" else -1
            start = i + 1
        i += 1
    out.append((sign, s[start:]))
    return [(sg, t.strip()) for sg, t in out if t.strip()]


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_text`."""
    if text.strip() == "0":
        return Polynomial()
    terms: dict = {}
    for sign, term in _split_terms(text):
        if term.startswith("("):
            close = term.index(")")
            coef = parse_gaussian(term[: close + 1])
            rest = term[close + 1:].lstrip("*")
        else:
            head, _, tail = term.partition("*")
            if head and (head[0].isdigit() or head[0] == "."):
                coef = parse_gaussian(head)
                rest = tail
            else:
                coef = GaussianRational(1)
                rest = term
        mono = parse_monomial(rest)
        terms[mono] = terms.get(mono, 0) + coef * sign
    return Polynomial(terms)

