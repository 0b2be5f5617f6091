"""Phase-invariant monomials and their minimal generating set.

A monomial prod alpha_v^{a_v} conj(alpha_v)^{b_v} is invariant under diagonal
phases iff sum_v (a_v - b_v) v = 0. Such exponent pairs form an affine monoid
whose unique minimal generating set (Hilbert basis) is computed here by graded
completion: a balanced pair is decomposable iff some generator of lower
degree sits below it componentwise, since the difference is then balanced too.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .fock import enumerate_occupations
from .poly import Monomial, parse_monomial

BALANCED_BUDGET = 200_000


@dataclass(frozen=True)
class ExponentPair:
    """Exponents a (on alpha) and b (on conj(alpha)), keyed by occupation vectors."""

    a: tuple = ()
    b: tuple = ()

    def __post_init__(self):
        mono = Monomial(self.a, self.b)
        object.__setattr__(self, "a", mono.alpha)
        object.__setattr__(self, "b", mono.conj)

    @classmethod
    def from_monomial(cls, mono: Monomial) -> ExponentPair:
        return cls(mono.alpha, mono.conj)

    @classmethod
    def from_text(cls, text: str) -> ExponentPair:
        return cls.from_monomial(parse_monomial(text))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.a)

    @property
    def conj_degree(self) -> int:
        return sum(e for _, e in self.b)

    def weight(self) -> tuple:
        occs = [occ for occ, _ in self.a + self.b]
        if not occs:
            return ()
        w = [0] * len(occs[0])
        for sign, exps in ((1, self.a), (-1, self.b)):
            for occ, e in exps:
                for k, x in enumerate(occ):
                    w[k] += sign * e * x
        return tuple(w)

    @property
    def balanced(self) -> bool:
        return not any(self.weight()) and self.degree == self.conj_degree

    def __add__(self, other: ExponentPair) -> ExponentPair:
        return ExponentPair(self.a + other.a, self.b + other.b)

    def conjugate(self) -> ExponentPair:
        return ExponentPair(self.b, self.a)

    def divides(self, other: ExponentPair) -> bool:
        oa, ob = dict(other.a), dict(other.b)
        return (all(oa.get(v, 0) >= e for v, e in self.a)
                and all(ob.get(v, 0) >= e for v, e in self.b))

    def to_monomial(self) -> Monomial:
        return Monomial(self.a, self.b)

    def to_text(self) -> str:
        return self.to_monomial().to_text()

    def sort_key(self):
        return (self.degree, self.to_monomial().sort_key())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return self.to_text()


def _multisets_by_weight(n: int, m: int, d: int) -> dict:
    groups: dict = defaultdict(list)
    for ms in combinations_with_replacement(enumerate_occupations(n, m), d):
        w = tuple(sum(v[k] for v in ms) for k in range(m))
        groups[w].append(tuple((v, 1) for v in ms))
    return groups


def enumerate_balanced(n: int, m: int, d: int, budget: int = BALANCED_BUDGET) -> list[ExponentPair]:
    """All balanced pairs with sum(a) = sum(b) = d, in canonical order."""
    groups = _multisets_by_weight(n, m, d)
    total = sum(len(g) ** 2 for g in groups.values())
    if total > budget:
        raise ValueError(f"{total} balanced pairs of degree {d} exceed the budget {budget}")
    out = [ExponentPair(a, b) for g in groups.values() for a in g for b in g]
    return sorted(out)


# Generator lists as printed in the reference tables, with conjugates left
# implicit where the source does so. Degrees here are bidegrees d, i.e. half
# the total polynomial degree.
GOLDEN_TABLES = {
    (2, 2): [
        "a[2,0]*abar[2,0]", "a[1,1]*abar[1,1]", "a[0,2]*abar[0,2]",
        "a[1,1]^2*abar[2,0]*abar[0,2]",
    ],
    (2, 3): [
        "a[2,0,0]*abar[2,0,0]", "a[1,1,0]*abar[1,1,0]", "a[1,0,1]*abar[1,0,1]",
        "a[0,2,0]*abar[0,2,0]", "a[0,1,1]*abar[0,1,1]", "a[0,0,2]*abar[0,0,2]",
        "a[1,1,0]^2*abar[0,2,0]*abar[2,0,0]",
        "a[1,0,1]*a[1,1,0]*abar[0,1,1]*abar[2,0,0]",
        "a[1,0,1]^2*abar[0,0,2]*abar[2,0,0]",
        "a[0,2,0]*a[1,0,1]*abar[0,1,1]*abar[1,1,0]",
        "a[0,1,1]*a[1,0,1]*abar[0,0,2]*abar[1,1,0]",
        "a[0,1,1]^2*abar[0,0,2]*abar[0,2,0]",
        "a[0,2,0]*a[1,0,1]^2*abar[0,1,1]^2*abar[2,0,0]",
        "a[0,2,0]*a[1,0,1]^2*abar[0,0,2]*abar[1,1,0]^2",
        "a[0,1,1]*a[1,0,1]*a[1,1,0]*abar[0,0,2]*abar[0,2,0]*abar[2,0,0]",
        "a[0,1,1]^2*a[2,0,0]*abar[0,0,2]*abar[1,1,0]^2",
    ],
    (3, 2): [
        "a[3,0]*abar[3,0]", "a[2,1]*abar[2,1]", "a[1,2]*abar[1,2]", "a[0,3]*abar[0,3]",
        "a[2,1]^2*abar[1,2]*abar[3,0]",
        "a[1,2]*a[2,1]*abar[0,3]*abar[3,0]",
        "a[1,2]^2*abar[0,3]*abar[2,1]",
        "a[2,1]^3*abar[0,3]*abar[3,0]^2",
        "a[1,2]^3*abar[3,0]*abar[0,3]^2",
    ],
    (4, 2): [
        "a[4,0]*abar[4,0]", "a[3,1]*abar[3,1]", "a[2,2]*abar[2,2]",
        "a[1,3]*abar[1,3]", "a[0,4]*abar[0,4]",
        "a[3,1]^2*abar[2,2]*abar[4,0]",
        "a[2,2]*a[4,0]*abar[3,1]^2",
        "a[2,2]*a[3,1]*abar[1,3]*abar[4,0]",
        "a[2,2]^2*abar[1,3]*abar[3,1]",
        "a[2,2]^2*abar[0,4]*abar[4,0]",
        "a[1,3]*a[4,0]*abar[2,2]*abar[3,1]",
        "a[1,3]*a[3,1]*abar[2,2]^2",
        "a[1,3]*a[3,1]*abar[0,4]*abar[4,0]",
        "a[1,3]*a[2,2]*abar[0,4]*abar[3,1]",
        "a[1,3]^2*abar[0,4]*abar[2,2]",
        "a[0,4]*a[4,0]*abar[2,2]^2",
        "a[0,4]*a[4,0]*abar[1,3]*abar[3,1]",
        "a[0,4]*a[3,1]*abar[1,3]*abar[2,2]",
        "a[0,4]*a[2,2]*abar[1,3]^2",
        "a[3,1]^3*abar[1,3]*abar[4,0]^2",
        "a[2,2]*a[3,1]^2*abar[0,4]*abar[4,0]^2",
        "a[2,2]^3*abar[1,3]^2*abar[4,0]",
        "a[2,2]^3*abar[0,4]*abar[3,1]^2",
        "a[1,3]*a[4,0]^2*abar[3,1]^3",
        "a[1,3]^2*a[4,0]*abar[2,2]^3",
        "a[1,3]^2*a[4,0]*abar[0,4]*abar[3,1]^2",
        "a[1,3]^2*a[2,2]*abar[0,4]^2*abar[4,0]",
        "a[1,3]^3*abar[0,4]^2*abar[3,1]",
        "a[0,4]*a[4,0]^2*abar[2,2]*abar[3,1]^2",
        "a[0,4]*a[3,1]^2*abar[2,2]^3",
        "a[0,4]*a[3,1]^2*abar[1,3]^2*abar[4,0]",
        "a[0,4]^2*a[4,0]*abar[1,3]^2*abar[2,2]",
        "a[0,4]^2*a[3,1]*abar[1,3]^3",
        "a[3,1]^4*abar[0,4]*abar[4,0]^3",
        "a[1,3]^4*abar[0,4]^3*abar[4,0]",
        "a[0,4]*a[4,0]^3*abar[3,1]^4",
        "a[0,4]^3*a[4,0]*abar[1,3]^4",
    ],
}

GOLDEN_COUNTS = {(2, 2): 5, (2, 3): 26, (3, 2): 14, (4, 2): 37}


def golden_generators(n: int, m: int) -> list[ExponentPair]:
    """Reference generating set for (n, m), closed under conjugation."""
    listed = [ExponentPair.from_text(t) for t in GOLDEN_TABLES[(n, m)]]
    return sorted(set(listed) | {g.conjugate() for g in listed})


def golden_max_degree(n: int, m: int) -> int:
    return max(g.degree for g in golden_generators(n, m))


def default_degree_cap(n: int, m: int) -> int:
    """4, or one past the largest reference degree so completeness can be certified."""
    if (n, m) in GOLDEN_TABLES:
        return max(4, golden_max_degree(n, m) + 1)
    return 4


@dataclass(frozen=True)
class HilbertBasis:
    n: int
    m: int
    generators: tuple
    degree_cap: int
    certified: bool
    note: str

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def degree_profile(self) -> dict:
        profile: dict = {}
        for g in self.generators:
            profile[g.degree] = profile.get(g.degree, 0) + 1
        return dict(sorted(profile.items()))


def hilbert_basis(n: int, m: int, degree_cap: int | None = None,
                  budget: int = BALANCED_BUDGET) -> HilbertBasis:
    """Minimal generators of the balanced monoid among pairs of degree <= degree_cap."""
    if degree_cap is None:
        degree_cap = default_degree_cap(n, m)
    if degree_cap < 1:
        raise ValueError("degree_cap must be at least 1")
    gens: list[ExponentPair] = []
    top_new = 0
    for d in range(1, degree_cap + 1):
        fresh = [p for p in enumerate_balanced(n, m, d, budget)
                 if not any(g.divides(p) for g in gens)]
        if fresh:
            top_new = d
        gens.extend(fresh)
    if n == 1:
        certified, note = True, "n = 1: balance forces a = b, so the diagonal pairs generate"
    elif top_new == degree_cap:
        certified, note = False, f"new generators still appear at the cap {degree_cap}; raise it"
    elif (n, m) in GOLDEN_TABLES and degree_cap > golden_max_degree(n, m):
        certified, note = True, (f"no generator at degree {degree_cap}, beyond the largest "
                                 f"reference degree {golden_max_degree(n, m)}")
    else:
        certified, note = False, (f"complete up to degree {degree_cap} only; no completeness "
                                  f"claim beyond it")
    return HilbertBasis(n, m, tuple(gens), degree_cap, certified, note)


def compare_golden(basis: HilbertBasis) -> tuple[bool, list, list]:
    """(match, missing from basis, extra in basis) against the reference table."""
    golden = set(golden_generators(basis.n, basis.m))
    found = set(basis.generators)
    return golden == found, sorted(golden - found), sorted(found - golden)


def verify_relation(lhs, rhs) -> bool:
    """True iff the products (sums of exponent pairs) on both sides coincide."""
    total_l, total_r = ExponentPair(), ExponentPair()
    for p in lhs:
        total_l = total_l + p
    for p in rhs:
        total_r = total_r + p
    return total_l == total_r


def monoid_count(generators, d: int) -> int:
    """Number of distinct balanced pairs of degree d that are sums of generators."""
    level = {ExponentPair()}
    reached = [level]
    for k in range(1, d + 1):
        nxt = set()
        for g in generators:
            if g.degree <= k:
                for p in reached[k - g.degree]:
                    nxt.add(p + g)
        reached.append(nxt)
    return len(reached[d])
