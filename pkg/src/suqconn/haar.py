"""Haar state of SU_q(2) and its product extension to graph algebras.

The default ("oracle") mode obtains the table by solving the two-sided
invariance equations

    (h (x) id) Phi(x) = h(x) I = (id (x) h) Phi(x)

for every basis monomial ``x`` up to a degree cap, plus ``h(I) = 1``.
Comultiplication preserves the left/right weight grading, so the sparse
system splits into many tiny independent blocks, each solved exactly.

The "closed" mode uses ``h(a^k g^m g*^n) = [k = 0][m = n] (1 - q^2)/(1 - q^(2m+2))``
and exists only as a cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cylinder import GraphElement, push
from .graphs import Graph
from .hopf import H, UNIT, HopfElement, Monomial, SUq2, monomials_up_to
from .morphisms import Morphism, fundamental_matrix
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "HaarState",
    "NonUniqueError",
    "haar",
    "haar_graph",
    "pushforward_check",
    "orthogonality",
    "OrthogonalityEntry",
    "closed_form",
    "haar_state",
]


class NonUniqueError(ArithmeticError):
    """The invariance equations did not pin down a unique normalized state."""


def closed_form(alg: SUq2, mono: Monomial) -> Scalar:
    if mono.a != 0 or mono.m != mono.n:
        return ZERO
    q2 = alg.qpow(2)
    one = ONE
    if alg.symbolic:
        return (one - q2) / (one - alg.qpow(2 * mono.m + 2))
    # specialize the reduced form; (1 - q^2)/(1 - q^(2m+2)) = 1/(1 + q^2 + ... + q^(2m))
    total = ZERO
    for k in range(mono.m + 1):
        total = total + alg.qpow(2 * k)
    return one / total


class _Block:
    """Incremental row echelon form over a small set of columns."""

    __slots__ = ("cols", "pivots")

    def __init__(self, cols):
        self.cols = cols
        self.pivots: dict[Monomial, dict[Monomial, Scalar]] = {}

    @property
    def full(self) -> bool:
        return len(self.pivots) == len(self.cols)

    def add(self, row: dict[Monomial, Scalar]) -> None:
        row = dict(row)
        for p, prow in self.pivots.items():
            c = row.get(p)
            if c is not None:
                for k, v in prow.items():
                    nv = row.get(k, ZERO) - c * v
                    if nv.is_zero():
                        row.pop(k, None)
                    else:
                        row[k] = nv
        if not row:
            return
        piv = min(row, key=Monomial.sort_key)
        inv = row[piv].inverse()
        row = {k: v * inv for k, v in row.items()}
        for p, prow in self.pivots.items():
            c = prow.get(piv)
            if c is not None:
                for k, v in row.items():
                    nv = prow.get(k, ZERO) - c * v
                    if nv.is_zero():
                        prow.pop(k, None)
                    else:
                        prow[k] = nv
        self.pivots[piv] = row

    def nullspace(self) -> list[dict[Monomial, Scalar]]:
        free = [c for c in self.cols if c not in self.pivots]
        out = []
        for f in free:
            v = {f: ONE}
            for p, prow in self.pivots.items():
                c = prow.get(f)
                if c is not None:
                    v[p] = -c
            out.append(v)
        return out


class HaarState:
    """Memoized Haar table for one algebra."""

    def __init__(self, alg: SUq2 = H, mode: str = "oracle"):
        if mode not in ("oracle", "closed"):
            raise ValueError("mode must be 'oracle' or 'closed'")
        self.alg = alg
        self.mode = mode
        self.cap = -1
        self.table: dict[Monomial, Scalar] = {}
        self.nullity: int | None = None

    def equations(self, cap: int):
        """Rows ``{unknown: coefficient}`` of the homogeneous invariance system."""
        alg = self.alg
        rows = []
        for x in monomials_up_to(cap):
            comul = alg.comul_monomial(x)
            for side in (0, 1):
                acc: dict[Monomial, dict[Monomial, Scalar]] = {UNIT: {}}
                for (m1, m2), c in comul.items():
                    known, free = (m2, m1) if side == 0 else (m1, m2)
                    row = acc.setdefault(known, {})
                    row[free] = row.get(free, ZERO) + c
                acc[UNIT][x] = acc[UNIT].get(x, ZERO) - ONE
                for row in acc.values():
                    row = {k: v for k, v in row.items() if not v.is_zero()}
                    if row:
                        rows.append(row)
        return rows

    def solve(self, cap: int) -> None:
        """Solve the invariance system over all monomials of degree <= ``cap``."""
        if cap <= self.cap:
            return
        if self.mode == "closed":
            for x in monomials_up_to(cap):
                self.table[x] = closed_form(self.alg, x)
            self.cap = cap
            return
        rows = self.equations(cap)
        unknowns = monomials_up_to(cap)
        parent = {u: u for u in unknowns}

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for row in rows:
            keys = list(row)
            r0 = find(keys[0])
            for k in keys[1:]:
                rk = find(k)
                if rk != r0:
                    parent[rk] = r0
        blocks: dict[Monomial, _Block] = {}
        members: dict[Monomial, list[Monomial]] = {}
        for u in unknowns:
            members.setdefault(find(u), []).append(u)
        for root, cols in members.items():
            blocks[root] = _Block(cols)
        for row in rows:
            b = blocks[find(next(iter(row)))]
            if not b.full:
                b.add(row)
        table: dict[Monomial, Scalar] = {u: ZERO for u in unknowns}
        nullity = 0
        for root, b in blocks.items():
            basis = b.nullspace()
            nullity += len(basis)
            if not basis:
                continue
            if len(basis) > 1 or UNIT not in b.cols:
                raise NonUniqueError(f"invariance system has extra solutions at cap {cap}")
            v = basis[0]
            norm = v.get(UNIT, ZERO)
            if norm.is_zero():
                raise NonUniqueError("invariant functional vanishes on the unit")
            inv = norm.inverse()
            for k, c in v.items():
                table[k] = c * inv
        if nullity != 1:
            raise NonUniqueError(f"solution space has dimension {nullity}")
        self.nullity = nullity
        self.table = table
        self.cap = cap

    def monomial(self, mono: Monomial) -> Scalar:
        mono = Monomial(*mono)
        if mono.degree > self.cap:
            self.solve(mono.degree + 2 if self.mode == "oracle" else mono.degree)
        return self.table[mono]

    def __call__(self, x: HopfElement) -> Scalar:
        if x.alg is not self.alg:
            raise ValueError("element belongs to a different algebra")
        need = x.degree()
        if need > self.cap:
            self.solve(need + 2 if self.mode == "oracle" else need)
        total = ZERO
        for mono, c in x.terms.items():
            v = self.table[mono]
            if not v.is_zero():
                total = total + c * v
        return total

    def graph(self, x: GraphElement) -> Scalar:
        """Product state ``h (x) ... (x) h`` on a graph algebra."""
        need = max((m.degree for key in x.value.terms for m in key), default=0)
        if need > self.cap:
            self.solve(need + 2 if self.mode == "oracle" else need)
        total = ZERO
        for key, c in x.value.terms.items():
            v = c
            for m in key:
                hv = self.table[m]
                if hv.is_zero():
                    v = ZERO
                    break
                v = v * hv
            if not v.is_zero():
                total = total + v
        return total


_STATES: dict[tuple[int, str], HaarState] = {}


def haar_state(alg: SUq2 = H, mode: str = "oracle") -> HaarState:
    key = (id(alg), mode)
    st = _STATES.get(key)
    if st is None or st.alg is not alg:
        st = _STATES[key] = HaarState(alg, mode)
    return st


def haar(x, alg: SUq2 | None = None, mode: str = "oracle") -> Scalar:
    """Haar state of a HopfElement or a basis monomial."""
    if isinstance(x, HopfElement):
        return haar_state(x.alg, mode)(x)
    return haar_state(alg or H, mode).monomial(Monomial(*x))


def haar_graph(x: GraphElement, mode: str = "oracle") -> Scalar:
    return haar_state(x.alg, mode).graph(x)


def pushforward_check(target: Graph, x: GraphElement, xi: Morphism | None, rng: random.Random | None = None) -> bool:
    """``h_target(p(x)) == h_source(x)``."""
    return haar_graph(push(target, x, xi, rng)) == haar_graph(x)


@dataclass
class OrthogonalityEntry:
    index: tuple[int, int, int, int]
    lhs: Scalar
    rhs: Scalar

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs


def orthogonality(i: int, j: int, i2: int, j2: int, alg: SUq2 = H) -> OrthogonalityEntry:
    """``h(u*_ij u_i'j')`` from the table versus ``delta_jj' phi_i'i / M``.

    Uses ``phi = diag(q, 1/q)`` and ``M = q + 1/q`` (``q > 0``).
    """
    for k in (i, j, i2, j2):
        if k not in (1, 2):
            raise ValueError("indices must be 1 or 2")
    u = fundamental_matrix(alg)
    lhs = haar(u[i - 1][j - 1].star() * u[i2 - 1][j2 - 1])
    q = alg.q
    phi = {(1, 1): q, (2, 2): q.inverse()}
    M = q + q.inverse()
    rhs = phi.get((i2, i), ZERO) / M if j == j2 else ZERO
    return OrthogonalityEntry((i, j, i2, j2), lhs, rhs)
