"""Graph algebras, the maps between them, and cylindrical elements.

A :class:`GraphElement` is a tensor whose slots follow the canonical edge order
of its graph.  Elementary moves act slotwise:

* ``Sub``: comultiply the slot; the first factor goes to ``e1``, the second to
  ``e2``, where ``e = e1 o e2``;
* ``Or``: apply the framing (the fixed one, or the projection of the edge's lift);
* ``Add``: insert the unit;
* ``Fr``: apply :func:`~suqconn.morphisms.frame_change`.

A :class:`CylElement` is a class of graph elements under pushes.  ``xi`` is
the fixed framing of a plain space, or ``None`` for the framed space in which
every edge carries its own lift.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .graphs import (
    Add,
    Edge,
    FramedGraph,
    Fr,
    Graph,
    GraphError,
    Move,
    NotComparableError,
    Or,
    Sub,
    common_refinement,
    geq,
    plan,
)
from .hopf import H, HopfElement, Monomial, SUq2, TensorElement
from .morphisms import FramingLift, Morphism, compose, frame_change, make_xi
from .scalars import ONE, Cyclotomic, Phase, Scalar

__all__ = [
    "GraphElement",
    "CylElement",
    "ContextError",
    "apply_move",
    "push",
    "cyl_equal",
    "cyl_add",
    "cyl_mul",
    "cyl_star",
    "cyl_scale",
    "iso_intertwiner",
    "iso_orientation",
    "embed_constant_framing",
    "Connection",
    "eval_classical",
    "classical_framing_action",
    "random_su2",
]


class ContextError(ValueError):
    """Operation used outside its framing context, or a violated precondition."""


@lru_cache(maxsize=None)
def _lift_framing(t: Fraction, alg: SUq2) -> Morphism:
    return make_xi(Phase(t), alg)


@lru_cache(maxsize=None)
def _frame_change(t0: Fraction, t1: Fraction, alg: SUq2) -> Morphism:
    return frame_change(t0, t1, alg)


class GraphElement:
    """Element of the graph algebra: tensor slots follow ``graph.ordered``."""

    __slots__ = ("graph", "value")

    def __init__(self, graph: Graph, value: TensorElement):
        if value.arity != len(graph):
            raise ValueError(f"tensor arity {value.arity} does not match {len(graph)} edges")
        self.graph = graph
        self.value = value

    @property
    def alg(self) -> SUq2:
        return self.value.alg

    @classmethod
    def pure(cls, graph: Graph, factors: Mapping[Edge, HopfElement] | Sequence[HopfElement], alg: SUq2 | None = None):
        """``a_1 (x) ... (x) a_N``; edges missing from a mapping get ``I``."""
        if isinstance(factors, Mapping):
            alg = alg or next(iter(factors.values())).alg
            seq = [factors.get(e, alg.one()) for e in graph.ordered]
        else:
            seq = list(factors)
            alg = alg or (seq[0].alg if seq else H)
        if not seq:
            return cls(graph, TensorElement.one(alg, 0))
        return cls(graph, TensorElement.pure(seq))

    @classmethod
    def one(cls, graph: Graph, alg: SUq2 = H) -> "GraphElement":
        return cls(graph, TensorElement.one(alg, len(graph)))

    def reordered(self, order: Sequence[Edge]) -> TensorElement:
        """Tensor with slots listed in ``order`` (a permutation of the edges)."""
        return self.value.permute([self.graph.index(e) for e in order])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphElement):
            return NotImplemented
        return self.graph == other.graph and self.value == other.value

    __hash__ = None

    def __repr__(self) -> str:
        return f"GraphElement({self.graph!r}, {self.value})"


def _comultiply(a: HopfElement) -> TensorElement:
    return a.comultiply()


def _comultiply_flipped(a: HopfElement) -> TensorElement:
    return a.comultiply().flip()


def _rebuild(old: Graph, removed: Edge | None, added: Sequence[Edge], lifts: Mapping[Edge, FramingLift] | None):
    edges = [e for e in old.ordered if e != removed]
    if isinstance(old, FramedGraph):
        new = {e: old.lifts[e] for e in edges}
        new.update(lifts or {})
        return FramedGraph(new)
    return Graph(edges + list(added))


def apply_move(move: Move, x: GraphElement, xi: Morphism | None) -> GraphElement:
    """One elementary homomorphism; ``xi is None`` selects the framed space."""
    g = x.graph
    framed = isinstance(g, FramedGraph)
    if framed != (xi is None):
        raise ContextError("framed graphs need xi=None and plain graphs need a framing")
    alg = x.alg
    if isinstance(move, Add):
        e = move.edge
        lift = None
        if framed:
            if move.lift is None:
                raise ContextError(f"{move}: framed Add needs a lift")
            lift = {e: move.lift}
        for f in g.edges:
            if f.curve == e.curve and f.lo < e.hi and e.lo < f.hi:
                raise GraphError(f"{move}: overlaps {f}")
        new = _rebuild(g, None, [e], lift)
        return GraphElement(new, x.value.insert_unit(new.index(e)))
    e = move.edge
    if e not in g.edges:
        raise GraphError(f"{move}: edge not present")
    i = g.index(e)
    # the pieces of a subdivided or reversed edge keep its place in the canonical order
    if isinstance(move, Sub):
        e1, e2 = e.split(move.point)
        lifts = {e1: g.lifts[e], e2: g.lifts[e]} if framed else None
        new = _rebuild(g, e, [e1, e2], lifts)
        comul = _comultiply if new.index(e1) < new.index(e2) else _comultiply_flipped
        return GraphElement(new, x.value.map_slot(i, comul))
    if isinstance(move, Or):
        m = _lift_framing(g.lifts[e].t, alg) if framed else xi
        r = e.reverse()
        new = _rebuild(g, e, [r], {r: g.lifts[e]} if framed else None)
        return GraphElement(new, x.value.map_slot(i, m))
    if isinstance(move, Fr):
        if not framed:
            raise ContextError("framing change outside the framed space")
        if g.lifts[e] != move.src:
            raise GraphError(f"{move}: edge carries lift {g.lifts[e]}")
        m = _frame_change(move.src.t, move.dst.t, alg)
        new = _rebuild(g, e, [e], {e: move.dst})
        return GraphElement(new, x.value.map_slot(i, m))
    raise TypeError(f"not a move: {move!r}")


def push(target: Graph, x: GraphElement, xi: Morphism | None, rng: random.Random | None = None,
         moves: Sequence[Move] | None = None) -> GraphElement:
    """Image of ``x`` under the map into the algebra of ``target >= x.graph``."""
    if not geq(target, x.graph):
        raise NotComparableError(f"{target!r} is not finer than {x.graph!r}")
    if moves is None:
        moves = plan(target, x.graph, rng)
    for mv in moves:
        x = apply_move(mv, x, xi)
    if x.graph != target:
        raise GraphError("moves did not reach the target graph")
    return x


# -- cylindrical elements ---------------------------------------------------------


@dataclass
class CylElement:
    rep: GraphElement
    xi: Morphism | None = None

    def __post_init__(self):
        framed = isinstance(self.rep.graph, FramedGraph)
        if framed != (self.xi is None):
            raise ContextError("framed representatives need xi=None and plain ones a framing")

    @property
    def alg(self) -> SUq2:
        return self.rep.alg

    @property
    def framed(self) -> bool:
        return self.xi is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, CylElement):
            return NotImplemented
        return cyl_equal(self, other)

    __hash__ = None

    def __add__(self, other):
        return cyl_add(self, other)

    def __sub__(self, other):
        return cyl_add(self, cyl_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, CylElement):
            return cyl_mul(self, other)
        return cyl_scale(self, other)

    def __rmul__(self, other):
        return cyl_scale(self, other)

    def star(self) -> "CylElement":
        return cyl_star(self)

    def push(self, target: Graph, rng=None) -> "CylElement":
        return CylElement(push(target, self.rep, self.xi, rng), self.xi)


def _same_context(c1: CylElement, c2: CylElement) -> None:
    if c1.alg is not c2.alg:
        raise ContextError("elements over different algebras")
    if (c1.xi is None) != (c2.xi is None):
        raise ContextError("cannot mix the framed space with a plain one")
    if c1.xi is not None and c1.xi is not c2.xi and c1.xi != c2.xi:
        raise ContextError("elements of spaces with different framings")


def _refinement(c1: CylElement, c2: CylElement) -> Graph:
    g = common_refinement(c1.rep.graph.bare, c2.rep.graph.bare)
    if c1.framed:
        return FramedGraph.constant(g, 0)
    return g


def common_pushes(c1: CylElement, c2: CylElement) -> tuple[GraphElement, GraphElement]:
    _same_context(c1, c2)
    g = _refinement(c1, c2)
    return push(g, c1.rep, c1.xi), push(g, c2.rep, c2.xi)


def cyl_equal(c1: CylElement, c2: CylElement) -> bool:
    a, b = common_pushes(c1, c2)
    return a.value == b.value


def cyl_add(c1: CylElement, c2: CylElement) -> CylElement:
    a, b = common_pushes(c1, c2)
    return CylElement(GraphElement(a.graph, a.value + b.value), c1.xi)


def cyl_mul(c1: CylElement, c2: CylElement) -> CylElement:
    a, b = common_pushes(c1, c2)
    return CylElement(GraphElement(a.graph, a.value * b.value), c1.xi)


def cyl_star(c: CylElement) -> CylElement:
    return CylElement(GraphElement(c.rep.graph, c.rep.value.star()), c.xi)


def cyl_scale(c: CylElement, s) -> CylElement:
    return CylElement(GraphElement(c.rep.graph, c.rep.value.scale(s)), c.xi)


# -- isomorphisms -----------------------------------------------------------------


def _slotwise(x: GraphElement, maps: Sequence[Callable | None]) -> GraphElement:
    t = x.value
    for i, m in enumerate(maps):
        if m is not None:
            t = t.map_slot(i, m)
    return GraphElement(x.graph, t)


def iso_intertwiner(rho: Morphism, c: CylElement, xi_to: Morphism) -> CylElement:
    """``[a] -> [(rho (x) ... (x) rho) a]`` from the space of ``xi`` to that of ``xi_to``.

    Requires ``xi_to = rho o xi o rho^-1``.
    """
    if c.framed:
        raise ContextError("intertwiners act on plain spaces")
    if compose(rho, c.xi) != compose(xi_to, rho):
        raise ContextError("rho does not intertwine the two framings")
    return CylElement(_slotwise(c.rep, [rho] * len(c.rep.graph)), xi_to)


def edge_sign(o: Mapping[str, int], e: Edge) -> int:
    if e.curve not in o or o[e.curve] not in (1, -1):
        raise ContextError(f"orientation map has no sign for curve {e.curve!r}")
    return o[e.curve] if e.forward else -o[e.curve]


def iso_orientation(o: Mapping[str, int], rho: Morphism, c: CylElement, xi_to: Morphism) -> CylElement:
    """Apply ``rho`` on negatively oriented edges, identity elsewhere.

    ``c`` lives in the space of ``xi' = xi_to o rho``; the image lives in that of ``xi_to``.
    """
    if c.framed:
        raise ContextError("orientation maps act on plain spaces")
    if compose(xi_to, rho) != c.xi:
        raise ContextError("source framing is not xi o rho")
    maps = [rho if edge_sign(o, e) < 0 else None for e in c.rep.graph.ordered]
    return CylElement(_slotwise(c.rep, maps), xi_to)


def embed_constant_framing(lift, c: CylElement) -> CylElement:
    """Color every edge with ``lift``; ``c`` must live in the space of its projection."""
    lift = lift if isinstance(lift, FramingLift) else FramingLift(Fraction(lift))
    if c.framed:
        raise ContextError("already in the framed space")
    if c.xi != _lift_framing(lift.t, c.alg):
        raise ContextError("framing of the source space is not the projection of the lift")
    g = FramedGraph.constant(c.rep.graph, lift)
    return CylElement(GraphElement(g, c.rep.value), None)


# -- classical evaluation (q = 1) ---------------------------------------------------

Matrix = tuple[tuple[Cyclotomic, Cyclotomic], tuple[Cyclotomic, Cyclotomic]]


def _cyc(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, Scalar):
        return x.constant_value()
    return Scalar.coerce(x).constant_value()


def _mat(m) -> Matrix:
    return ((_cyc(m[0][0]), _cyc(m[0][1])), (_cyc(m[1][0]), _cyc(m[1][1])))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2))


def is_special_unitary(m: Matrix) -> bool:
    a, b = m[0]
    c, d = m[1]
    return d == a.conj() and b == -c.conj() and (a * d - b * c) == 1


def evaluate_monomial(mono: Monomial, g: Matrix) -> Cyclotomic:
    """Value of a monomial at ``g``: ``a -> g11``, ``g -> g21``, stars conjugate."""
    a11, g21 = g[0][0], g[1][0]
    head = a11 ** mono.a if mono.a >= 0 else a11.conj() ** (-mono.a)
    return head * g21**mono.m * g21.conj() ** mono.n


def evaluate_hopf(x: HopfElement, g: Matrix) -> Cyclotomic:
    out = Cyclotomic.rational(0)
    for mono, c in x.terms.items():
        out = out + c.constant_value() * evaluate_monomial(mono, g)
    return out


def classical_framing_action(xi: Morphism) -> Callable[[Matrix], Matrix]:
    """Group map ``xi_*`` with ``f(xi_* g) = (xi f)(g)`` for every function ``f``."""

    def act(g: Matrix) -> Matrix:
        a = evaluate_hopf(xi.image("a"), g)
        c = evaluate_hopf(xi.image("g"), g)
        return ((a, -c.conj()), (c, a.conj()))

    return act


class Connection:
    """Holonomies on atomic forward segments, extended by composition and ``xi_*``."""

    def __init__(self, atoms: Mapping[Edge, object], xi: Morphism | None = None, xi_star=None):
        self.atoms: dict[Edge, Matrix] = {}
        for e, m in atoms.items():
            if not e.forward:
                raise ContextError("atomic segments must be forward edges")
            mm = _mat(m)
            if not is_special_unitary(mm):
                raise ContextError(f"holonomy of {e} is not in SU(2)")
            self.atoms[e] = mm
        Graph(self.atoms)  # disjointness check
        if xi_star is None:
            if xi is None:
                raise ContextError("need a framing or its classical action")
            xi_star = classical_framing_action(xi)
        self.xi_star = xi_star

    def holonomy(self, e: Edge) -> Matrix:
        pieces = sorted((f for f in self.atoms if f.curve == e.curve and e.lo <= f.lo and f.hi <= e.hi), key=lambda f: f.lo)
        pos = e.lo
        for f in pieces:
            if f.lo != pos:
                break
            pos = f.hi
        if pos != e.hi or not pieces:
            raise ContextError(f"connection does not determine the holonomy of {e}")
        if e.forward:
            out = self.atoms[pieces[0]]
            for f in pieces[1:]:
                out = matmul(self.atoms[f], out)
            return out
        out = self.xi_star(self.atoms[pieces[0]])
        for f in pieces[1:]:
            out = matmul(out, self.xi_star(self.atoms[f]))
        return out

    @classmethod
    def from_assignments(cls, data: Mapping[Edge, object], xi: Morphism) -> "Connection":
        """Build from arbitrary edges; refined edges must be consistent with the atoms."""
        g = common_refinement(Graph([]), *[Graph([e]) for e in data])
        xi_star = classical_framing_action(xi)
        given = {e: _mat(m) for e, m in data.items()}
        atoms = {}
        for a in g.edges:
            if a in given:
                atoms[a] = given[a]
            elif a.reverse() in given:
                atoms[a] = xi_star(given[a.reverse()])
            else:
                raise ContextError(f"segment {a} has no assigned holonomy")
        conn = cls(atoms, xi_star=xi_star)
        for e, m in given.items():
            if conn.holonomy(e) != m:
                raise ContextError(f"holonomy of {e} is inconsistent with its segments")
        return conn


def eval_classical(c: CylElement | GraphElement, A: Connection) -> Scalar:
    """Point evaluation of a q = 1 element at the connection ``A``."""
    rep = c.rep if isinstance(c, CylElement) else c
    if not rep.alg.is_classical:
        raise ContextError("classical evaluation needs q = 1")
    mats = [A.holonomy(e) for e in rep.graph.ordered]
    total = Cyclotomic.rational(0)
    for key, coeff in rep.value.terms.items():
        v = coeff.constant_value()
        for mono, g in zip(key, mats):
            v = v * evaluate_monomial(mono, g)
        total = total + v
    return Scalar.from_cyclotomic(total)


def random_su2(rng: random.Random, denominators=(1, 2, 3)) -> Matrix:
    """Rational point of SU(2) via inverse stereographic projection."""
    u = [Fraction(rng.randint(-4, 4), rng.choice(denominators)) for _ in range(3)]
    n = sum(x * x for x in u)
    a, b, c = (2 * x / (n + 1) for x in u)
    d = (n - 1) / (n + 1)
    z = lambda re, im: Cyclotomic.gaussian(re, im)  # noqa: E731
    return ((z(a, b), z(-c, d)), (z(c, d), z(a, -b)))
