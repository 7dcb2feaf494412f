"""Graphs as finite sets of directed rational intervals on labeled curves.

Each curve is a copy of the rationals; an :class:`Edge` is an interval
``[lo, hi]`` on one curve with a direction.  A forward edge starts at ``lo``.
Composition ``e1 o e2`` traverses ``e2`` first, so the source of ``e1`` is the
target of ``e2``.

``g1 >= g0`` holds when every edge of ``g0`` is exactly tiled by edges of
``g1`` (any orientations).  :func:`plan` turns such a pair into a list of
elementary moves (subdivide, reorient, add, change framing).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .morphisms import FramingLift

__all__ = [
    "Edge",
    "Graph",
    "FramedGraph",
    "Sub",
    "Or",
    "Add",
    "Fr",
    "Move",
    "GraphError",
    "CompositionError",
    "NotComparableError",
    "GraphSchemaError",
    "compose_edges",
    "geq",
    "common_refinement",
    "plan",
    "apply_moves",
    "random_graph",
    "random_refinement",
    "graph_from_json",
    "graph_to_json",
]


class GraphError(ValueError):
    pass


class CompositionError(GraphError):
    pass


class NotComparableError(GraphError):
    pass


class GraphSchemaError(GraphError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Edge:
    curve: str
    lo: Fraction
    hi: Fraction
    forward: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if not self.lo < self.hi:
            raise GraphError(f"edge needs lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def source(self) -> Fraction:
        return self.lo if self.forward else self.hi

    @property
    def target(self) -> Fraction:
        return self.hi if self.forward else self.lo

    @property
    def interval(self) -> tuple[str, Fraction, Fraction]:
        return (self.curve, self.lo, self.hi)

    def reverse(self) -> "Edge":
        return Edge(self.curve, self.lo, self.hi, not self.forward)

    def sort_key(self):
        return (self.curve, self.lo, 0 if self.forward else 1, self.hi)

    def contains(self, v) -> bool:
        return self.lo < v < self.hi

    def split(self, v) -> tuple["Edge", "Edge"]:
        """``(e1, e2)`` with ``self = e1 o e2``."""
        v = _frac(v)
        if not self.contains(v):
            raise GraphError(f"{v} is not interior to {self}")
        left = Edge(self.curve, self.lo, v, self.forward)
        right = Edge(self.curve, v, self.hi, self.forward)
        return (right, left) if self.forward else (left, right)

    @property
    def dir(self) -> str:
        return "f" if self.forward else "b"

    def key(self) -> str:
        return f"{self.curve}:{self.lo}:{self.hi}:{self.dir}"

    @classmethod
    def from_key(cls, key: str) -> "Edge":
        parts = key.split(":")
        if len(parts) != 4 or parts[3] not in ("f", "b"):
            raise GraphError(f"bad edge key {key!r}")
        return cls(parts[0], Fraction(parts[1]), Fraction(parts[2]), parts[3] == "f")

    def __str__(self) -> str:
        return f"{self.curve}[{self.lo},{self.hi}]{self.dir}"


def compose_edges(e1: Edge, e2: Edge) -> Edge:
    if e1.curve != e2.curve:
        raise CompositionError("edges lie on different curves")
    if e1.forward != e2.forward or e1.source != e2.target:
        raise CompositionError(f"source of {e1} is not the target of {e2}")
    lo, hi = min(e1.lo, e2.lo), max(e1.hi, e2.hi)
    return Edge(e1.curve, lo, hi, e1.forward)


def _check_disjoint(edges: Iterable[Edge]) -> None:
    by_curve: dict[str, list[Edge]] = {}
    for e in edges:
        by_curve.setdefault(e.curve, []).append(e)
    for es in by_curve.values():
        es.sort(key=lambda e: (e.lo, e.hi))
        for a, b in zip(es, es[1:]):
            if b.lo < a.hi:
                raise GraphError(f"edges {a} and {b} overlap")


class Graph:
    """Finite set of edges with pairwise disjoint interiors."""

    __slots__ = ("edges", "_order")

    def __init__(self, edges: Iterable[Edge] = ()):
        es = frozenset(edges)
        _check_disjoint(es)
        self.edges = es
        self._order = tuple(sorted(es, key=Edge.sort_key))

    @property
    def ordered(self) -> tuple[Edge, ...]:
        """Canonical edge order: by curve, then ``lo``, then direction."""
        return self._order

    def index(self, e: Edge) -> int:
        return self._order.index(e)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self._order)

    def __contains__(self, e) -> bool:
        return e in self.edges

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and not isinstance(other, FramedGraph) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    @property
    def bare(self) -> "Graph":
        return self

    def intervals(self) -> dict[tuple, Edge]:
        return {e.interval: e for e in self.edges}

    def __repr__(self) -> str:
        return "Graph{" + ", ".join(map(str, self._order)) + "}"


class FramedGraph(Graph):
    """Graph whose edges carry framing lifts."""

    __slots__ = ("lifts",)

    def __init__(self, lifts: Mapping[Edge, Union[FramingLift, Fraction, int, str]]):
        super().__init__(lifts.keys())
        self.lifts = {e: (v if isinstance(v, FramingLift) else FramingLift(Fraction(v))) for e, v in lifts.items()}

    @classmethod
    def constant(cls, g: Graph, lift) -> "FramedGraph":
        lift = lift if isinstance(lift, FramingLift) else FramingLift(Fraction(lift))
        return cls({e: lift for e in g.edges})

    @property
    def bare(self) -> Graph:
        return Graph(self.edges)

    def lift(self, e: Edge) -> FramingLift:
        return self.lifts[e]

    def __eq__(self, other) -> bool:
        return isinstance(other, FramedGraph) and self.lifts == other.lifts

    def __hash__(self) -> int:
        return hash(frozenset(self.lifts.items()))

    def __repr__(self) -> str:
        return "FramedGraph{" + ", ".join(f"{e}@{self.lifts[e]}" for e in self._order) + "}"


# -- order and refinement ---------------------------------------------------------


def _tiling(g1: Graph, e: Edge) -> list[Edge] | None:
    """Edges of ``g1`` tiling ``e``'s interval, left to right, or ``None``."""
    pieces = sorted((f for f in g1.edges if f.curve == e.curve and e.lo <= f.lo and f.hi <= e.hi), key=lambda f: f.lo)
    pos = e.lo
    for f in pieces:
        if f.lo != pos:
            return None
        pos = f.hi
    return pieces if pos == e.hi else None


def geq(g1: Graph, g0: Graph) -> bool:
    """``g1 >= g0``: every edge of ``g0`` is a composition of edges of ``g1`` or their inverses."""
    return all(_tiling(g1.bare, e) is not None for e in g0.bare.edges)


def common_refinement(*graphs: Graph) -> Graph:
    """Minimal forward segments after overlaying all endpoints."""
    by_curve: dict[str, list[Edge]] = {}
    for g in graphs:
        for e in g.edges:
            by_curve.setdefault(e.curve, []).append(e)
    out = []
    for curve, es in by_curve.items():
        pts = sorted({p for e in es for p in (e.lo, e.hi)})
        for a, b in zip(pts, pts[1:]):
            if any(e.lo <= a and b <= e.hi for e in es):
                out.append(Edge(curve, a, b, True))
    return Graph(out)


# -- elementary moves ---------------------------------------------------------------


@dataclass(frozen=True)
class Sub:
    edge: Edge
    point: Fraction

    def __str__(self) -> str:
        return f"Sub({self.edge}, {self.point})"


@dataclass(frozen=True)
class Or:
    edge: Edge

    def __str__(self) -> str:
        return f"Or({self.edge})"


@dataclass(frozen=True)
class Add:
    edge: Edge
    lift: FramingLift | None = None

    def __str__(self) -> str:
        return f"Add({self.edge})" if self.lift is None else f"Add({self.edge}, {self.lift})"


@dataclass(frozen=True)
class Fr:
    edge: Edge
    src: FramingLift
    dst: FramingLift

    def __str__(self) -> str:
        return f"Fr({self.edge}, {self.src}, {self.dst})"


Move = Union[Sub, Or, Add, Fr]


def _step(state: dict, move: Move, framed: bool) -> None:
    """Apply ``move`` to a mutable ``edge -> lift`` map."""
    if isinstance(move, Sub):
        if move.edge not in state:
            raise GraphError(f"{move}: edge not present")
        lift = state.pop(move.edge)
        e1, e2 = move.edge.split(move.point)
        state[e1] = lift
        state[e2] = lift
    elif isinstance(move, Or):
        if move.edge not in state:
            raise GraphError(f"{move}: edge not present")
        state[move.edge.reverse()] = state.pop(move.edge)
    elif isinstance(move, Add):
        e = move.edge
        for f in state:
            if f.curve == e.curve and f.lo < e.hi and e.lo < f.hi:
                raise GraphError(f"{move}: overlaps {f}")
        if framed and move.lift is None:
            raise GraphError(f"{move}: framed Add needs a lift")
        state[e] = move.lift
    elif isinstance(move, Fr):
        if not framed:
            raise GraphError("framing change in an unframed graph")
        if state.get(move.edge, None) != move.src:
            raise GraphError(f"{move}: edge not present with lift {move.src}")
        state[move.edge] = move.dst
    else:
        raise TypeError(f"not a move: {move!r}")


def _state(g: Graph) -> dict:
    if isinstance(g, FramedGraph):
        return {e: g.lifts[e] for e in g.ordered}
    return {e: None for e in g.ordered}


def _graph(state: dict, framed: bool) -> Graph:
    return FramedGraph(state) if framed else Graph(state)


def apply_moves(g: Graph, moves: Iterable[Move]) -> Graph:
    framed = isinstance(g, FramedGraph)
    state = _state(g)
    for mv in moves:
        _step(state, mv, framed)
    return _graph(state, framed)


def _target_pieces(g1: Graph, g0: Graph) -> dict[Edge, list[Edge]]:
    out = {}
    for e in g0.bare.edges:
        t = _tiling(g1.bare, e)
        if t is None:
            raise NotComparableError(f"{e} is not tiled by the target graph")
        out[e] = t
    return out


def plan(g1: Graph, g0: Graph, rng: random.Random | None = None) -> list[Move]:
    """Moves turning ``g0`` into ``g1``.

    Without ``rng`` the plan is canonical.  With ``rng`` the order of moves,
    subdivision points, added runs, orientations and intermediate lifts are
    randomized, including harmless detours (double reorientation, two-step
    framing changes).
    """
    framed = isinstance(g0, FramedGraph)
    if framed != isinstance(g1, FramedGraph):
        raise GraphError("cannot plan between framed and unframed graphs")
    _target_pieces(g1, g0)
    target = _state(g1)
    target_iv = {e.interval: e for e in g1.edges}
    if rng is None:
        return _plan_canonical(g1, g0, framed, target, target_iv)
    return _plan_random(g1, g0, framed, target, target_iv, rng)


def _plan_canonical(g1, g0, framed, target, target_iv) -> list[Move]:
    moves: list[Move] = []
    state = _state(g0)
    pieces = _target_pieces(g1, g0)
    for e in g0.ordered:
        cur = e
        for f in pieces[e][:-1]:
            mv = Sub(cur, f.hi)
            moves.append(mv)
            _step(state, mv, framed)
            e1, e2 = cur.split(f.hi)
            cur = e1 if cur.forward else e2
    for cur in sorted(state, key=Edge.sort_key):
        goal = target_iv[cur.interval]
        if cur != goal:
            mv = Or(cur)
            moves.append(mv)
            _step(state, mv, framed)
        if framed and state[goal] != target[goal]:
            mv = Fr(goal, state[goal], target[goal])
            moves.append(mv)
            _step(state, mv, framed)
    covered = {e.interval for e in state}
    for f in g1.ordered:
        if f.interval not in covered:
            mv = Add(f, target[f] if framed else None)
            moves.append(mv)
            _step(state, mv, framed)
    return moves


_DETOUR_LIFTS = [Fraction(k, 12) for k in range(-18, 19)]


def _plan_random(g1, g0, framed, target, target_iv, rng) -> list[Move]:
    moves: list[Move] = []
    state = _state(g0)
    breakpoints: dict[str, list[Fraction]] = {}
    for f in g1.edges:
        breakpoints.setdefault(f.curve, []).extend((f.lo, f.hi))

    def emit(mv):
        _step(state, mv, framed)
        moves.append(mv)

    def random_lift():
        return FramingLift(rng.choice(_DETOUR_LIFTS))

    for _ in range(100000):
        if state == target:
            return moves
        options = []
        for e in state:
            interior = [p for p in breakpoints.get(e.curve, ()) if e.contains(p)]
            if interior:
                options.append(("sub", e, interior))
            elif e.interval in target_iv:
                goal = target_iv[e.interval]
                if e != goal:
                    options.append(("or", e, None))
                elif framed and state[e] != target[e]:
                    options.append(("fr", e, None))
            if rng.random() < 0.05:
                options.append(("detour-or", e, None))
            if framed and rng.random() < 0.05:
                options.append(("detour-fr", e, None))
        missing = sorted(
            (f for f in g1.edges if not any(f.curve == e.curve and e.lo <= f.lo and f.hi <= e.hi for e in state)),
            key=Edge.sort_key,
        )
        if missing:
            options.append(("add", missing, None))
        if not options:
            raise GraphError("planner stalled")
        kind, e, extra = rng.choice(options)
        if kind == "sub":
            emit(Sub(e, rng.choice(sorted(set(extra)))))
        elif kind == "or":
            emit(Or(e))
        elif kind == "fr":
            if rng.random() < 0.3:
                mid = random_lift()
                if mid != state[e]:
                    emit(Fr(e, state[e], mid))
            emit(Fr(e, state[e], target[e]))
        elif kind == "detour-or":
            emit(Or(e))
            emit(Or(e.reverse()))
        elif kind == "detour-fr":
            mid = random_lift()
            if mid != state[e]:
                old = state[e]
                emit(Fr(e, old, mid))
                if rng.random() < 0.5:
                    emit(Fr(e, mid, old))
        elif kind == "add":
            emit(Add(*_random_run(e, rng, framed, target, random_lift)))
    raise GraphError("planner did not terminate")


def _random_run(missing: list[Edge], rng, framed, target, random_lift):
    """A run of consecutive missing target pieces merged into one new edge."""
    start = rng.randrange(len(missing))
    run = [missing[start]]
    while rng.random() < 0.5:
        nxt = next((f for f in missing if f.curve == run[-1].curve and f.lo == run[-1].hi), None)
        if nxt is None:
            break
        run.append(nxt)
    if len(run) == 1 and rng.random() < 0.7:
        edge = run[0]
    else:
        edge = Edge(run[0].curve, run[0].lo, run[-1].hi, rng.random() < 0.5)
    lift = None
    if framed:
        lift = target[run[0]] if edge == run[0] and rng.random() < 0.7 else random_lift()
    return edge, lift


# -- random generation ------------------------------------------------------------


def random_graph(rng: random.Random, curves=("c1", "c2"), max_edges: int = 3, denominators=(1, 2, 3), span: int = 3,
                 framed: bool = False, lifts=None) -> Graph:
    """Random valid graph with endpoints in ``[0, span]``."""
    edges: dict[Edge, object] = {}
    for _ in range(rng.randint(1, max_edges)):
        curve = rng.choice(curves)
        d = rng.choice(denominators)
        a, b = sorted(rng.sample(range(span * d + 1), 2))
        e = Edge(curve, Fraction(a, d), Fraction(b, d), rng.random() < 0.6)
        if all(f.curve != e.curve or f.hi <= e.lo or e.hi <= f.lo for f in edges):
            edges[e] = FramingLift(rng.choice(lifts or _DETOUR_LIFTS)) if framed else None
    if framed:
        return FramedGraph(edges)
    return Graph(edges)


def random_refinement(rng: random.Random, g: Graph, extra_edges: int = 1, denominators=(1, 2, 3, 4), framed_lifts=None) -> Graph:
    """Random ``g' >= g``: subdivide, reorient, add edges, recolor."""
    framed = isinstance(g, FramedGraph)
    out: dict[Edge, object] = {}
    for e in g.ordered:
        d = rng.choice(denominators)
        lo, hi = e.lo, e.hi
        cands = sorted({Fraction(k, d) for k in range(int(lo * d) - 1, int(hi * d) + 2) if lo < Fraction(k, d) < hi})
        cuts = sorted(rng.sample(cands, min(len(cands), rng.randint(0, 2))))
        pts = [lo] + cuts + [hi]
        for a, b in zip(pts, pts[1:]):
            f = Edge(e.curve, a, b, rng.random() < 0.6)
            out[f] = FramingLift(rng.choice(framed_lifts or _DETOUR_LIFTS)) if framed else None
    for _ in range(extra_edges):
        curve = rng.choice(sorted({e.curve for e in g.edges} | {"c3"}))
        d = rng.choice(denominators)
        a = Fraction(rng.randrange(-2 * d, 6 * d), d)
        b = a + Fraction(rng.randint(1, d), d)
        f = Edge(curve, a, b, rng.random() < 0.6)
        if all(h.curve != f.curve or h.hi <= f.lo or f.hi <= h.lo for h in list(out) + list(g.edges)):
            out[f] = FramingLift(rng.choice(framed_lifts or _DETOUR_LIFTS)) if framed else None
    return FramedGraph(out) if framed else Graph(out)


# -- JSON ---------------------------------------------------------------------------


def _json_rational(value, path: str) -> Fraction:
    if not isinstance(value, str):
        raise GraphSchemaError(path, "expected a rational written as a string")
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise GraphSchemaError(path, f"not a rational: {value!r}") from None


def graph_from_json(data) -> Graph:
    """Parse ``{"edges": [{"curve", "lo", "hi", "dir", "frame"?}, ...]}``.

    A graph is framed when every edge has a ``"frame"``; mixing is an error.
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphSchemaError("$", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise GraphSchemaError("$", "expected an object")
    if "edges" not in data:
        raise GraphSchemaError("$", "missing key 'edges'")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise GraphSchemaError("$.edges", "expected an array")
    parsed: dict[Edge, object] = {}
    framed_flags = set()
    for i, item in enumerate(edges):
        path = f"$.edges[{i}]"
        if not isinstance(item, dict):
            raise GraphSchemaError(path, "expected an object")
        for key in ("curve", "lo", "hi", "dir"):
            if key not in item:
                raise GraphSchemaError(path, f"missing key {key!r}")
        extra = set(item) - {"curve", "lo", "hi", "dir", "frame"}
        if extra:
            raise GraphSchemaError(path, f"unknown keys {sorted(extra)}")
        if not isinstance(item["curve"], str) or not item["curve"]:
            raise GraphSchemaError(path + ".curve", "expected a nonempty string")
        lo = _json_rational(item["lo"], path + ".lo")
        hi = _json_rational(item["hi"], path + ".hi")
        if item["dir"] not in ("f", "b"):
            raise GraphSchemaError(path + ".dir", "expected 'f' or 'b'")
        if not lo < hi:
            raise GraphSchemaError(path, "need lo < hi")
        e = Edge(item["curve"], lo, hi, item["dir"] == "f")
        if e in parsed or e.reverse() in parsed:
            raise GraphSchemaError(path, f"duplicate edge {e}")
        framed_flags.add("frame" in item)
        parsed[e] = FramingLift(_json_rational(item["frame"], path + ".frame")) if "frame" in item else None
    if len(framed_flags) > 1:
        raise GraphSchemaError("$.edges", "either every edge or no edge carries a frame")
    try:
        if framed_flags == {True}:
            return FramedGraph(parsed)
        return Graph(parsed)
    except GraphError as exc:
        raise GraphSchemaError("$.edges", str(exc)) from None


def graph_to_json(g: Graph) -> dict:
    items = []
    for e in g.ordered:
        item = {"curve": e.curve, "lo": str(e.lo), "hi": str(e.hi), "dir": e.dir}
        if isinstance(g, FramedGraph):
            item["frame"] = str(g.lifts[e].t)
        items.append(item)
    return {"edges": items}
