"""Command-line front end.

Exit status: 0 success (or all checks passed), 1 a check failed or two
elements differ, 2 usage, parse, schema or domain error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import graphs as G
from .haar import NonUniqueError, haar, haar_graph
from . import parsing
from . import representation as rep
from .cylinder import ContextError, CylElement, GraphElement, cyl_mul, common_pushes, eval_classical, push
from .hopf import algebra
from .morphisms import InvalidParameterError, make_xi
from .scalars import EvaluationError, evaluate
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser", "CliError"]


class CliError(Exception):
    def __init__(self, module: str, message: str):
        super().__init__(message)
        self.module = module


def _alg(args):
    q = getattr(args, "q", "symbolic")
    if q in (None, "symbolic", "q"):
        return algebra(None)
    try:
        value = Fraction(q)
    except (ValueError, ZeroDivisionError):
        raise CliError("cli", f"--q expects a rational or 'symbolic', got {q!r}") from None
    if value <= 0:
        raise CliError("cli", "--q must be positive")
    return algebra(value)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError("cli", f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError("graphs", f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _graph(path: str) -> G.Graph:
    return G.graph_from_json(_load_json(path))


def _framing(args, alg):
    """``None`` for the framed space, otherwise the fixed framing."""
    if getattr(args, "framed", False):
        return None
    text = getattr(args, "xi", None) or "e(0)"
    head = text.strip().split("(")[0].strip()
    if head in ("rho", "xi", "xiaxis", "kappa", "fr", "id"):
        return parsing.parse_morphism(text, alg)
    return make_xi(parsing.parse_phase(text), alg)


def _element_on(graph: G.Graph, text: str, alg) -> GraphElement:
    return GraphElement(graph, parsing.parse_tensor(text, alg, arity=len(graph)))


def _check_context(graph: G.Graph, xi):
    framed = isinstance(graph, G.FramedGraph)
    if framed and xi is not None:
        raise CliError("cylinder", "framed graph given; pass --framed")
    if not framed and xi is None:
        raise CliError("cylinder", "--framed needs graphs with 'frame' entries")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- subcommands -------------------------------------------------------------------------


def cmd_normalize(args) -> int:
    alg = _alg(args)
    x = parsing.parse_element(args.expr, alg)
    _emit(args, {"result": str(x)}, str(x))
    return 0


def cmd_coprod(args) -> int:
    alg = _alg(args)
    t = parsing.parse_element(args.expr, alg).comultiply()
    _emit(args, {"result": str(t)}, str(t))
    return 0


def cmd_push(args) -> int:
    alg = _alg(args)
    g0, g1 = _graph(args.source), _graph(args.target)
    xi = _framing(args, alg)
    _check_context(g0, xi)
    x = _element_on(g0, args.elem, alg)
    rng = random.Random(args.seed) if args.random_plan else None
    moves = G.plan(g1, g0, rng)
    y = push(g1, x, xi, moves=moves)
    payload = {"graph": G.graph_to_json(y.graph), "moves": [str(m) for m in moves], "result": str(y.value)}
    order = ", ".join(str(e) for e in y.graph.ordered)
    _emit(args, payload, f"slots: {order}\nmoves: {', '.join(payload['moves']) or '(none)'}\n{y.value}")
    return 0


def _two(args):
    alg = _alg(args)
    g1, g2 = _graph(args.graph1), _graph(args.graph2)
    xi = _framing(args, alg)
    _check_context(g1, xi)
    _check_context(g2, xi)
    return CylElement(_element_on(g1, args.elem1, alg), xi), CylElement(_element_on(g2, args.elem2, alg), xi)


def cmd_equal(args) -> int:
    c1, c2 = _two(args)
    a, b = common_pushes(c1, c2)
    same = a.value == b.value
    _emit(args, {"equal": same}, "equal" if same else "not equal")
    return 0 if same else 1


def cmd_mul(args) -> int:
    c1, c2 = _two(args)
    p = cyl_mul(c1, c2).rep
    order = ", ".join(str(e) for e in p.graph.ordered)
    _emit(args, {"graph": G.graph_to_json(p.graph), "result": str(p.value)}, f"slots: {order}\n{p.value}")
    return 0


def cmd_haar(args) -> int:
    alg = _alg(args)
    if args.graph:
        g = _graph(args.graph)
        v = haar_graph(_element_on(g, args.elem, alg))
    else:
        v = haar(parsing.parse_element(args.elem, alg))
    payload = {"result": str(v)}
    text = str(v)
    if args.at is not None:
        try:
            z = evaluate(v, Fraction(args.at), args.digits)
        except (ValueError, ZeroDivisionError):
            raise CliError("cli", f"--at expects a rational, got {args.at!r}") from None
        num = f"{z.real}" if z.imag == 0 else f"{z}"
        payload["numeric"] = num
        text += f"\n~ {num} at q = {args.at}"
    _emit(args, payload, text)
    return 0


def cmd_eval(args) -> int:
    if args.q not in ("symbolic", "1"):
        raise CliError("cylinder", "classical evaluation needs q = 1")
    alg = algebra(1)
    g = _graph(args.graph)
    xi = _framing(args, alg)
    if xi is None:
        raise CliError("cylinder", "classical evaluation uses a fixed framing")
    _check_context(g, xi)
    A = parsing.parse_connection(_load_json(args.connection), xi)
    v = eval_classical(_element_on(g, args.elem, alg), A)
    _emit(args, {"result": str(v)}, str(v))
    return 0


def cmd_rep(args) -> int:
    alg = _alg(args)
    if args.action == "verify":
        u = rep.fundamental(alg)
        checks = {
            "unitary": rep.verify_unitary(u),
            "corepresentation": rep.verify_rep(u),
            "conjugate_equivalence": rep.conjugate_equivalence(alg),
            "irreducible": len(rep.irreducibility_witness(alg)) == 1,
        }
        ok = all(checks.values())
        _emit(args, {"checks": checks, "passed": ok},
              "\n".join(f"{'PASS' if v else 'FAIL'} {k}" for k, v in checks.items()))
        return 0 if ok else 1
    if not args.matrix:
        raise CliError("cli", "rep conjugate needs --matrix")
    S = parsing.parse_matrix(_load_json(args.matrix))
    m = rep.conjugation_action(S, alg)
    _emit(args, {"alpha": str(m.image("a")), "gamma": str(m.image("g"))},
          f"a -> {m.image('a')}\ng -> {m.image('g')}")
    return 0


def cmd_verify(args) -> int:
    names = args.suite or list(SUITES)
    for n in names:
        if n not in SUITES:
            raise CliError("verify", f"unknown suite {n!r}; choose from {', '.join(SUITES)}")
    results = [run_suite(n, args.seed) for n in names]
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"seed": args.seed, "passed": ok, "suites": [r.to_dict() for r in results]}, sort_keys=True))
    else:
        for r in results:
            print(r.line())
            for f in r.failures[1:]:
                print(f"    also: {f}")
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error[cli]: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    def global_flags(defaults: bool) -> argparse.ArgumentParser:
        # flags are accepted before and after the subcommand; only the top level sets defaults
        g = argparse.ArgumentParser(add_help=False)
        kw = {} if defaults else {"default": argparse.SUPPRESS}
        g.add_argument("--seed", type=int, help="seed for randomized steps (default 0)", **(kw or {"default": 0}))
        g.add_argument("--q", help="deformation parameter: a positive rational or 'symbolic'", **(kw or {"default": "symbolic"}))
        g.add_argument("--json", action="store_true", help="machine-readable output", **kw)
        return g

    common = global_flags(False)
    p = _Parser(prog="suqconn", description="Exact computations with SU_q(2) connection algebras.", parents=[global_flags(True)])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("normalize", parents=[common], help="PBW normal form of an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("coprod", parents=[common], help="comultiplication of an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_coprod)

    def framing_flags(s):
        grp = s.add_mutually_exclusive_group()
        grp.add_argument("--xi", help="fixed framing: a phase such as e(1/4), or a morphism literal (default e(0))")
        grp.add_argument("--framed", action="store_true", help="use the framed space (graphs carry lifts)")

    s = sub.add_parser("push", parents=[common], help="map an element into a finer graph")
    s.add_argument("--from", dest="source", required=True, help="source graph JSON")
    s.add_argument("--to", dest="target", required=True, help="target graph JSON")
    s.add_argument("--elem", required=True, help="tensor expression, slots in canonical edge order")
    s.add_argument("--random-plan", action="store_true", help="use a randomized move plan (seeded)")
    framing_flags(s)
    s.set_defaults(func=cmd_push)

    for name, func, helptext in (("equal", cmd_equal, "compare two cylindrical elements"),
                                 ("mul", cmd_mul, "multiply two cylindrical elements")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--graph1", required=True)
        s.add_argument("--elem1", required=True)
        s.add_argument("--graph2", required=True)
        s.add_argument("--elem2", required=True)
        framing_flags(s)
        s.set_defaults(func=func)

    s = sub.add_parser("haar", parents=[common], help="Haar state of an element")
    s.add_argument("--elem", required=True)
    s.add_argument("--graph", help="graph JSON; the element is then a tensor over its edges")
    s.add_argument("--at", help="also evaluate numerically at this q")
    s.add_argument("--digits", type=int, default=30)
    s.set_defaults(func=cmd_haar)

    s = sub.add_parser("eval", parents=[common], help="evaluate a q=1 element at a connection")
    s.add_argument("--graph", required=True)
    s.add_argument("--elem", required=True)
    s.add_argument("--connection", required=True, help="JSON mapping edge keys to 2x2 matrices")
    s.add_argument("--xi", help="framing (default e(0))")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("rep", parents=[common], help="fundamental representation checks")
    s.add_argument("action", choices=["verify", "conjugate"])
    s.add_argument("--matrix", help="JSON 2x2 special-unitary matrix for 'conjugate'")
    s.set_defaults(func=cmd_rep)

    s = sub.add_parser("verify", parents=[common], help="run the identity suites")
    s.add_argument("--suite", action="append", help=f"suite to run (repeatable): {', '.join(SUITES)}")
    s.set_defaults(func=cmd_verify)
    return p


_MODULE_ERRORS = (
    (parsing.ParseError, "parsing"),
    (G.GraphSchemaError, "graphs"),
    (G.GraphError, "graphs"),
    (ContextError, "cylinder"),
    (InvalidParameterError, "morphisms"),
    (NonUniqueError, "haar"),
    (EvaluationError, "scalars"),
)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error[{exc.module}]: {exc}", file=sys.stderr)
    except Exception as exc:
        for cls, module in _MODULE_ERRORS:
            if isinstance(exc, cls):
                print(f"error[{module}]: {exc}", file=sys.stderr)
                break
        else:
            raise
    return 2


if __name__ == "__main__":
    sys.exit(main())
