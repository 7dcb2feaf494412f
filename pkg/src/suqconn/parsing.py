"""Text input: scalars, algebra elements, morphisms, matrices and connections.

Grammar (whitespace separates tokens; juxtaposition multiplies)::

    expr    := [+|-] term ((+|-) term)*
    term    := power ((* | / | <juxtaposition>) power)*
    power   := postfix [^ [-] INT]
    postfix := atom ~*
    atom    := INT | q | i | e(RAT) | a | a* | g | g* | ( expr ) | [ expr ]
    tensor  := [+|-] term ((x) term)* ((+|-) term ((x) term)*)*

A ``*`` written directly after ``a`` or ``g`` is the star; with whitespace in
between it is multiplication.  ``~`` conjugates a scalar.  Everything the
printers emit reads back to an equal value.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .hopf import H, UNIT, HopfElement, SUq2, TensorElement
from .scalars import ONE, I_UNIT, Phase, Q, Scalar

__all__ = [
    "ParseError",
    "parse_scalar",
    "parse_element",
    "parse_tensor",
    "parse_phase",
    "parse_morphism",
    "parse_matrix",
    "parse_connection",
    "to_scalar",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class _Tok:
    kind: str  # num, name, op, end
    text: str
    line: int
    col: int


_TOKEN = re.compile(r"\s+|\(x\)|\d+|[A-Za-z_]+|[-+*/^~().,\[\]]")
_SPLITTABLE = set("agqie")


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        s = m.group()
        if s.isspace():
            nl = s.count("\n")
            if nl:
                line += nl
                line_start = pos + s.rfind("\n") + 1
        elif s.isdigit():
            toks.append(_Tok("num", s, line, col))
        elif s[0].isalpha() or s[0] == "_":
            if s in _KEYWORDS or len(s) == 1 or not set(s) <= _SPLITTABLE:
                toks.append(_Tok("name", s, line, col))
            else:
                for k, ch in enumerate(s):
                    toks.append(_Tok("name", ch, line, col + k))
        elif s == "*" and toks and toks[-1].kind == "name" and toks[-1].text in ("a", "g") \
                and toks[-1].col + len(toks[-1].text) == col and toks[-1].line == line:
            toks[-1] = _Tok("name", toks[-1].text + "*", toks[-1].line, toks[-1].col)
        else:
            toks.append(_Tok("op", s, line, col))
        pos = m.end()
    toks.append(_Tok("end", "", line, len(text) - line_start + 1))
    return toks


_KEYWORDS = {"rho", "xi", "xiaxis", "kappa", "fr", "id"}
_GENS = {"a", "a*", "g", "g*"}


class _Parser:
    def __init__(self, text: str, alg: SUq2 | None, gens: bool = True):
        self.toks = _tokenize(text)
        self.i = 0
        self.alg = alg
        self.gens = gens and alg is not None

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def take(self) -> _Tok:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        if self.tok.text != text or self.tok.kind == "end":
            self.error(f"expected {text!r}" + (f", found {self.tok.text!r}" if self.tok.text else ""))
        return self.take()

    def at(self, *texts: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in texts

    # values are Scalar or HopfElement
    def expr(self):
        neg = False
        if self.at("+", "-"):
            neg = self.take().text == "-"
        v = self.term()
        if neg:
            v = -v
        while self.at("+", "-"):
            op = self.take().text
            rhs = self.term()
            v = _combine(v, rhs, op, self)
        return v

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("num", "name") or (t.kind == "op" and t.text in ("(", "["))

    def term(self):
        v = self.power()
        while True:
            if self.at("*", "/"):
                optok = self.take()
                rhs = self.power()
                if optok.text == "/":
                    if isinstance(rhs, HopfElement):
                        self.error("division by an algebra element", optok)
                    if rhs.is_zero():
                        self.error("division by zero", optok)
                    v = v * rhs.inverse() if isinstance(v, Scalar) else v.scale(rhs.inverse())
                else:
                    v = _combine(v, rhs, "*", self)
            elif self._starts_atom():
                v = _combine(v, self.power(), "*", self)
            else:
                return v

    def power(self):
        v = self.postfix()
        if self.at("^"):
            self.take()
            neg = False
            if self.at("-"):
                self.take()
                neg = True
            if self.tok.kind != "num":
                self.error("expected an integer exponent")
            k = int(self.take().text)
            k = -k if neg else k
            if isinstance(v, HopfElement):
                if k < 0:
                    self.error("negative power of an algebra element")
                return v ** k
            if k < 0 and v.is_zero():
                self.error("zero to a negative power")
            return v ** k
        return v

    def postfix(self):
        v = self.atom()
        while self.at("~"):
            t = self.take()
            if isinstance(v, HopfElement):
                self.error("'~' applies to scalars only", t)
            v = v.conj()
        return v

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return Scalar.coerce(int(t.text))
        if t.kind == "op" and t.text in ("(", "["):
            self.take()
            v = self.expr()
            self.expect(")" if t.text == "(" else "]")
            return v
        if t.kind == "name":
            if t.text == "q":
                self.take()
                if self.alg is not None and not self.alg.symbolic:
                    return self.alg.q
                return Q
            if t.text == "i":
                self.take()
                return I_UNIT
            if t.text == "e":
                self.take()
                self.expect("(")
                r = self.rational()
                self.expect(")")
                return Phase(r).scalar()
            if t.text in _GENS:
                if not self.gens:
                    self.error(f"algebra generator {t.text!r} in a scalar")
                self.take()
                return self.alg.gen(t.text)
            self.error(f"unknown name {t.text!r}")
        if t.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {t.text!r}")

    def rational(self) -> Fraction:
        neg = False
        if self.at("-"):
            self.take()
            neg = True
        if self.tok.kind != "num":
            self.error("expected a rational number")
        r = Fraction(int(self.take().text))
        if self.at("/"):
            self.take()
            if self.tok.kind != "num":
                self.error("expected a denominator")
            d = int(self.tok.text)
            if d == 0:
                self.error("zero denominator")
            self.take()
            r /= d
        return -r if neg else r

    def tensor(self) -> TensorElement:
        """Sum of pure tensors ``f1 (x) f2 (x) ...``; each factor is a product."""
        total = None
        sign = ONE
        if self.at("+", "-"):
            sign = -ONE if self.take().text == "-" else ONE
        while True:
            start = self.tok
            factors = [self.term()]
            while self.at("(x)"):
                self.take()
                factors.append(self.term())
            elems = [f if isinstance(f, HopfElement) else self.alg.one().scale(f) for f in factors]
            t = TensorElement.pure(elems).scale(sign)
            if total is not None and t.arity != total.arity:
                self.error(f"tensor of {t.arity} factors added to one of {total.arity}", start)
            total = t if total is None else total + t
            if not self.at("+", "-"):
                return total
            sign = -ONE if self.take().text == "-" else ONE

    def finish(self):
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")


def _combine(x, y, op, parser: _Parser):
    if isinstance(x, Scalar) and isinstance(y, Scalar):
        return {"+": x + y, "-": x - y, "*": x * y}[op]
    alg = parser.alg
    if isinstance(x, Scalar):
        x = alg.one().scale(x)
    if isinstance(y, Scalar):
        y = alg.one().scale(y)
    return {"+": x + y, "-": x - y, "*": x * y}[op]


def parse_scalar(text: str, alg: SUq2 | None = None) -> Scalar:
    """Scalar expression; with a numeric ``alg``, ``q`` is substituted."""
    p = _Parser(text, alg, gens=False)
    v = p.expr()
    p.finish()
    return v


def parse_element(text: str, alg: SUq2 = H) -> HopfElement:
    p = _Parser(text, alg)
    v = p.expr()
    p.finish()
    if isinstance(v, Scalar):
        return alg.one().scale(v)
    return v


def parse_tensor(text: str, alg: SUq2 = H, arity: int | None = None) -> TensorElement:
    """Tensor expression such as ``a (x) g + q * g (x) [a* g]``."""
    p = _Parser(text, alg)
    t = p.tensor()
    p.finish()
    if arity is not None and t.arity != arity:
        if arity == 0 and t.arity == 1 and all(k == (UNIT,) for k in t.terms):
            return TensorElement(alg, 0, {(): c for c in t.terms.values()})
        raise ParseError(f"expected {arity} tensor factors, got {t.arity}", 1, 1)
    return t


def to_scalar(x) -> Scalar:
    return parse_scalar(x) if isinstance(x, str) else Scalar.coerce(x)


def phase_of(s: Scalar) -> Phase:
    """The phase ``t`` with ``s = e(t)``; raises unless ``s`` is a root of unity."""
    if s.is_constant():
        terms = list(s.constant_value().terms())
        if len(terms) == 1 and abs(terms[0][0]) == 1:
            c, t = terms[0]
            return Phase(t if c == 1 else t + Fraction(1, 2))
    raise ValueError(f"{s} is not a root of unity")


def parse_phase(text: str) -> Phase:
    """``e(t)``, ``i``, ``-1`` and similar roots of unity, or a bare rational ``t``."""
    s = text.strip()
    if re.fullmatch(r"-?\d+(/\d+)?", s) and s not in ("1", "-1"):
        return Phase(Fraction(s))
    v = parse_scalar(s)
    try:
        return phase_of(v)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def _split_args(p: _Parser) -> list[str]:
    """Raw text of comma separated arguments inside parentheses."""
    p.expect("(")
    args: list[list[_Tok]] = [[]]
    depth = 0
    while True:
        t = p.tok
        if t.kind == "end":
            p.error("unclosed '('")
        p.take()
        if t.kind == "op" and t.text == "(":
            depth += 1
        elif t.kind == "op" and t.text == ")":
            if depth == 0:
                break
            depth -= 1
        elif t.kind == "op" and t.text == "," and depth == 0:
            args.append([])
            continue
        args[-1].append(t)
    return [_untokenize(a) for a in args]


def _untokenize(toks: list[_Tok]) -> str:
    out = ""
    prev = None
    for t in toks:
        if prev is not None and (prev.kind, t.kind) in (("name", "name"), ("num", "num"), ("name", "num"), ("num", "name")):
            out += " "
        out += t.text
        prev = t
    return out


def parse_morphism(text: str, alg: SUq2 = H):
    """``rho(w)``, ``rho(z, x)``, ``xi(w)``, ``xiaxis(z, x)``, ``kappa``, ``id``,
    ``fr(t, t2)``, composed with ``.`` (rightmost acts first)."""
    from . import morphisms as M

    p = _Parser(text, None)
    parts = []
    while True:
        t = p.tok
        if t.kind != "name" or t.text not in _KEYWORDS:
            p.error("expected a morphism name")
        p.take()
        try:
            if t.text in ("kappa", "id"):
                parts.append(M.antipode_q1(alg) if t.text == "kappa" else M.identity(alg))
            else:
                args = _split_args(p)
                if t.text == "rho" and len(args) == 1:
                    parts.append(M.make_rho(parse_phase(args[0]), alg))
                elif t.text == "rho" and len(args) == 2:
                    parts.append(M.make_rho_general(parse_scalar(args[0]), parse_scalar(args[1]), alg))
                elif t.text == "xi" and len(args) == 1:
                    parts.append(M.make_xi(parse_phase(args[0]), alg))
                elif t.text == "xiaxis" and len(args) == 2:
                    parts.append(M.make_xi_axis(parse_scalar(args[0]), parse_scalar(args[1]), alg))
                elif t.text == "fr" and len(args) == 2:
                    parts.append(M.frame_change(Fraction(args[0]), Fraction(args[1]), alg))
                else:
                    p.error(f"wrong number of arguments for {t.text}", t)
        except (M.InvalidParameterError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ParseError):
                raise
            p.error(str(exc), t)
        if p.at("."):
            p.take()
            continue
        p.finish()
        break
    out = parts[-1]
    for m in reversed(parts[:-1]):
        out = M.compose(m, out)
    return out


def parse_matrix(data, path: str = "$") -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
    """2x2 list of scalar strings (or numbers)."""
    from .graphs import GraphSchemaError

    if not (isinstance(data, list) and len(data) == 2 and all(isinstance(r, list) and len(r) == 2 for r in data)):
        raise GraphSchemaError(path, "expected a 2x2 array")
    rows = []
    for i, row in enumerate(data):
        out = []
        for j, v in enumerate(row):
            p = f"{path}[{i}][{j}]"
            if isinstance(v, bool) or not isinstance(v, (str, int)):
                raise GraphSchemaError(p, "expected a scalar string")
            try:
                s = parse_scalar(str(v))
            except ParseError as exc:
                raise GraphSchemaError(p, exc.args[0]) from None
            if not s.is_constant():
                raise GraphSchemaError(p, "entry depends on q")
            out.append(s)
        rows.append(tuple(out))
    return tuple(rows)


def parse_connection(data, xi):
    """Connection from ``{"curve:lo:hi:dir": [[..], [..]], ...}`` (JSON text or object)."""
    from .cylinder import Connection, is_special_unitary, _mat
    from .graphs import Edge, GraphSchemaError

    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise GraphSchemaError("$", "expected an object mapping edge keys to matrices")
    given = {}
    for key, m in data.items():
        path = f"$[{json.dumps(key)}]"
        try:
            e = Edge.from_key(key)
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphSchemaError(path, f"bad edge key: {exc}") from None
        mat = _mat(parse_matrix(m, path))
        if not is_special_unitary(mat):
            raise GraphSchemaError(path, "matrix is not special unitary")
        given[e] = mat
    return Connection.from_assignments(given, xi)
