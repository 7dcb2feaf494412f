"""The SU_q(2) Hopf *-algebra in PBW normal form.

Basis monomials are ``alpha^a gamma^m gamma*^n`` for ``a >= 0`` and
``alpha*^k gamma^m gamma*^n`` for ``k >= 1``.  Both are stored as a single
:class:`Monomial` with a signed first field: ``a < 0`` means ``alpha*^(-a)``.

Two independent routes produce normal forms:

* :meth:`SUq2.normalize` runs the seven-rule rewriting system on free words;
* :meth:`SUq2.mul_monomials` uses closed-form product formulas.

The test-suite checks one against the other.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .scalars import ONE, ZERO, Q, Scalar

__all__ = [
    "Monomial",
    "SUq2",
    "HopfElement",
    "TensorElement",
    "LETTERS",
    "H",
    "algebra",
    "monomials_of_degree",
    "monomials_up_to",
    "tensor_apply",
    "comultiply",
    "multiply",
    "star",
]

LETTERS = ("a", "a*", "g", "g*")


class Monomial(NamedTuple):
    a: int = 0
    m: int = 0
    n: int = 0

    @property
    def degree(self) -> int:
        return abs(self.a) + self.m + self.n

    @property
    def weight(self) -> tuple[int, int]:
        """Left/right grading: alpha (1,1), gamma* (1,-1), gamma (-1,1), alpha* (-1,-1)."""
        return (self.a + self.n - self.m, self.a - self.n + self.m)

    def word(self) -> tuple[str, ...]:
        head = ("a",) * self.a if self.a >= 0 else ("a*",) * (-self.a)
        return head + ("g",) * self.m + ("g*",) * self.n

    def sort_key(self):
        return (self.degree, -self.a if self.a >= 0 else 1000 - self.a, -self.m, self.n)

    def __str__(self) -> str:
        parts = []
        for sym, k in (("a" if self.a >= 0 else "a*", abs(self.a)), ("g", self.m), ("g*", self.n)):
            if k == 1:
                parts.append(sym)
            elif k > 1:
                parts.append(f"{sym}^{k}")
        return " ".join(parts) if parts else "1"


UNIT = Monomial(0, 0, 0)
_GEN_MONO = {"a": Monomial(1, 0, 0), "a*": Monomial(-1, 0, 0), "g": Monomial(0, 1, 0), "g*": Monomial(0, 0, 1)}


def monomials_of_degree(d: int) -> list[Monomial]:
    out = []
    for m in range(d + 1):
        for n in range(d + 1 - m):
            k = d - m - n
            out.append(Monomial(k, m, n))
            if k:
                out.append(Monomial(-k, m, n))
    return sorted(out, key=Monomial.sort_key)


def monomials_up_to(d: int) -> list[Monomial]:
    return [x for k in range(d + 1) for x in monomials_of_degree(k)]


def _add_into(acc: dict, key, coeff: Scalar) -> None:
    cur = acc.get(key)
    if cur is None:
        if not coeff.is_zero():
            acc[key] = coeff
        return
    s = cur + coeff
    if s.is_zero():
        del acc[key]
    else:
        acc[key] = s


class SUq2:
    """Structure constants of SU_q(2) for a fixed deformation parameter.

    ``q`` may be ``None`` (formal symbol) or any value accepted by
    :meth:`Scalar.coerce`, e.g. ``1`` for the commutative specialization.
    """

    def __init__(self, q=None):
        self.q = Q if q is None else Scalar.coerce(q)
        if self.q.is_zero():
            raise ValueError("q must be nonzero")
        self.symbolic = q is None
        self._qpow: dict[int, Scalar] = {}
        self._prod_cache: dict[tuple[Monomial, Monomial], dict[Monomial, Scalar]] = {}
        self._cpoly_cache: dict[tuple[int, int], list[Scalar]] = {}
        self._comul_cache: dict[Monomial, dict] = {}
        self._star_cache: dict[Monomial, dict[Monomial, Scalar]] = {}

    def __repr__(self) -> str:
        return "SUq2(q)" if self.symbolic else f"SUq2(q={self.q})"

    def qpow(self, k: int) -> Scalar:
        v = self._qpow.get(k)
        if v is None:
            v = self.q**k
            self._qpow[k] = v
        return v

    @property
    def is_classical(self) -> bool:
        return (self.q * self.q).is_one()

    # -- constructors ---------------------------------------------------------

    def element(self, terms: Mapping[Monomial, object] | None = None) -> "HopfElement":
        clean: dict[Monomial, Scalar] = {}
        for k, v in (terms or {}).items():
            _add_into(clean, Monomial(*k), Scalar.coerce(v))
        return HopfElement(self, clean)

    def one(self) -> "HopfElement":
        return HopfElement(self, {UNIT: ONE})

    def zero(self) -> "HopfElement":
        return HopfElement(self, {})

    def monomial(self, mono: Monomial, coeff=ONE) -> "HopfElement":
        return self.element({Monomial(*mono): coeff})

    def gen(self, letter: str) -> "HopfElement":
        return HopfElement(self, {_GEN_MONO[letter]: ONE})

    @property
    def alpha(self) -> "HopfElement":
        return self.gen("a")

    @property
    def alpha_star(self) -> "HopfElement":
        return self.gen("a*")

    @property
    def gamma(self) -> "HopfElement":
        return self.gen("g")

    @property
    def gamma_star(self) -> "HopfElement":
        return self.gen("g*")

    # -- rewriting route ------------------------------------------------------------

    def _rewrite_pair(self, x: str, y: str):
        """Rewrite the adjacent pair ``x y``; ``None`` when it is already ordered."""
        q = self.qpow
        if x == "g*" and y == "g":
            return [(ONE, ("g", "g*"))]
        if x in ("g", "g*") and y == "a":
            return [(q(-1), ("a", x))]
        if x in ("g", "g*") and y == "a*":
            return [(q(1), ("a*", x))]
        if x == "a" and y == "a*":
            return [(ONE, ()), (-q(2), ("g", "g*"))]
        if x == "a*" and y == "a":
            return [(ONE, ()), (-ONE, ("g*", "g"))]
        return None

    def normalize(self, word: Iterable[str] | Mapping[tuple[str, ...], object]) -> "HopfElement":
        """Normal form of a free word (or a linear combination of words) by rewriting."""
        if isinstance(word, Mapping):
            pending = {tuple(w): Scalar.coerce(c) for w, c in word.items()}
        else:
            pending = {tuple(word): ONE}
        for w in pending:
            for letter in w:
                if letter not in _GEN_MONO:
                    raise ValueError(f"unknown generator {letter!r}")
        done: dict[Monomial, Scalar] = {}
        while pending:
            w, c = pending.popitem()
            for i in range(len(w) - 1):
                rule = self._rewrite_pair(w[i], w[i + 1])
                if rule is not None:
                    for k, rhs in rule:
                        _add_into(pending, w[:i] + rhs + w[i + 2 :], c * k)
                    break
            else:
                _add_into(done, _word_to_monomial(w), c)
        return HopfElement(self, done)

    # -- closed-form route ------------------------------------------------------------

    def _c_poly(self, k: int, kind: int) -> list[Scalar]:
        """Coefficients in ``c = gamma gamma*`` of the two product families.

        kind 0: prod_{i=1..k} (1 - q^{2i} c)   (from alpha^k alpha*^k)
        kind 1: prod_{i=0..k-1} (1 - q^{-2i} c) (from alpha*^k alpha^k)
        """
        key = (k, kind)
        got = self._cpoly_cache.get(key)
        if got is not None:
            return got
        if k == 0:
            poly = [ONE]
        else:
            prev = self._c_poly(k - 1, kind)
            r = self.qpow(2 * k) if kind == 0 else self.qpow(-2 * (k - 1))
            poly = prev + [ZERO]
            for j in range(len(prev)):
                poly[j + 1] = poly[j + 1] - r * prev[j]
        self._cpoly_cache[key] = poly
        return poly

    def _alpha_product(self, a1: int, a2: int) -> list[tuple[int, int, Scalar]]:
        """``X(a1) X(a2)`` as a list of ``(a, j, coeff)`` meaning ``coeff * X(a) c^j``."""
        if a1 >= 0 and a2 >= 0 or a1 <= 0 and a2 <= 0:
            return [(a1 + a2, 0, ONE)]
        if a1 > 0:
            k, l = a1, -a2
            if k >= l:
                return [(k - l, j, c) for j, c in enumerate(self._c_poly(l, 0)) if not c.is_zero()]
            r = l - k
            # c^j alpha*^r = q^{2jr} alpha*^r c^j
            return [(-r, j, c * self.qpow(2 * j * r)) for j, c in enumerate(self._c_poly(k, 0)) if not c.is_zero()]
        k, l = -a1, a2
        if k >= l:
            return [(-(k - l), j, c) for j, c in enumerate(self._c_poly(l, 1)) if not c.is_zero()]
        r = l - k
        # c^j alpha^r = q^{-2jr} alpha^r c^j
        return [(r, j, c * self.qpow(-2 * j * r)) for j, c in enumerate(self._c_poly(k, 1)) if not c.is_zero()]

    def mul_monomials(self, x: Monomial, y: Monomial) -> dict[Monomial, Scalar]:
        key = (x, y)
        got = self._prod_cache.get(key)
        if got is not None:
            return got
        # (X1 G1)(X2 G2) = q^{-a2 (m1+n1)} X1 X2 G1 G2
        pre = self.qpow(-y.a * (x.m + x.n))
        out: dict[Monomial, Scalar] = {}
        m, n = x.m + y.m, x.n + y.n
        for a, j, c in self._alpha_product(x.a, y.a):
            _add_into(out, Monomial(a, m + j, n + j), c * pre)
        self._prod_cache[key] = out
        return out

    def star_monomial(self, x: Monomial) -> dict[Monomial, Scalar]:
        got = self._star_cache.get(x)
        if got is None:
            # (X G)* = gamma^n gamma*^m X*
            got = self.mul_monomials(Monomial(0, x.n, x.m), Monomial(-x.a, 0, 0))
            self._star_cache[x] = got
        return got

    # -- comultiplication ------------------------------------------------------------

    def _comul_gen(self, letter: str) -> dict:
        # Phi(u_ij) = sum_k u_ik (x) u_kj with u_12 = -q gamma*
        q1 = self.q
        A, As, G, Gs = (_GEN_MONO[s] for s in LETTERS)
        if letter == "a":
            return {(A, A): ONE, (Gs, G): -q1}
        if letter == "a*":
            return {(As, As): ONE, (G, Gs): -q1}
        if letter == "g":
            return {(G, A): ONE, (As, G): ONE}
        return {(Gs, As): ONE, (A, Gs): ONE}

    def comul_monomial(self, x: Monomial) -> dict:
        got = self._comul_cache.get(x)
        if got is not None:
            return got
        if x == UNIT:
            got = {(UNIT, UNIT): ONE}
        else:
            if x.n:
                rest, letter = Monomial(x.a, x.m, x.n - 1), "g*"
            elif x.m:
                rest, letter = Monomial(x.a, x.m - 1, 0), "g"
            elif x.a > 0:
                rest, letter = Monomial(x.a - 1, 0, 0), "a"
            else:
                rest, letter = Monomial(x.a + 1, 0, 0), "a*"
            got = _tensor_mul_terms(self, self.comul_monomial(rest), self._comul_gen(letter))
        self._comul_cache[x] = got
        return got


def _word_to_monomial(w: Sequence[str]) -> Monomial:
    a = m = n = 0
    for s in w:
        if s == "a":
            a += 1
        elif s == "a*":
            a -= 1
        elif s == "g":
            m += 1
        else:
            n += 1
    return Monomial(a, m, n)


def _check_same(x: "HopfElement", y: "HopfElement") -> None:
    if x.alg is not y.alg:
        raise ValueError("elements belong to different algebras")


class HopfElement:
    """Linear combination of PBW monomials with :class:`Scalar` coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: SUq2, terms: dict[Monomial, Scalar]):
        self.alg = alg
        self.terms = terms

    def _lift(self, other) -> "HopfElement":
        if isinstance(other, HopfElement):
            _check_same(self, other)
            return other
        c = Scalar.coerce(other)
        return HopfElement(self.alg, {UNIT: c} if not c.is_zero() else {})

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return HopfElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return HopfElement(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "HopfElement":
        c = Scalar.coerce(c)
        if c.is_zero():
            return HopfElement(self.alg, {})
        return HopfElement(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HopfElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        _check_same(self, other)
        alg = self.alg
        out: dict[Monomial, Scalar] = {}
        for x, cx in self.terms.items():
            for y, cy in other.terms.items():
                c = cx * cy
                for z, cz in alg.mul_monomials(x, y).items():
                    _add_into(out, z, c * cz)
        return HopfElement(alg, out)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int) -> "HopfElement":
        if k < 0:
            raise ValueError("negative power")
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def star(self) -> "HopfElement":
        out: dict[Monomial, Scalar] = {}
        for x, c in self.terms.items():
            cc = c.conj()
            for z, cz in self.alg.star_monomial(x).items():
                _add_into(out, z, cc * cz)
        return HopfElement(self.alg, out)

    def comultiply(self) -> "TensorElement":
        out: dict = {}
        for x, c in self.terms.items():
            for k, v in self.alg.comul_monomial(x).items():
                _add_into(out, k, c * v)
        return TensorElement(self.alg, 2, out)

    def as_tensor(self) -> "TensorElement":
        return TensorElement(self.alg, 1, {(k,): v for k, v in self.terms.items()})

    def coefficient(self, mono) -> Scalar:
        return self.terms.get(Monomial(*mono), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((k.degree for k in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, HopfElement):
            if other.alg is not self.alg:
                return False
        else:
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(v == other.terms[k] for k, v in self.terms.items())

    __hash__ = None

    def substitute(self, alg: SUq2, q0) -> "HopfElement":
        """Specialize coefficients at ``q = q0`` into ``alg``."""
        return alg.element({k: v.substitute(q0) for k, v in self.terms.items()})

    def __str__(self) -> str:
        return format_terms(sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()), str)

    def __repr__(self) -> str:
        return f"HopfElement({self})"


def format_terms(items, fmt_key: Callable) -> str:
    if not items:
        return "0"
    parts = []
    for key, c in items:
        body = fmt_key(key)
        if body == "1":
            parts.append(str(c))
            continue
        if c.is_one():
            parts.append(body)
        elif (-c).is_one():
            parts.append("-" + body)
        else:
            cs = str(c)
            if c.needs_parens():
                cs = f"({cs})"
            parts.append(f"{cs} * {body}")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


# ------------------------------------------------------------------------------
# Tensor powers
# ------------------------------------------------------------------------------


def _tensor_mul_terms(alg: SUq2, left: Mapping, right: Mapping) -> dict:
    out: dict = {}
    for kx, cx in left.items():
        for ky, cy in right.items():
            c = cx * cy
            slots = [alg.mul_monomials(x, y) for x, y in zip(kx, ky)]
            for combo in itertools.product(*(s.items() for s in slots)):
                coeff = c
                for _, v in combo:
                    coeff = coeff * v
                _add_into(out, tuple(z for z, _ in combo), coeff)
    return out


class TensorElement:
    """Element of the ``arity``-fold algebraic tensor power of SU_q(2)."""

    __slots__ = ("alg", "arity", "terms")

    def __init__(self, alg: SUq2, arity: int, terms: dict):
        self.alg = alg
        self.arity = arity
        self.terms = terms

    @classmethod
    def pure(cls, factors: Sequence[HopfElement]) -> "TensorElement":
        if not factors:
            raise ValueError("empty tensor product")
        alg = factors[0].alg
        out: dict = {(): ONE}
        for f in factors:
            _check_same(factors[0], f)
            nxt: dict = {}
            for k, c in out.items():
                for m, v in f.terms.items():
                    _add_into(nxt, k + (m,), c * v)
            out = nxt
        return cls(alg, len(factors), out)

    @classmethod
    def one(cls, alg: SUq2, arity: int) -> "TensorElement":
        return cls(alg, arity, {(UNIT,) * arity: ONE})

    def _check(self, other: "TensorElement") -> None:
        if other.alg is not self.alg or other.arity != self.arity:
            raise ValueError("tensor arity or algebra mismatch")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return TensorElement(self.alg, self.arity, out)

    def __neg__(self):
        return TensorElement(self.alg, self.arity, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = Scalar.coerce(c)
        if c.is_zero():
            return TensorElement(self.alg, self.arity, {})
        return TensorElement(self.alg, self.arity, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        return TensorElement(self.alg, self.arity, _tensor_mul_terms(self.alg, self.terms, other.terms))

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def star(self) -> "TensorElement":
        alg = self.alg
        out: dict = {}
        for key, c in self.terms.items():
            cc = c.conj()
            slots = [alg.star_monomial(x) for x in key]
            for combo in itertools.product(*(s.items() for s in slots)):
                coeff = cc
                for _, v in combo:
                    coeff = coeff * v
                _add_into(out, tuple(z for z, _ in combo), coeff)
        return TensorElement(alg, self.arity, out)

    def permute(self, perm: Sequence[int]) -> "TensorElement":
        """New slot ``i`` holds old slot ``perm[i]``."""
        if sorted(perm) != list(range(self.arity)):
            raise ValueError("not a permutation of the slots")
        return TensorElement(
            self.alg, self.arity, {tuple(k[p] for p in perm): v for k, v in self.terms.items()}
        )

    def flip(self) -> "TensorElement":
        return self.permute(list(range(self.arity))[::-1])

    def map_slot(self, i: int, f: Callable) -> "TensorElement":
        """Apply ``f`` to slot ``i`` only; tensor-valued images are spliced in place."""
        cache: dict[Monomial, dict] = {}
        out: dict = {}
        width = 1
        for key, c in self.terms.items():
            img = cache.get(key[i])
            if img is None:
                r = f(HopfElement(self.alg, {key[i]: ONE}))
                if isinstance(r, HopfElement):
                    img = {(k,): v for k, v in r.terms.items()}
                else:
                    img = r.terms
                    width = r.arity
                cache[key[i]] = img
            head, tail = key[:i], key[i + 1 :]
            for k, v in img.items():
                _add_into(out, head + k + tail, c * v)
        if not cache and self.arity:
            r = f(self.alg.one())
            width = 1 if isinstance(r, HopfElement) else r.arity
        return TensorElement(self.alg, self.arity - 1 + width, out)

    def insert_unit(self, i: int) -> "TensorElement":
        """Tensor with ``I`` placed at new slot ``i``."""
        return TensorElement(
            self.alg, self.arity + 1, {k[:i] + (UNIT,) + k[i:]: v for k, v in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.alg is not self.alg or other.arity != self.arity:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(v == other.terms[k] for k, v in self.terms.items())

    __hash__ = None

    def to_hopf(self) -> HopfElement:
        if self.arity != 1:
            raise ValueError("only arity-1 tensors convert to HopfElement")
        return HopfElement(self.alg, {k[0]: v for k, v in self.terms.items()})

    def slot_factors(self):
        """Iterate ``(coeff, [HopfElement per slot])`` for each pure term."""
        for key, c in self.terms.items():
            yield c, [HopfElement(self.alg, {m: ONE}) for m in key]

    def __str__(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: [m.sort_key() for m in kv[0]])
        return format_terms(items, lambda key: " (x) ".join(f"[{m}]" if m.degree > 1 else str(m) for m in key))

    def __repr__(self) -> str:
        return f"TensorElement({self})"


def tensor_apply(maps: Sequence[Callable], x: TensorElement) -> TensorElement:
    """Apply ``maps[i]`` to slot ``i`` and flatten tensor-valued outputs.

    Each map takes a :class:`HopfElement` and returns a :class:`HopfElement`
    or a :class:`TensorElement`.  Results are cached per slot monomial.
    """
    if len(maps) != x.arity:
        raise ValueError(f"expected {x.arity} slot maps, got {len(maps)}")
    alg = x.alg
    caches: list[dict] = [{} for _ in maps]

    def image(i: int, mono: Monomial) -> dict:
        got = caches[i].get(mono)
        if got is None:
            r = maps[i](HopfElement(alg, {mono: ONE}))
            if isinstance(r, HopfElement):
                got = {(k,): v for k, v in r.terms.items()}
            else:
                got = r.terms
            caches[i][mono] = got
        return got

    out: dict = {}
    arity = None
    for key, c in x.terms.items():
        parts = [image(i, m) for i, m in enumerate(key)]
        for combo in itertools.product(*(p.items() for p in parts)):
            coeff = c
            k: tuple = ()
            for kk, v in combo:
                coeff = coeff * v
                k += kk
            _add_into(out, k, coeff)
            arity = len(k)
    if arity is None:
        arity = 0
        for i in range(x.arity):
            probe = maps[i](alg.one())
            arity += 1 if isinstance(probe, HopfElement) else probe.arity
    return TensorElement(alg, arity, out)


def comultiply(a: HopfElement) -> TensorElement:
    return a.comultiply()


def star(a):
    return a.star()


def multiply(a: HopfElement, b: HopfElement) -> HopfElement:
    return a * b


H = SUq2()
_ALGEBRAS: dict = {None: H}


def algebra(q=None) -> SUq2:
    """Shared algebra instance for a given deformation parameter (``None``: symbolic)."""
    key = None if q is None else str(Scalar.coerce(q))
    got = _ALGEBRAS.get(key)
    if got is None:
        got = _ALGEBRAS[key] = SUq2(q)
    return got
