"""Exact coefficient field: rational functions in ``q`` over cyclotomic numbers.

Three layers:

* :class:`Phase` -- a rational angle ``t`` mod 1 standing for ``e(t) = exp(2*pi*i*t)``.
* :class:`Cyclotomic` -- an element of ``Q(zeta_N)`` in the power basis
  ``1, zeta, ..., zeta^(phi(N)-1)`` with ``zeta = e(1/N)``.
* :class:`Scalar` -- ``P(q) / D(q)`` with ``P`` in ``Q(zeta_N)[q]`` and ``D`` a
  monic polynomial in ``Q[q]``.  ``D`` is the monic generator of the ideal
  ``{E in Q[q] : E*s in Q(zeta_N)[q]}``, which makes the pair canonical.

Mixed-conductor arithmetic promotes both operands to the lcm of the conductors.
Conductors ``N = 2 (mod 4)`` are never materialised, since ``Q(zeta_2m) = Q(zeta_m)``
for odd ``m``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

import mpmath
from flint import fmpq, fmpq_poly, fmpz_poly

__all__ = [
    "Phase",
    "Cyclotomic",
    "Scalar",
    "EvaluationError",
    "reduce",
    "evaluate",
    "conjugate",
    "Q",
    "ONE",
    "ZERO",
    "I_UNIT",
]


class EvaluationError(ArithmeticError):
    """Raised when a scalar has a pole at the requested point."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


class _Field:
    """Per-conductor tables: coordinates of ``zeta^k`` for ``0 <= k < N``."""

    __slots__ = ("N", "phi", "powers", "units")

    def __init__(self, N: int):
        self.N = N
        phi = _totient(N)
        self.phi = phi
        modulus = [int(c) for c in fmpz_poly.cyclotomic(N).coeffs()]
        # zeta^phi = -sum(modulus[r] * zeta^r)
        top = [-Fraction(c) for c in modulus[:phi]]
        cur = [Fraction(0)] * phi
        cur[0] = Fraction(1)
        powers = []
        for _ in range(N):
            powers.append(tuple((r, fmpq(c.numerator, c.denominator)) for r, c in enumerate(cur) if c))
            carry = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if carry:
                cur = [a + carry * b for a, b in zip(cur, top)]
        self.powers = powers
        self.units = [j for j in range(1, N) if gcd(j, N) == 1] or [1]


@lru_cache(maxsize=None)
def _field(N: int) -> _Field:
    return _Field(N)


def _normal_conductor(N: int) -> int:
    if N % 4 == 2:
        return N // 2
    return N


# --------------------------------------------------------------------------
# Phase
# --------------------------------------------------------------------------


class Phase:
    """Unit complex number ``e(t)`` with rational ``t`` reduced into ``[0, 1)``."""

    __slots__ = ("t",)

    def __init__(self, t: Union[Fraction, int, str] = 0):
        t = Fraction(t)
        object.__setattr__(self, "t", t - (t.numerator // t.denominator))

    def __setattr__(self, name, value):
        raise AttributeError("Phase is immutable")

    def __mul__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.t + other.t)

    def __truediv__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.t - other.t)

    def __pow__(self, k: int) -> "Phase":
        return Phase(self.t * k)

    def conj(self) -> "Phase":
        return Phase(-self.t)

    def __eq__(self, other) -> bool:
        return isinstance(other, Phase) and self.t == other.t

    def __hash__(self) -> int:
        return hash(("Phase", self.t))

    def __repr__(self) -> str:
        return f"e({self.t})"

    def embed(self) -> "Cyclotomic":
        return Cyclotomic.root_of_unity(self.t)

    def scalar(self) -> "Scalar":
        return Scalar.from_cyclotomic(self.embed())


# --------------------------------------------------------------------------
# Cyclotomic
# --------------------------------------------------------------------------


def _vec_from_pairs(phi: int, pairs, scale=1):
    out = [fmpq(0)] * phi
    for r, c in pairs:
        out[r] += c * scale
    return out


class Cyclotomic:
    """Element of ``Q(zeta_N)``; ``coords[r]`` is the coefficient of ``zeta_N^r``."""

    __slots__ = ("N", "coords")

    def __init__(self, N: int, coords):
        coords = tuple(fmpq(c) if not isinstance(c, fmpq) else c for c in coords)
        if len(coords) != _field(N).phi:
            raise ValueError(f"expected {_field(N).phi} coordinates for conductor {N}")
        if N != 1 and not any(coords[1:]):
            N, coords = 1, coords[:1]
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        value = Fraction(value)
        return cls(1, (fmpq(value.numerator, value.denominator),))

    @classmethod
    def root_of_unity(cls, t) -> "Cyclotomic":
        t = Fraction(t)
        t -= t.numerator // t.denominator
        p, n = t.numerator, t.denominator
        sign = 1
        if n % 4 == 2:
            # e(p/2m) = -e(((p+m)/2)/m) for odd m
            m = n // 2
            sign = -1
            p, n = ((p + m) // 2) % m if m > 1 else 0, m
        F = _field(n)
        return cls(n, _vec_from_pairs(F.phi, F.powers[p % n], sign))

    @classmethod
    def gaussian(cls, re, im) -> "Cyclotomic":
        re, im = Fraction(re), Fraction(im)
        return cls(4, (fmpq(re.numerator, re.denominator), fmpq(im.numerator, im.denominator)))

    def promote(self, M: int) -> "Cyclotomic":
        if M == self.N:
            return self
        if M % self.N:
            raise ValueError(f"conductor {self.N} does not divide {M}")
        F = _field(M)
        step = M // self.N
        out = [fmpq(0)] * F.phi
        for i, c in enumerate(self.coords):
            if c:
                for r, v in F.powers[(i * step) % M]:
                    out[r] += c * v
        obj = object.__new__(Cyclotomic)
        object.__setattr__(obj, "N", M)
        object.__setattr__(obj, "coords", tuple(out))
        return obj

    def _pair(self, other: "Cyclotomic"):
        M = _lcm(self.N, other.N)
        return self.promote(M), other.promote(M), M

    def __add__(self, other):
        other = _as_cyclotomic(other)
        if other is None:
            return NotImplemented
        a, b, M = self._pair(other)
        return Cyclotomic(M, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.N, [-x for x in self.coords])

    def __sub__(self, other):
        other = _as_cyclotomic(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_cyclotomic(other)
        if other is None:
            return NotImplemented
        a, b, M = self._pair(other)
        F = _field(M)
        acc = [fmpq(0)] * F.phi
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if y:
                    for r, v in F.powers[(i + j) % M]:
                        acc[r] += x * y * v
        return Cyclotomic(M, acc)

    __rmul__ = __mul__

    def galois(self, j: int) -> "Cyclotomic":
        """Image under ``zeta -> zeta^j`` (``j`` coprime to the conductor)."""
        F = _field(self.N)
        acc = [fmpq(0)] * F.phi
        for i, x in enumerate(self.coords):
            if x:
                for r, v in F.powers[(i * j) % self.N]:
                    acc[r] += x * v
        return Cyclotomic(self.N, acc)

    def conj(self) -> "Cyclotomic":
        return self.galois(-1 % self.N if self.N > 1 else 1)

    def norm(self) -> fmpq:
        F = _field(self.N)
        acc = Cyclotomic(1, (fmpq(1),))
        for j in F.units:
            acc = acc * self.galois(j)
        return acc.coords[0]

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        F = _field(self.N)
        rest = Cyclotomic(1, (fmpq(1),))
        for j in F.units:
            if j != 1:
                rest = rest * self.galois(j)
        n = (self * rest).coords[0]
        return rest * Cyclotomic(1, (1 / n,))

    def __truediv__(self, other):
        other = _as_cyclotomic(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic(1, (fmpq(1),))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return self.N == 1

    def __eq__(self, other) -> bool:
        other = _as_cyclotomic(other)
        if other is None:
            return NotImplemented
        a, b, _ = self._pair(other)
        return a.coords == b.coords

    __hash__ = None

    def to_complex(self, dps: int = 30):
        with mpmath.workdps(dps + 10):
            z = mpmath.mpc(0)
            for r, c in enumerate(self.coords):
                if c:
                    z += mpmath.mpf(int(c.p)) / int(c.q) * mpmath.expjpi(mpmath.mpf(2 * r) / self.N)
            return z

    def terms(self):
        """Pairs ``(coefficient, Fraction t)`` meaning ``coefficient * e(t)``."""
        for r, c in enumerate(self.coords):
            if c:
                yield Fraction(int(c.p), int(c.q)), Fraction(r, self.N)

    def __str__(self) -> str:
        return _format_cyclotomic(self)

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"


def _as_cyclotomic(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x)
    if isinstance(x, fmpq):
        return Cyclotomic(1, (x,))
    if isinstance(x, Phase):
        return x.embed()
    return None


def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_cyclotomic(x: Cyclotomic) -> str:
    parts = []
    for c, t in x.terms():
        if t == 0:
            atom = ""
        elif t == Fraction(1, 4):
            atom = "i"
        else:
            atom = f"e({_fmt_fraction(t)})"
        if not atom:
            body = _fmt_fraction(c)
        elif c == 1:
            body = atom
        elif c == -1:
            body = "-" + atom
        else:
            body = f"{_fmt_fraction(c)}*{atom}"
        parts.append(body)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


# --------------------------------------------------------------------------
# Scalar
# --------------------------------------------------------------------------

_PZERO = fmpq_poly([])
_PONE = fmpq_poly([1])
_PQ = fmpq_poly([0, 1])


def _monic(p: fmpq_poly):
    lc = p.leading_coefficient()
    if lc == 1:
        return p, fmpq(1)
    return p / lc, lc


class Scalar:
    """Canonical element of ``Q(zeta_N)(q)``.

    ``num`` holds one ``fmpq_poly`` in ``q`` per power-basis coordinate;
    ``den`` is monic in ``Q[q]`` and shares no factor with all coordinates.
    """

    __slots__ = ("N", "num", "den")

    def __init__(self, N: int, num, den: fmpq_poly = _PONE, _canonical: bool = False):
        num = tuple(num)
        if _canonical:
            object.__setattr__(self, "N", N)
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", den)
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if len(num) != _field(N).phi:
            raise ValueError("coordinate count does not match conductor")
        nonzero = [p for p in num if not p.is_zero()]
        if not nonzero:
            N, num, den = 1, (_PZERO,), _PONE
        else:
            if not den.is_constant():
                g = den
                for p in nonzero:
                    g = g.gcd(p)
                    if g.is_one():
                        break
                if not g.is_one():
                    den = den // g
                    num = tuple(p // g for p in num)
            den, lc = _monic(den)
            if lc != 1:
                num = tuple(p / lc for p in num)
            if N != 1 and all(p.is_zero() for p in num[1:]):
                N, num = 1, num[:1]
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_cyclotomic(cls, c: Cyclotomic) -> "Scalar":
        return cls(c.N, [fmpq_poly([x]) for x in c.coords])

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            return cls(1, (fmpq_poly([x]),), _PONE, True) if x else ZERO
        if isinstance(x, Fraction):
            return cls(1, (fmpq_poly([fmpq(x.numerator, x.denominator)]),))
        if isinstance(x, fmpq):
            return cls(1, (fmpq_poly([x]),))
        if isinstance(x, Phase):
            return x.scalar()
        if isinstance(x, Cyclotomic):
            return cls.from_cyclotomic(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    @classmethod
    def q_power(cls, k: int) -> "Scalar":
        if k >= 0:
            return cls(1, (_PQ**k,), _PONE, True)
        return cls(1, (_PONE,), _PQ ** (-k), True)

    @classmethod
    def from_polys(cls, num: fmpq_poly, den: fmpq_poly = _PONE) -> "Scalar":
        return cls(1, (num,), den)

    # -- structure ---------------------------------------------------------

    def promote(self, M: int) -> "Scalar":
        if M == self.N:
            return self
        F = _field(M)
        step = M // self.N
        out = [_PZERO] * F.phi
        for i, p in enumerate(self.num):
            if not p.is_zero():
                for r, v in F.powers[(i * step) % M]:
                    out[r] = out[r] + p * v
        return Scalar(M, out, self.den, True)

    def _pair(self, other: "Scalar"):
        if self.N == other.N:
            return self.num, other.num, self.N
        M = _lcm(self.N, other.N)
        return self.promote(M).num, other.promote(M).num, M

    def is_zero(self) -> bool:
        return self.N == 1 and self.num[0].is_zero()

    def is_one(self) -> bool:
        return self.N == 1 and self.den.is_one() and self.num[0].is_one()

    def is_constant(self) -> bool:
        return self.den.is_constant() and all(p.is_constant() for p in self.num)

    def constant_value(self) -> Cyclotomic:
        if not self.is_constant():
            raise ValueError(f"{self} depends on q")
        return Cyclotomic(self.N, [p[0] for p in self.num])

    def is_real_coefficient(self) -> bool:
        return self.N == 1

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.N == 1 and other.N == 1 and self.den.is_one() and other.den.is_one():
            p = self.num[0] + other.num[0]
            return Scalar(1, (p,), _PONE, True) if not p.is_zero() else ZERO
        a, b, M = self._pair(other)
        if self.den == other.den:
            return Scalar(M, [x + y for x, y in zip(a, b)], self.den)
        g = self.den.gcd(other.den)
        da, db = other.den // g, self.den // g
        return Scalar(M, [x * da + y * db for x, y in zip(a, b)], self.den * da)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.N, tuple(-p for p in self.num), self.den, True)

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        if self.N == 1 and other.N == 1 and self.den.is_one() and other.den.is_one():
            return Scalar(1, (self.num[0] * other.num[0],), _PONE, True)
        a, b, M = self._pair(other)
        den = self.den * other.den
        if M == 1:
            return Scalar(1, (a[0] * b[0],), den)
        F = _field(M)
        acc = [_PZERO] * F.phi
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if y.is_zero():
                    continue
                xy = x * y
                for r, v in F.powers[(i + j) % M]:
                    acc[r] = acc[r] + xy * v
        return Scalar(M, acc, den)

    __rmul__ = __mul__

    def galois(self, j: int) -> "Scalar":
        if self.N == 1:
            return self
        F = _field(self.N)
        acc = [_PZERO] * F.phi
        for i, p in enumerate(self.num):
            if not p.is_zero():
                for r, v in F.powers[(i * j) % self.N]:
                    acc[r] = acc[r] + p * v
        return Scalar(self.N, acc, self.den)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if self.N == 1:
            return Scalar(1, (self.den,), self.num[0])
        numer = Scalar(self.N, self.num)
        rest = ONE
        for j in _field(self.N).units:
            if j != 1:
                rest = rest * numer.galois(j)
        norm = numer * rest
        assert norm.N == 1, "norm must be rational"
        return rest * Scalar(1, (self.den * norm.den,), norm.num[0])

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Scalar":
        if self.N == 1:
            return self
        return self.galois(self.N - 1)

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den != other.den:
            return False
        a, b, _ = self._pair(other)
        return all(x == y for x, y in zip(a, b))

    __hash__ = None

    # -- evaluation ------------------------------------------------------------

    def at(self, q0) -> Cyclotomic:
        """Exact value at a rational point ``q0``."""
        q0 = Fraction(q0)
        x = fmpq(q0.numerator, q0.denominator)
        d = self.den(x)
        if d == 0:
            raise EvaluationError(f"{self} has a pole at q = {q0}")
        return Cyclotomic(self.N, [p(x) / d for p in self.num])

    def substitute(self, q0) -> "Scalar":
        return Scalar.from_cyclotomic(self.at(q0))

    def evaluate(self, q0, precision: int = 30):
        return self.at(q0).to_complex(precision)

    # -- printing --------------------------------------------------------------

    def __str__(self) -> str:
        return _format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def needs_parens(self) -> bool:
        """True when the printed form has a top-level sum."""
        return _has_top_level_sum(str(self))


def _has_top_level_sum(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-" and s[i - 1] not in "^*(/":
            return True
    return False


def _coeff_at(s: Scalar, k: int) -> Cyclotomic:
    return Cyclotomic(s.N, [p[k] if k <= p.degree() else fmpq(0) for p in s.num])


def _format_poly_terms(s: Scalar, shift: int) -> str:
    deg = max(p.degree() for p in s.num)
    parts = []
    for k in range(deg + 1):
        c = _coeff_at(s, k)
        if c.is_zero():
            continue
        e = k - shift
        cs = _format_cyclotomic(c)
        if e == 0:
            parts.append(cs)
            continue
        atom = "q" if e == 1 else f"q^{e}"
        if cs == "1":
            parts.append(atom)
        elif cs == "-1":
            parts.append("-" + atom)
        elif any(ch in cs[1:] for ch in "+-") or "/" in cs and "*" in cs:
            parts.append(f"({cs})*{atom}")
        else:
            parts.append(f"{cs}*{atom}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _is_q_monomial(p: fmpq_poly) -> int | None:
    if p.is_zero():
        return None
    coeffs = p.coeffs()
    if coeffs[-1] == 1 and not any(coeffs[:-1]):
        return len(coeffs) - 1
    return None


def _format_scalar(s: Scalar) -> str:
    shift = _is_q_monomial(s.den)
    if shift is not None:
        return _format_poly_terms(s, shift)
    num = _format_poly_terms(s, 0)
    den = _format_poly_terms(Scalar(1, (s.den,), _PONE, True), 0)
    if any(ch in num[1:] for ch in "+-") or "/" in num:
        num = f"({num})"
    return f"{num}/({den})"


ZERO = Scalar(1, (_PZERO,), _PONE, True)
ONE = Scalar(1, (_PONE,), _PONE, True)
Q = Scalar(1, (_PQ,), _PONE, True)
I_UNIT = Scalar.from_cyclotomic(Cyclotomic.gaussian(0, 1))


# -- module-level operations ---------------------------------------------------


def reduce(numerator, denominator=1) -> Scalar:
    """Canonical representative of ``numerator / denominator``."""
    numerator = Scalar.coerce(numerator)
    denominator = Scalar.coerce(denominator)
    if denominator.is_zero():
        raise ZeroDivisionError("zero denominator")
    return numerator / denominator


def evaluate(s, q0, precision: int = 30):
    """Complex approximation of ``s`` at ``q = q0`` good to ``10**-precision``."""
    return Scalar.coerce(s).evaluate(q0, precision)


def conjugate(s) -> Scalar:
    return Scalar.coerce(s).conj()
