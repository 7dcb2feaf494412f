"""Automorphisms and internal framings of SU_q(2).

A :class:`Morphism` is a unital *-algebra endomorphism fixed by the images of
``alpha`` and ``gamma``; the starred generators follow from *-preservation.
Application to a monomial multiplies cached powers of the generator images.

Parameter conventions:

* ``rho_w``: alpha -> alpha, gamma -> w gamma (any q);
* ``xi_w``: alpha -> alpha, gamma -> conj(w) gamma* (any q);
* ``rho_{z,x}`` and the axis framings ``xi_X`` exist only at q = 1;
* ``kappa``: the q = 1 antipode, alpha -> alpha*, gamma -> -gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import linalg
from .hopf import H, UNIT, algebra, HopfElement, Monomial, SUq2, TensorElement, tensor_apply
from .scalars import ONE, ZERO, Cyclotomic, Phase, Scalar

__all__ = [
    "Morphism",
    "InvalidParameterError",
    "FramingLift",
    "make_rho",
    "make_rho_general",
    "make_xi",
    "make_xi_axis",
    "antipode_q1",
    "identity",
    "compose",
    "classify",
    "Classification",
    "intertwiner_solutions",
    "frame_change",
    "verify_generator_map",
    "GeneratorMapReport",
    "fundamental_matrix",
    "generator_images",
]

COMUL = "comultiplicative"
ANTICOMUL = "anticomultiplicative"
NEITHER = "neither"


class InvalidParameterError(ValueError):
    """Bad morphism parameters, or a q = 1 construction requested at generic q."""


_A, _AS, _G, _GS = Monomial(1, 0, 0), Monomial(-1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1)
SPAN_BASIS = (UNIT, _A, _AS, _G, _GS)


class Morphism:
    """Unital *-endomorphism of the algebra ``alg`` given on generators."""

    def __init__(self, alg: SUq2, alpha: HopfElement, gamma: HopfElement, kind: str = "custom", params=()):
        self.alg = alg
        self.kind = kind
        self.params = tuple(params)
        self._gens = {"a": alpha, "a*": alpha.star(), "g": gamma, "g*": gamma.star()}
        self._powers: dict[tuple[str, int], HopfElement] = {}
        self._cache: dict[Monomial, HopfElement] = {}

    # -- images ---------------------------------------------------------------

    def image(self, letter: str) -> HopfElement:
        return self._gens[letter]

    def _power(self, letter: str, k: int) -> HopfElement:
        if k == 0:
            return self.alg.one()
        key = (letter, k)
        got = self._powers.get(key)
        if got is None:
            got = self._power(letter, k - 1) * self._gens[letter]
            self._powers[key] = got
        return got

    def apply_monomial(self, x: Monomial) -> HopfElement:
        got = self._cache.get(x)
        if got is None:
            head = self._power("a", x.a) if x.a >= 0 else self._power("a*", -x.a)
            got = head * self._power("g", x.m) * self._power("g*", x.n)
            self._cache[x] = got
        return got

    def apply(self, a: HopfElement) -> HopfElement:
        if a.alg is not self.alg:
            raise ValueError("morphism and element belong to different algebras")
        out = self.alg.zero()
        for x, c in a.terms.items():
            out = out + self.apply_monomial(x).scale(c)
        return out

    __call__ = apply

    def apply_tensor(self, t: TensorElement) -> TensorElement:
        """Slotwise application ``m (x) ... (x) m``."""
        return tensor_apply([self] * t.arity, t)

    # -- structure ------------------------------------------------------------

    def span_matrix(self):
        """Columns: coordinates of the images of I, a, a*, g, g* in that basis.

        Raises ``ValueError`` when an image leaves the span.
        """
        cols = [self.alg.one()] + [self._gens[s] for s in ("a", "a*", "g", "g*")]
        for c in cols:
            if any(m not in SPAN_BASIS for m in c.terms):
                raise ValueError("image leaves span{u_ij, I}")
        return [[cols[j].coefficient(SPAN_BASIS[i]) for j in range(5)] for i in range(5)]

    def inverse(self) -> "Morphism":
        inv = linalg.inverse(self.span_matrix())
        imgs = {
            s: self.alg.element({SPAN_BASIS[i]: inv[i][j] for i in range(5)})
            for j, s in enumerate(("I", "a", "a*", "g", "g*"))
        }
        return Morphism(self.alg, imgs["a"], imgs["g"], "inverse", (self,))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.alg is other.alg and self._gens["a"] == other._gens["a"] and self._gens["g"] == other._gens["g"]

    __hash__ = None

    def __repr__(self) -> str:
        return f"Morphism({self.kind}{self.params!r}: a -> {self._gens['a']}, g -> {self._gens['g']})"


def _cyc(x) -> Scalar:
    if isinstance(x, str):
        from .parsing import parse_scalar

        return parse_scalar(x)
    return Scalar.coerce(x)


def _phase(w) -> Phase:
    return w if isinstance(w, Phase) else Phase(w)


def identity(alg: SUq2 = H) -> Morphism:
    return Morphism(alg, alg.alpha, alg.gamma, "identity")


def make_rho(w, alg: SUq2 = H) -> Morphism:
    w = _phase(w)
    return Morphism(alg, alg.alpha, alg.gamma.scale(w.scalar()), "rho", (w,))


def make_xi(w, alg: SUq2 = H) -> Morphism:
    w = _phase(w)
    return Morphism(alg, alg.alpha, alg.gamma_star.scale(w.conj().scalar()), "xi", (w,))


def _require_classical(alg: SUq2, what: str) -> None:
    if not alg.is_classical:
        raise InvalidParameterError(f"{what} exists only at q = 1")


def make_rho_general(z, x, alg: SUq2 | None = None) -> Morphism:
    """Automorphism induced by ``S = [[z, -conj(x)], [x, conj(z)]]`` in SU(2)."""
    alg = alg or algebra(1)
    z, x = _cyc(z), _cyc(x)
    if not (z * z.conj() + x * x.conj()).is_one():
        raise InvalidParameterError("need z conj(z) + x conj(x) = 1")
    if not x.is_zero():
        _require_classical(alg, "rho(z, x) with x != 0")
    zb, xb = z.conj(), x.conj()
    a, a_s, g, g_s = alg.alpha, alg.alpha_star, alg.gamma, alg.gamma_star
    img_a = a.scale(z * zb) - g.scale(zb * xb) + g_s.scale(z * x) + a_s.scale(x * xb)
    img_g = a.scale(zb * x) + g.scale(zb * zb) + g_s.scale(x * x) - a_s.scale(x * zb)
    return Morphism(alg, img_a, img_g, "rho_general", (z, x))


def make_xi_axis(z, x, alg: SUq2 | None = None) -> Morphism:
    """Framing ``R_{X,pi}^* o kappa`` for the axis ``(Re z, Im z, x)``, ``x`` real."""
    alg = alg or algebra(1)
    _require_classical(alg, "axis framing")
    z, x = _cyc(z), _cyc(x)
    if not x.conj() == x:
        raise InvalidParameterError("axis coordinate x must be real")
    if not (z * z.conj() + x * x).is_one():
        raise InvalidParameterError("need z conj(z) + x^2 = 1")
    zb = z.conj()
    a, a_s, g, g_s = alg.alpha, alg.alpha_star, alg.gamma, alg.gamma_star
    img_a = a.scale(z * zb) - g.scale(z * x) + g_s.scale(zb * x) + a_s.scale(x * x)
    img_g = -a.scale(zb * x) + g.scale(x.conj() * x.conj()) + g_s.scale(zb * zb) + a_s.scale(zb * x)
    return Morphism(alg, img_a, img_g, "xi_axis", (z, x))


def antipode_q1(alg: SUq2 | None = None) -> Morphism:
    alg = alg or algebra(1)
    _require_classical(alg, "the antipode as a framing")
    return Morphism(alg, alg.alpha_star, -alg.gamma, "kappa")


def compose(m1: Morphism, m2: Morphism) -> Morphism:
    """``m1 o m2`` (apply ``m2`` first)."""
    if m1.alg is not m2.alg:
        raise ValueError("morphisms over different algebras")
    return Morphism(m1.alg, m1(m2.image("a")), m1(m2.image("g")), "composite", (m1, m2))


@dataclass(frozen=True)
class Classification:
    kind: str
    involutive: bool

    def __str__(self) -> str:
        return f"{self.kind}{', involutive' if self.involutive else ''}"


def is_comultiplicative(m: Morphism, flip: bool = False) -> bool:
    for s in ("a", "g"):
        lhs = m.image(s).comultiply()
        rhs = m.apply_tensor(m.alg.gen(s).comultiply())
        if flip:
            rhs = rhs.flip()
        if lhs != rhs:
            return False
    return True


def is_involutive(m: Morphism) -> bool:
    return all(m(m.image(s)) == m.alg.gen(s) for s in ("a", "g"))


def classify(m: Morphism) -> Classification:
    if is_comultiplicative(m):
        kind = COMUL
    elif is_comultiplicative(m, flip=True):
        kind = ANTICOMUL
    else:
        kind = NEITHER
    return Classification(kind, is_involutive(m))


def intertwiner_solutions(w, w2, alg: SUq2 = H) -> tuple[Morphism, Morphism]:
    """The two ``rho_z`` with ``z^2 = conj(w) w'``, i.e. ``rho_z xi_w rho_z^-1 = xi_w'``."""
    w, w2 = _phase(w), _phase(w2)
    t = (w2 / w).t
    return make_rho(Phase(t / 2), alg), make_rho(Phase(t / 2 + Fraction(1, 2)), alg)


@dataclass(frozen=True, order=True)
class FramingLift:
    """Point ``t`` of the universal cover of the framing circle."""

    t: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))

    def projection(self, alg: SUq2 = H) -> Morphism:
        return make_xi(Phase(self.t), alg)

    def __str__(self) -> str:
        return str(self.t)


def _lift_t(x) -> Fraction:
    return x.t if isinstance(x, FramingLift) else Fraction(x)


def frame_change(t, t2, alg: SUq2 = H) -> Morphism:
    """Coloring change between lifts: ``rho_{e((t' - t)/2)}``."""
    return make_rho(Phase((_lift_t(t2) - _lift_t(t)) / 2), alg)


# -- extension criteria ---------------------------------------------------------


def fundamental_matrix(alg: SUq2):
    """``u = [[a, -q g*], [g, a*]]`` as HopfElements."""
    return [[alg.alpha, -alg.gamma_star.scale(alg.q)], [alg.gamma, alg.alpha_star]]


@dataclass
class GeneratorMapReport:
    span: bool
    unit: bool
    star: bool
    invertible: bool
    unitarity: bool
    branch: str
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _unitarity(m: Morphism) -> bool:
    alg = m.alg
    u = fundamental_matrix(alg)
    zu = [[m(x) for x in row] for row in u]
    zus = [[x.star() for x in row] for row in zu]
    one = alg.one()
    for i in range(2):
        for j in range(2):
            target = one if i == j else alg.zero()
            if zus[0][i] * zu[0][j] + zus[1][i] * zu[1][j] != target:
                return False
            if zu[i][0] * zus[j][0] + zu[i][1] * zus[j][1] != target:
                return False
    return True


def verify_generator_map(images: Mapping[str, HopfElement], unit: HopfElement | None = None) -> GeneratorMapReport:
    """Check a linear map on ``span{u_ij, I}`` against the extension criteria.

    ``images`` maps each of ``"a", "a*", "g", "g*"`` to its image.
    """
    alg = images["a"].alg
    failures: list[str] = []
    imgs = {s: images[s] for s in ("a", "a*", "g", "g*")}
    unit_ok = unit is None or unit == alg.one()
    if not unit_ok:
        failures.append("unit")
    span_ok = all(all(mono in SPAN_BASIS[1:] for mono in v.terms) for v in imgs.values())
    if not span_ok:
        failures.append("span")
    star_ok = imgs["a*"] == imgs["a"].star() and imgs["g*"] == imgs["g"].star()
    if not star_ok:
        failures.append("star")
    m = Morphism(alg, imgs["a"], imgs["g"], "candidate")
    m._gens.update(imgs)
    inv = None
    invertible = False
    if span_ok:
        try:
            inv = m.inverse()
            invertible = True
        except linalg.SingularMatrixError:
            pass
    if not invertible:
        failures.append("invertible")
    unitarity = _unitarity(m) and (inv is not None and _unitarity(inv))
    if not unitarity:
        failures.append("unitarity")
    if is_comultiplicative(m):
        branch = COMUL
    elif is_comultiplicative(m, flip=True):
        branch = ANTICOMUL
    else:
        branch = NEITHER
        failures.append("comultiplicativity")
    return GeneratorMapReport(span_ok, unit_ok, star_ok, invertible, unitarity, branch, failures)


def generator_images(m: Morphism) -> dict[str, HopfElement]:
    return {s: m.image(s) for s in ("a", "a*", "g", "g*")}
