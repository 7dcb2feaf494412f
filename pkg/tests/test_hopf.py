import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given

from suqconn.hopf import (
    UNIT,
    H,
    Monomial,
    TensorElement,
    algebra,
    comultiply,
    monomials_up_to,
    multiply,
    star,
    tensor_apply,
)
from suqconn.parsing import parse_element, parse_tensor
from suqconn.sampling import random_element, random_word
from suqconn.scalars import Q, Phase

from conftest import rngs
from oracles import OperatorModel, close

H1 = algebra(1)
a, a_, g, g_ = H.alpha, H.alpha_star, H.gamma, H.gamma_star
I = H.one()


def T(text, alg=H):
    return parse_tensor(text, alg)


# ==== operator model oracle ================================================


@pytest.mark.parametrize("seed", range(20))
def test_normal_form_agrees_with_operator_model(seed):
    rng = random.Random(seed)
    model = OperatorModel(Fraction(1, 2))
    with mpmath.workdps(40):
        tol = mpmath.mpf(10) ** -30
        for _ in range(5):
            w = random_word(rng, 8)
            x = H.normalize(w)
            for n in range(4):
                vec = {(n, 0): mpmath.mpf(1)}
                assert close(model.word(w, vec), model.element(x, vec), tol), w


# ==== normalize ============================================================


def test_normalize_examples():
    assert H.normalize(["g", "a"]) == H.monomial(Monomial(1, 1, 0), Q.inverse())
    assert H.normalize(["a", "a*"]) == I - H.monomial(Monomial(0, 1, 1), Q**2)
    assert H.normalize([]) == I


def test_normalize_rewrite_rules():
    rules = {
        ("g*", "g"): "g g*",
        ("g", "a"): "q^-1 a g",
        ("g*", "a"): "q^-1 a g*",
        ("g", "a*"): "q a* g",
        ("g*", "a*"): "q a* g*",
        ("a", "a*"): "1 - q^2 g g*",
        ("a*", "a"): "1 - g g*",
    }
    for word, rhs in rules.items():
        assert H.normalize(list(word)) == parse_element(rhs), word


def test_basis_words_are_fixed():
    for mono in monomials_up_to(5):
        assert H.normalize(mono.word()) == H.monomial(mono)


def test_normalize_idempotent():
    rng = random.Random(3)
    for _ in range(50):
        x = H.normalize(random_word(rng))
        again = H.element({})
        for mono, c in x.terms.items():
            again = again + H.normalize(mono.word()).scale(c)
        assert again == x


def test_identity_monomial():
    assert UNIT == Monomial(0, 0, 0)
    assert Monomial(-1, 0, 0).word() == ("a*",)


# ==== multiply =============================================================


def test_multiply_examples():
    assert multiply(a, g) == H.monomial(Monomial(1, 1, 0))
    assert multiply(g, a) == H.monomial(Monomial(1, 1, 0), Q.inverse())
    assert multiply(a_, a) == I - g_ * g


@given(rngs)
def test_confluence(rng):
    u, v = random_word(rng), random_word(rng)
    assert H.normalize(u + v) == H.normalize(u) * H.normalize(v)


@given(rngs)
def test_associative_with_unit(rng):
    x, y, z = (random_element(rng, max_degree=2) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert I * x == x == x * I
    assert x * (y + z) == x * y + x * z


# ==== star =================================================================


def test_star_examples():
    assert star(a) == a_
    assert star(g.scale(Q)) == g_.scale(Q)
    assert star(a * g) == H.monomial(Monomial(-1, 0, 1), Q)


@given(rngs)
def test_star_antimultiplicative_involution(rng):
    x, y = random_element(rng), random_element(rng)
    assert x.star().star() == x
    assert (x * y).star() == y.star() * x.star()
    c = Phase(Fraction(1, 3)).scalar()
    assert x.scale(c).star() == x.star().scale(c.conj())


def test_star_200_random():
    rng = random.Random(11)
    for _ in range(200):
        x, y = random_element(rng, max_degree=2), random_element(rng, max_degree=2)
        assert x.star().star() == x
        assert (x * y).star() == y.star() * x.star()


# ==== comultiply ===========================================================


def test_comultiply_gamma():
    assert comultiply(g) == T("g (x) a + a* (x) g")


def test_comultiply_gamma_star():
    assert comultiply(g_) == T("g* (x) a* + a (x) g*")
    assert comultiply(g_) == comultiply(g).star()


def test_comultiply_alpha_matches_corepresentation():
    """``Phi(u11) = u11 (x) u11 + u12 (x) u21`` with ``u12 = -q g*``."""
    assert comultiply(a) == T("a (x) a - q g* (x) g")


def test_comultiply_alpha_q_squared_variant_breaks_relations():
    """The ``-q^2`` coefficient is not an algebra map: ``a* a + g* g = I`` fails."""
    bad_a = T("a (x) a - q^2 g* (x) g")
    bad = bad_a.star() * bad_a + comultiply(g_) * comultiply(g)
    assert bad != TensorElement.one(H, 2)
    good = comultiply(a_) * comultiply(a) + comultiply(g_) * comultiply(g)
    assert good == TensorElement.one(H, 2)


def test_comultiply_unital():
    assert comultiply(I) == TensorElement.one(H, 2)


def test_comultiply_respects_unitarity():
    one = TensorElement.one(H, 2)
    assert comultiply(a_) * comultiply(a) + comultiply(g_) * comultiply(g) == one
    assert comultiply(a) * comultiply(a_) + (comultiply(g) * comultiply(g_)).scale(Q**2) == one


def test_comultiply_respects_commutation():
    """``q g a = a g`` and ``g g* = g* g`` survive comultiplication."""
    assert (comultiply(g) * comultiply(a)).scale(Q) == comultiply(a) * comultiply(g)
    assert comultiply(g) * comultiply(g_) == comultiply(g_) * comultiply(g)


def _coassoc(x):
    phi = x.comultiply()
    left = tensor_apply([comultiply, lambda y: y], phi)
    right = tensor_apply([lambda y: y, comultiply], phi)
    return left == right


def test_coassociativity_basis():
    for mono in monomials_up_to(4):
        assert _coassoc(H.monomial(mono)), mono


@given(rngs)
def test_coassociativity_random(rng):
    assert _coassoc(random_element(rng, max_degree=3))


@given(rngs)
def test_comultiply_is_star_homomorphism(rng):
    x, y = random_element(rng, max_degree=2), random_element(rng, max_degree=2)
    assert (x * y).comultiply() == x.comultiply() * y.comultiply()
    assert x.star().comultiply() == x.comultiply().star()


def _su2_eval(mono, G):
    """Classical value of a monomial at a 2x2 complex matrix."""
    a11, g21 = G[0][0], G[1][0]
    head = a11**mono.a if mono.a >= 0 else a11.conjugate() ** (-mono.a)
    return head * g21**mono.m * g21.conjugate() ** mono.n


def _random_su2_float(rng):
    import cmath

    th, p1, p2 = rng.uniform(0, 1.5), rng.uniform(0, 6.28), rng.uniform(0, 6.28)
    x, z = cmath.cos(th) * cmath.exp(1j * p1), cmath.sin(th) * cmath.exp(1j * p2)
    return ((x, -z.conjugate()), (z, x.conjugate()))


def test_comultiply_at_q1_is_matrix_product():
    """Oracle: at ``q = 1``, ``Phi(f)(g, h) = f(g h)`` on SU(2)."""
    rng = random.Random(5)
    for mono in monomials_up_to(3):
        x = H1.monomial(mono)
        for _ in range(3):
            G, K = _random_su2_float(rng), _random_su2_float(rng)
            GK = tuple(tuple(sum(G[i][k] * K[k][j] for k in range(2)) for j in range(2)) for i in range(2))
            total = 0
            for (m1, m2), c in x.comultiply().terms.items():
                total += complex(c.constant_value().to_complex(20)) * _su2_eval(m1, G) * _su2_eval(m2, K)
            assert abs(total - _su2_eval(mono, GK)) < 1e-10, mono


# ==== tensor_apply =========================================================


def test_tensor_apply_examples():
    x = T("a (x) g")
    assert tensor_apply([lambda y: y, comultiply], x) == T("a (x) g (x) a + a (x) a* (x) g")
    single = g.as_tensor()
    assert tensor_apply([lambda y: y], single) == single
    assert tensor_apply([star, star], x) == T("a* (x) g*")


def test_tensor_apply_arity_mismatch():
    with pytest.raises(ValueError):
        tensor_apply([comultiply], T("a (x) g"))


def test_arity_one_tensor_is_hopf_element():
    x = parse_element("a g + q g*")
    assert x.as_tensor().to_hopf() == x


# ==== q = 1 ================================================================


def test_q1_commutative_on_generators():
    gens = [H1.gen(s) for s in ("a", "a*", "g", "g*")]
    for x in gens:
        for y in gens:
            assert x * y == y * x


def test_q1_coassociative():
    for mono in monomials_up_to(3):
        assert _coassoc(H1.monomial(mono))


def test_symbolic_and_numeric_algebras_agree():
    """Specializing coefficients at ``q = 1/3`` commutes with multiplication."""
    H3 = algebra(Fraction(1, 3))
    rng = random.Random(2)
    for _ in range(20):
        x, y = random_element(rng, max_degree=2), random_element(rng, max_degree=2)
        assert (x * y).substitute(H3, Fraction(1, 3)) == x.substitute(H3, Fraction(1, 3)) * y.substitute(H3, Fraction(1, 3))
