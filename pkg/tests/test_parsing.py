from fractions import Fraction

import pytest
from hypothesis import given

from suqconn.graphs import Edge, GraphSchemaError
from suqconn.hopf import H, TensorElement, algebra
from suqconn.morphisms import antipode_q1, compose, make_rho, make_xi, make_xi_axis
from suqconn.parsing import (
    ParseError,
    parse_connection,
    parse_element,
    parse_matrix,
    parse_morphism,
    parse_phase,
    parse_scalar,
    parse_tensor,
)
from suqconn.sampling import random_element, random_scalar
from suqconn.scalars import I_UNIT, Q, Phase

from conftest import rngs

H1 = algebra(1)
F = Fraction


# ==== scalars ==============================================================


@pytest.mark.parametrize(
    "text,value",
    [
        ("3/4", Q**0 * F(3, 4)),
        ("q^-2 + 1", Q**-2 + 1),
        ("(1 - q^2)/(1 - q^4)", 1 / (1 + Q**2)),
        ("(2+3i)~", 2 - 3 * I_UNIT),
        ("e(1/4)", I_UNIT),
        ("2 i q", 2 * I_UNIT * Q),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


def test_q_is_numeric_in_numeric_algebra():
    assert parse_scalar("q^2", algebra(F(1, 3))) == Q**0 * F(1, 9)


@given(rngs)
def test_scalar_roundtrip(rng):
    s = random_scalar(rng)
    assert parse_scalar(str(s)) == s


def test_phase_forms():
    assert parse_phase("1/4") == Phase(F(1, 4))
    assert parse_phase("e(1/3) * i") == Phase(F(7, 12))
    assert parse_phase("2") == Phase(0)
    assert parse_phase("-1") == Phase(F(1, 2))
    with pytest.raises(ParseError):
        parse_phase("2*i")
    with pytest.raises(ParseError):
        parse_phase("q")


# ==== elements and tensors =================================================


def test_element_grammar():
    assert parse_element("g a") == H.normalize(["g", "a"])
    assert parse_element("a* a + g* g") == H.one()
    assert parse_element("g*g") == parse_element("g* g")
    assert parse_element("ag") == parse_element("a g")
    assert parse_element("[a g]^2") == parse_element("a g a g")
    assert parse_element("(a + g) * 2") == parse_element("2 a + 2 g")


@given(rngs)
def test_element_roundtrip(rng):
    x = random_element(rng, max_degree=3)
    assert parse_element(str(x)) == x


@given(rngs)
def test_tensor_roundtrip(rng):
    t = TensorElement.pure([random_element(rng, max_degree=2) for _ in range(3)])
    assert parse_tensor(str(t), H, 3) == t


def test_tensor_arity():
    assert parse_tensor("3", H, 0) == TensorElement.one(H, 0).scale(3)
    with pytest.raises(ParseError):
        parse_tensor("a (x) g + 1", H, 2)
    with pytest.raises(ParseError):
        parse_tensor("a (x) g", H, 3)


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("g **", 1, 4),
        ("a +", 1, 4),
        ("(a", 1, 3),
        ("a\n + )", 2, 4),
        ("foo", 1, 1),
        ("e(1/0)", 1, 5),
    ],
)
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert str(info.value).startswith(f"line {line}, column {col}:")


# ==== morphisms ============================================================


def test_morphism_literals():
    assert parse_morphism("xi(e(1/4))", H) == make_xi(Phase(F(1, 4)))
    assert parse_morphism("rho(1/3)", H) == make_rho(Phase(F(1, 3)))
    assert parse_morphism("xi(1/4) . rho(1/8)", H) == compose(make_xi(Phase(F(1, 4))), make_rho(Phase(F(1, 8))))
    assert parse_morphism("kappa", H1) == antipode_q1(H1)
    assert parse_morphism("xiaxis(3/5, 4/5)", H1) == make_xi_axis(F(3, 5), F(4, 5), H1)


def test_morphism_literal_errors():
    with pytest.raises(ParseError):
        parse_morphism("zeta(1)", H)
    with pytest.raises(ParseError):
        parse_morphism("rho(1/3", H)


# ==== JSON matrices ========================================================


def test_parse_matrix():
    m = parse_matrix([["3/5", "-4/5"], ["4/5", "3/5"]])
    assert m[0][1] == Q**0 * F(-4, 5)
    with pytest.raises(GraphSchemaError) as info:
        parse_matrix([["1", "x +"], ["0", "1"]])
    assert "$[0][1]" in str(info.value)
    with pytest.raises(GraphSchemaError):
        parse_matrix([["1", "0"]])


def test_parse_connection():
    xi = make_xi(Phase(0), H1)
    A = parse_connection({"c:0:1:f": [["0", "-1"], ["1", "0"]]}, xi)
    assert A.holonomy(Edge("c", F(0), F(1))) == A.atoms[Edge("c", F(0), F(1))]
    with pytest.raises(GraphSchemaError):
        parse_connection({"c:0:1:f": [["2", "0"], ["0", "1"]]}, xi)
    with pytest.raises(Exception):
        parse_connection({"bad key": [["1", "0"], ["0", "1"]]}, xi)
