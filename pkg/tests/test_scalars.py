import cmath
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from suqconn.scalars import (
    I_UNIT,
    ONE,
    Q,
    ZERO,
    Cyclotomic,
    EvaluationError,
    Phase,
    Scalar,
    conjugate,
    evaluate,
    reduce,
)
from suqconn.sampling import random_scalar

from conftest import phases, rngs


def e(t):
    return Phase(Fraction(t)).scalar()


# ==== reduce ===============================================================


def test_reduce_cancels_common_factor():
    s = reduce(1 - Q**2, 1 - Q**4)
    assert s == reduce(1, 1 + Q**2)
    assert str(s) == "1/(1+q^2)"


def test_reduce_keeps_reduced_input():
    assert reduce(Q, 1) == Q
    assert str(reduce(Q, 1)) == "q"


def test_reduce_cyclotomic_relation():
    """``1 + z + z^2 = 0`` for a primitive cube root ``z``."""
    assert reduce(e(Fraction(1, 3)) + e(Fraction(2, 3)) + 1, 1).is_zero()


def test_reduce_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        reduce(Q, 0)
    with pytest.raises(ZeroDivisionError):
        reduce(1, Q - Q)


def test_reduce_idempotent():
    s = reduce(Q**3 - Q, Q**2 - 1)
    assert reduce(s, 1) == s == Q


# ==== evaluate =============================================================


def test_evaluate_examples():
    assert abs(evaluate(reduce(1, 1 + Q**2), 1, 30) - 0.5) < 1e-30
    assert abs(evaluate(e(Fraction(1, 4)), Fraction(1, 3), 30) - 1j) < 1e-30
    third = evaluate(reduce(1 - Q**2, 1 - Q**6), 1, 40)
    with mpmath.workdps(50):  # compare at the working precision of the result
        assert abs(third - mpmath.mpf(1) / 3) < mpmath.mpf(10) ** -40


def test_evaluate_pole_after_reduction():
    with pytest.raises(EvaluationError):
        evaluate(reduce(1, 1 - Q), 1)
    # the apparent pole cancels
    assert abs(evaluate(reduce(1 - Q, 1 - Q**2), 1) - 0.5) < 1e-25


@pytest.mark.parametrize("t", [Fraction(k, n) for n in (1, 2, 3, 5, 8, 12) for k in range(n)])
def test_evaluate_roots_of_unity_against_mpmath(t):
    """Independent oracle: ``exp(2 pi i t)`` computed by mpmath."""
    with mpmath.workdps(50):
        want = mpmath.expjpi(2 * mpmath.mpf(t.numerator) / t.denominator)
        assert abs(evaluate(e(t), Fraction(1, 2), 40) - want) < mpmath.mpf(10) ** -40


# ==== conjugate ============================================================


def test_conjugate_examples():
    assert conjugate(e(Fraction(1, 4))) == e(Fraction(3, 4))
    assert conjugate(Q) == Q
    assert conjugate(2 + 3 * I_UNIT) == 2 - 3 * I_UNIT


# ==== Phase and Cyclotomic =================================================


def test_phase_reduced_mod_one():
    assert Phase(Fraction(5, 4)).t == Fraction(1, 4)
    assert Phase(Fraction(-1, 3)).t == Fraction(2, 3)
    assert Phase(Fraction(2, 4)).t == Fraction(1, 2)


def test_phase_group_law():
    a, b = Phase(Fraction(1, 3)), Phase(Fraction(5, 6))
    assert (a * b).t == Fraction(1, 6)
    assert a.conj().t == Fraction(2, 3)
    assert (a * Phase(0)) == a


def test_cyclotomic_canonical_across_conductors():
    assert Cyclotomic.root_of_unity(Fraction(1, 4)) == Cyclotomic.gaussian(0, 1)
    assert Cyclotomic.root_of_unity(Fraction(1, 2)) == Cyclotomic.rational(-1)
    assert Cyclotomic.root_of_unity(Fraction(1, 6)) * Cyclotomic.root_of_unity(Fraction(1, 6)) == Cyclotomic.root_of_unity(
        Fraction(1, 3)
    )
    # sqrt(-3) = e(1/3) - e(2/3) lives in conductor 3 whatever route built it
    x = Cyclotomic.root_of_unity(Fraction(1, 12)) ** 4 - Cyclotomic.root_of_unity(Fraction(1, 12)) ** 8
    assert x * x == Cyclotomic.rational(-3)


def test_embed_is_homomorphism_exhaustive():
    """All pairs of phases with denominator at most 24."""
    ts = sorted({Fraction(k, n) for n in range(1, 25) for k in range(n)})
    emb = {t: Phase(t).embed() for t in ts}
    for t1 in ts:
        for t2 in ts[:: max(1, len(ts) // 40)]:
            assert emb[t1] * emb[t2] == Phase(t1 + t2).embed()


@given(phases(), phases())
def test_embed_is_homomorphism(w1, w2):
    assert w1.embed() * w2.embed() == (w1 * w2).embed()
    assert w1.embed().conj() == w1.conj().embed()


@given(phases())
def test_cyclotomic_conj_involutive(w):
    x = w.embed() + Cyclotomic.gaussian(Fraction(1, 2), 3)
    assert x.conj().conj() == x


def test_scalar_roundtrips_through_cyclotomic():
    c = Cyclotomic.root_of_unity(Fraction(2, 5)) + Cyclotomic.rational(Fraction(3, 7))
    s = Scalar.from_cyclotomic(c)
    assert s.is_constant() and s.constant_value() == c


def test_denominator_is_monic_and_coprime():
    s = reduce(2 * Q + 2, 4 * Q**2 - 4)
    assert s * (2 * Q - 2) == ONE
    assert s.den.degree() == 1 and s.den.coeffs()[-1] == 1


# ==== field laws ===========================================================


def _triples(n, seed):
    rng = random.Random(seed)
    for _ in range(n):
        yield tuple(random_scalar(rng) for _ in range(3))


def test_field_laws_500_triples():
    for a, b, c in _triples(500, 1):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == ONE


@given(rngs)
def test_field_laws_property(rng):
    a, b = random_scalar(rng), random_scalar(rng)
    assert a - a == ZERO
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a
    if not b.is_zero():
        assert (a / b) * b == a


def test_numeric_consistency_100_products():
    rng = random.Random(7)
    digits = 30
    for _ in range(100):
        a, b = random_scalar(rng), random_scalar(rng)
        q0 = Fraction(rng.randint(1, 9), 10)
        prod = evaluate(reduce(a * b, 1), q0, digits)
        with mpmath.workdps(digits + 10):
            assert abs(prod - evaluate(a, q0, digits) * evaluate(b, q0, digits)) < mpmath.mpf(10) ** -(digits - 2)


def test_evaluate_matches_python_complex():
    """Cross-check against plain floating point on a mixed scalar."""
    s = (3 * Q**2 - I_UNIT) / (1 + Q) * e(Fraction(1, 8))
    q0 = 0.25
    want = (3 * q0**2 - 1j) / (1 + q0) * cmath.exp(2j * cmath.pi / 8)
    assert abs(complex(evaluate(s, Fraction(1, 4), 20)) - want) < 1e-12
