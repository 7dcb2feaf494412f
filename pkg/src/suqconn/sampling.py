"""Seeded random inputs for the identity suites and property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .cylinder import GraphElement
from .graphs import Graph
from .hopf import H, HopfElement, Monomial, SUq2, TensorElement, monomials_up_to
from .scalars import Phase, Q, Scalar

__all__ = ["random_scalar", "random_monomial", "random_element", "random_word", "random_graph_element", "random_phase"]


def random_phase(rng: random.Random, max_den: int = 12) -> Phase:
    d = rng.randint(1, max_den)
    return Phase(Fraction(rng.randrange(d), d))


def random_scalar(rng: random.Random, alg: SUq2 = H, phases: bool = True) -> Scalar:
    """Small rational combination of ``q^k`` (symbolic ``alg``) times an optional root of unity."""
    s = Scalar.coerce(Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3)))
    if alg.symbolic and rng.random() < 0.5:
        s = s * Q ** rng.randint(-2, 2) + Fraction(rng.randint(-2, 2), 1)
        if s.is_zero():
            s = Scalar.coerce(1)
    if phases and rng.random() < 0.4:
        s = s * random_phase(rng, 8).scalar()
    return s


def random_monomial(rng: random.Random, max_degree: int) -> Monomial:
    pool = monomials_up_to(max_degree)
    return rng.choice(pool)


def random_element(rng: random.Random, alg: SUq2 = H, max_degree: int = 3, max_terms: int = 3,
                   phases: bool = True) -> HopfElement:
    terms: dict[Monomial, Scalar] = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(rng, max_degree)] = random_scalar(rng, alg, phases)
    return alg.element(terms)


def random_word(rng: random.Random, max_len: int = 8) -> list[str]:
    return [rng.choice(("a", "a*", "g", "g*")) for _ in range(rng.randint(0, max_len))]


def random_graph_element(rng: random.Random, graph: Graph, alg: SUq2 = H, max_degree: int = 2, max_terms: int = 2,
                         phases: bool = True) -> GraphElement:
    """Sum of a few pure tensors with small-degree factors, aligned to ``graph``."""
    n = len(graph)
    if n == 0:
        return GraphElement(graph, TensorElement.one(alg, 0).scale(random_scalar(rng, alg, phases)))
    value = TensorElement(alg, n, {})
    for _ in range(rng.randint(1, max_terms)):
        value = value + TensorElement.pure([random_element(rng, alg, max_degree, 1, phases) for _ in range(n)])
    return GraphElement(graph, value)
