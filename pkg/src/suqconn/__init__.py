"""Exact symbolic computation with the quantum group SU_q(2) and the
algebras of cylindrical functions built from it over graphs."""

from .scalars import Phase, Cyclotomic, Scalar, Q, ONE, ZERO, I_UNIT, reduce, evaluate, conjugate
from .hopf import H, SUq2, Monomial, HopfElement, TensorElement, algebra, comultiply, multiply, star
from .morphisms import (
    Morphism,
    FramingLift,
    make_rho,
    make_rho_general,
    make_xi,
    make_xi_axis,
    antipode_q1,
    identity,
    compose,
    classify,
    frame_change,
    intertwiner_solutions,
    verify_generator_map,
)
from .graphs import Edge, Graph, FramedGraph, Sub, Or, Add, Fr, geq, common_refinement, compose_edges, plan
from .cylinder import (
    GraphElement,
    CylElement,
    Connection,
    apply_move,
    push,
    cyl_equal,
    iso_intertwiner,
    iso_orientation,
    embed_constant_framing,
    eval_classical,
)
from .haar import HaarState, haar_graph, haar_state
from .parsing import ParseError, parse_element, parse_scalar, parse_tensor, parse_morphism

__version__ = "0.1.0"
