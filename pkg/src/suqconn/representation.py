"""The fundamental corepresentation and the checks built on it.

``u = [[a, -q g*], [g, a*]]`` is a unitary corepresentation:
``Phi(u_ij) = sum_k u_ik (x) u_kj``.  Automorphisms act on it by conjugation
with a special-unitary matrix ``S``, which must be diagonal once ``q^2 != 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .hopf import H, HopfElement, Monomial, SUq2, TensorElement
from .morphisms import InvalidParameterError, Morphism, fundamental_matrix
from .scalars import ONE, ZERO, Q, Scalar

__all__ = [
    "fundamental",
    "verify_unitary",
    "verify_rep",
    "E_INV",
    "E_MATRIX",
    "conjugate_equivalence",
    "SystemReport",
    "system_equations",
    "system_solutions",
    "conjugation_action",
    "is_special_unitary_exact",
    "irreducibility_witness",
]


def fundamental(alg: SUq2 = H):
    return fundamental_matrix(alg)


def verify_unitary(u) -> bool:
    """``sum_k u*_ki u_kj = delta_ij I = sum_k u_ik u*_jk``."""
    alg = u[0][0].alg
    us = [[x.star() for x in row] for row in u]
    for i in range(2):
        for j in range(2):
            target = alg.one() if i == j else alg.zero()
            if us[0][i] * u[0][j] + us[1][i] * u[1][j] != target:
                return False
            if u[i][0] * us[j][0] + u[i][1] * us[j][1] != target:
                return False
    return True


def verify_rep(u) -> bool:
    """``Phi(u_ij) = sum_k u_ik (x) u_kj`` for all entries."""
    for i in range(2):
        for j in range(2):
            rhs = TensorElement.pure([u[i][0], u[0][j]]) + TensorElement.pure([u[i][1], u[1][j]])
            if u[i][j].comultiply() != rhs:
                return False
    return True


def _matmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(2)), ZERO) for j in range(2)] for i in range(2)]


def E_INV(alg: SUq2 = H):
    return [[ZERO, alg.q], [-ONE, ZERO]]


def E_MATRIX(alg: SUq2 = H):
    return linalg.inverse(E_INV(alg))


def conjugate_equivalence(alg: SUq2 = H) -> bool:
    """``u*_ij = sum_kl Einv_ik u_kl E_lj`` entrywise."""
    u = fundamental(alg)
    Ei, E = E_INV(alg), E_MATRIX(alg)
    for i in range(2):
        for j in range(2):
            lhs = u[i][j].star()
            rhs = alg.zero()
            for k in range(2):
                for l in range(2):
                    c = Ei[i][k] * E[l][j]
                    if not c.is_zero():
                        rhs = rhs + u[k][l].scale(c)
            if lhs != rhs:
                return False
    return True


# -- the automorphism system ------------------------------------------------


def system_equations(z, x, lam, q=Q) -> list[tuple[str, Scalar]]:
    """The six conditions on ``S = [[z, -conj x], [x, conj z]]`` as ``lhs - rhs``."""
    z, x, lam, q = (Scalar.coerce(v) for v in (z, x, lam, q))
    zz, xx = z * z.conj(), x * x.conj()
    qi = q.inverse()
    return [
        ("z zbar q + x xbar / q = q", zz * q + xx * qi - q),
        ("z xbar (q - 1/q) = 0", z * x.conj() * (q - qi)),
        ("z zbar / q + x xbar q = 1/q", zz * qi + xx * q - qi),
        ("q x = lambda x", q * x - lam * x),
        ("z = lambda z", z - lam * z),
        ("lambda^2 = 1", lam * lam - ONE),
    ]


@dataclass
class SystemReport:
    mode: str
    admissible: bool
    failed: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        head = "admissible" if self.admissible else "inadmissible"
        return head if not self.failed else f"{head} ({'; '.join(self.failed)})"


def system_solutions(z, x, lam=1, mode: str = "generic") -> SystemReport:
    """Check a candidate ``(z, x, lambda)``.

    ``mode="q1"`` substitutes ``q = 1``; ``mode="generic"`` requires every
    equation to hold identically in a symbolic ``q`` (the ``q^2 != 1`` case).
    """
    if mode not in ("q1", "generic"):
        raise ValueError("mode must be 'q1' or 'generic'")
    q = ONE if mode == "q1" else Q
    failed = [name for name, v in system_equations(z, x, lam, q) if not v.is_zero()]
    return SystemReport(mode, not failed, failed)


# -- conjugation --------------------------------------------------------------


def is_special_unitary_exact(S) -> bool:
    S = [[Scalar.coerce(v) for v in row] for row in S]
    Sh = [[S[j][i].conj() for j in range(2)] for i in range(2)]
    P = _matmul(S, Sh)
    det = S[0][0] * S[1][1] - S[0][1] * S[1][0]
    return det.is_one() and all(P[i][j] == (ONE if i == j else ZERO) for i in range(2) for j in range(2))


def conjugation_action(S, alg: SUq2 = H) -> Morphism:
    """Automorphism ``u_ij -> sum_kl S_ik u_kl Sinv_lj``."""
    S = [[Scalar.coerce(v) for v in row] for row in S]
    if not all(v.is_constant() for row in S for v in row):
        raise InvalidParameterError("S must have constant entries")
    if not is_special_unitary_exact(S):
        raise InvalidParameterError("S is not special unitary")
    if not alg.is_classical and not (S[0][1].is_zero() and S[1][0].is_zero()):
        raise InvalidParameterError("S must be diagonal when q^2 != 1")
    Si = [[S[j][i].conj() for j in range(2)] for i in range(2)]
    u = fundamental(alg)

    def entry(i, j) -> HopfElement:
        out = alg.zero()
        for k in range(2):
            for l in range(2):
                c = S[i][k] * Si[l][j]
                if not c.is_zero():
                    out = out + u[k][l].scale(c)
        return out

    return Morphism(alg, entry(0, 0), entry(1, 0), "conjugation", (tuple(map(tuple, S)),))


def irreducibility_witness(alg: SUq2 = H):
    """Nullspace basis of ``T -> (T (x) I)u - u(T (x) I)`` on 2x2 scalar ``T``.

    Irreducibility means the basis is a single multiple of the identity.
    """
    u = fundamental(alg)
    # unknowns T11, T12, T21, T22; one row per (i, j, monomial)
    rows: list[list[Scalar]] = []
    for i in range(2):
        for j in range(2):
            coeffs: dict[Monomial, list[Scalar]] = {}
            for k in range(2):
                for mono, c in u[k][j].terms.items():
                    coeffs.setdefault(mono, [ZERO] * 4)[2 * i + k] += c
                for mono, c in u[i][k].terms.items():
                    coeffs.setdefault(mono, [ZERO] * 4)[2 * k + j] -= c
            rows.extend(coeffs.values())
    return linalg.nullspace(rows)
