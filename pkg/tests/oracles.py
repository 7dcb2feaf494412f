"""Independent numeric models used as test oracles.

``OperatorModel`` is the standard representation of SU_q(2) on
``l2(N) (x) l2(Z)``:

    a e(n,k) = sqrt(1 - q^2n) e(n-1,k),    g e(n,k) = q^n e(n,k+1).

Every relation of the algebra holds for these operators, and the Haar state
is the weighted trace ``(1 - q^2) sum_n q^2n <e(n,0), x e(n,0)>``.

``su2_haar_integral`` integrates a polynomial in the matrix entries over
SU(2) numerically, the ``q = 1`` Haar state.
"""

import mpmath

from suqconn.scalars import evaluate


class OperatorModel:
    def __init__(self, q0, dps=40):
        self.q0 = q0
        self.dps = dps
        with mpmath.workdps(dps):
            self.q = mpmath.mpf(q0.numerator) / q0.denominator

    def act(self, letter, vec):
        q, out = self.q, {}
        for (n, k), c in vec.items():
            if letter == "a":
                if n == 0:
                    continue
                key, f = (n - 1, k), mpmath.sqrt(1 - q ** (2 * n))
            elif letter == "a*":
                key, f = (n + 1, k), mpmath.sqrt(1 - q ** (2 * n + 2))
            elif letter == "g":
                key, f = (n, k + 1), q**n
            else:
                key, f = (n, k - 1), q**n
            out[key] = out.get(key, 0) + f * c
        return out

    def word(self, word, vec):
        for letter in reversed(word):
            vec = self.act(letter, vec)
        return vec

    def element(self, x, vec):
        out = {}
        for mono, c in x.terms.items():
            cv = evaluate(c, self.q0, self.dps)
            for key, v in self.word(mono.word(), vec).items():
                out[key] = out.get(key, 0) + cv * v
        return out

    def haar(self, x, terms=200):
        with mpmath.workdps(self.dps):
            total = mpmath.mpc(0)
            for n in range(terms):
                total += self.q ** (2 * n) * self.element(x, {(n, 0): mpmath.mpf(1)}).get((n, 0), 0)
            return (1 - self.q**2) * total


def close(u, v, tol):
    return all(abs(u.get(k, 0) - v.get(k, 0)) < tol for k in set(u) | set(v))


def su2_haar_integral(mono, nodes=16, dps=30):
    """Average of ``a^k g^m conj(g)^n`` over SU(2).

    ``a = cos(t) e^{i p}``, ``g = sin(t) e^{i s}`` with density
    ``2 sin(t) cos(t)`` on ``[0, pi/2]``.  The integrand factors into a
    radial part, done by quadrature, and two angular parts, done with an
    equally spaced rule that is exact for low-degree trigonometric polynomials.
    """
    k = mono.a if mono.a >= 0 else -mono.a
    sign = 1 if mono.a >= 0 else -1
    with mpmath.workdps(dps):
        radial = mpmath.quad(lambda t: mpmath.cos(t) ** (k + 1) * mpmath.sin(t) ** (mono.m + mono.n + 1) * 2, [0, mpmath.pi / 2])

        def angular(freq):
            return sum(mpmath.expj(2 * mpmath.pi * freq * i / nodes) for i in range(nodes)) / nodes

        return radial * angular(sign * k) * angular(mono.m - mono.n)
