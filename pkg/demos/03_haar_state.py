"""The Haar state: exact values, the invariance it solves, and a numeric check."""

from fractions import Fraction as F

from suqconn.haar import HaarState, haar, orthogonality
from suqconn.hopf import H, Monomial, algebra
from suqconn.parsing import parse_element
from suqconn.scalars import evaluate

# -- moments of g g* -----------------------------------------------------------
print("h((g g*)^n), solved from the invariance equations:")
for n in range(5):
    v = haar(Monomial(0, n, n))
    print(f"    n={n}  {v}    at q=1: {haar(Monomial(0, n, n), algebra(1))}")

st = HaarState(H)
st.solve(4)
print(f"\ninvariant functionals on words of degree <= 4: {st.nullity}")

# -- positivity at a numeric q -------------------------------------------------
x = parse_element("a - q g* + 2 g")
v = evaluate(haar(x.star() * x), F(1, 2), 20)
print(f"\nh(x* x) at q=1/2 for x = {x}:")
print(f"    {v.real}")

# -- orthogonality of the fundamental matrix entries ---------------------------
print("\nh(u_ij* u_kl) against the orthogonality formula:")
for idx in [(1, 1, 1, 1), (1, 2, 1, 2), (2, 1, 2, 1), (1, 1, 2, 2)]:
    r = orthogonality(*idx)
    print(f"    {idx}  {r.lhs}  agree={r.agree}")
