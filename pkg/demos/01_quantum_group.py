"""SU_q(2) in normal form: relations, the coproduct and the fundamental corepresentation."""

from fractions import Fraction

from suqconn.hopf import H, algebra
from suqconn.parsing import parse_element
from suqconn.representation import fundamental, verify_rep, verify_unitary


def show(label, value):
    print(f"{label:<28} {value}")


# -- the algebra ---------------------------------------------------------------
print("Normal forms over the symbolic parameter q")
show("g a", parse_element("g a"))
show("a a*", parse_element("a a*"))
show("a* a + g* g", parse_element("a* a + g* g"))
show("(a + g)^2", parse_element("(a + g)^2"))

# -- the coproduct -------------------------------------------------------------
print("\nComultiplication is a *-homomorphism into the tensor square")
a, g = H.alpha, H.gamma
show("coprod(a)", a.comultiply())
show("coprod(g)", g.comultiply())
lhs = (a * g).comultiply()
rhs = a.comultiply() * g.comultiply()
show("coprod(a g) == coprod(a) coprod(g)", lhs == rhs)

# -- specialization ------------------------------------------------------------
print("\nAt q = 1 the algebra is commutative")
H1 = algebra(1)
show("g a at q=1", parse_element("g a", H1))
show("g a at q=1/2", parse_element("g a", algebra(Fraction(1, 2))))

# -- the fundamental corepresentation ------------------------------------------
print("\nThe matrix u = [[a, -q g*], [g, a*]]")
u = fundamental()
for row in u:
    print("   ", " | ".join(str(x) for x in row))
show("unitary", verify_unitary(u))
show("coproduct of entries", verify_rep(u))
