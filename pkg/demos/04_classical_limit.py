"""At q = 1 the generators are matrix entries, so elements evaluate at connections."""

import random
from fractions import Fraction as F

from suqconn.cylinder import Connection, GraphElement, eval_classical, matmul, push, random_su2
from suqconn.graphs import Edge, Graph
from suqconn.hopf import algebra
from suqconn.morphisms import make_rho_general, make_xi
from suqconn.parsing import parse_tensor
from suqconn.representation import conjugation_action
from suqconn.scalars import Phase

H1 = algebra(1)
xi = make_xi(Phase(0), H1)
rng = random.Random(1)

# -- holonomies compose along subdivisions -------------------------------------
left, right = Edge("c", F(0), F(1)), Edge("c", F(1), F(2))
A = Connection({left: random_su2(rng), right: random_su2(rng)}, xi)
whole = Edge("c", F(0), F(2))
x = GraphElement(Graph([whole]), parse_tensor("a + g", H1, 1))
y = push(Graph([left, right]), x, xi)
print("a + g on the long edge:      ", eval_classical(x, A))
print("its push on the subdivision: ", eval_classical(y, A))
M = matmul(A.atoms[right], A.atoms[left])
print("entries of the product matrix:", M[0][0] + M[1][0])

# -- rotations act by automorphisms --------------------------------------------
S = [[F(3, 5), F(-4, 5)], [F(4, 5), F(3, 5)]]
m = conjugation_action(S, H1)
print("\nconjugation by a rational rotation:")
print("    a ->", m.image("a"))
print("    g ->", m.image("g"))
print("    matches the general rho:", m == make_rho_general(F(3, 5), F(4, 5), H1))
