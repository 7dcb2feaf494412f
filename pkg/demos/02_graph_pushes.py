"""Elements living on graphs, and how they move to finer graphs."""

from fractions import Fraction as F

from suqconn.cylinder import CylElement, GraphElement, cyl_equal, cyl_mul, push
from suqconn.graphs import Edge, FramedGraph, Graph, plan
from suqconn.hopf import H
from suqconn.morphisms import FramingLift, make_xi
from suqconn.parsing import parse_tensor
from suqconn.scalars import Phase

xi = make_xi(Phase(0))

# -- a single edge split in two -------------------------------------------------
coarse = Graph([Edge("c", F(0), F(2))])
fine = Graph([Edge("c", F(0), F(1)), Edge("c", F(1), F(2)), Edge("d", F(0), F(1))])
x = GraphElement(coarse, parse_tensor("g", H, 1))

print("moves from coarse to fine:")
for m in plan(fine, coarse):
    print("   ", m)
y = push(fine, x, xi)
print("slots:", ", ".join(str(e) for e in y.graph.edges))
print("pushed:", y.value)

# -- the same class seen from two graphs ---------------------------------------
print("\nThe two representatives define one cylindrical element:")
print("   ", cyl_equal(CylElement(x, xi), CylElement(y, xi)))

# -- products go through a common refinement -----------------------------------
flipped = GraphElement(Graph([Edge("c", F(0), F(1), False)]), parse_tensor("a", H, 1))
prod = cyl_mul(CylElement(x, xi), CylElement(flipped, xi))
print("\nproduct with an oppositely oriented edge:")
print("    slots:", ", ".join(str(e) for e in prod.rep.graph.edges))
print("    value:", prod.rep.value)

# -- framed graphs carry a lift per edge ---------------------------------------
e0, e1 = Edge("c", F(0), F(1)), Edge("c", F(1), F(2))
framed_coarse = FramedGraph({Edge("c", F(0), F(2)): FramingLift(F(0))})
framed_fine = FramedGraph({e0: FramingLift(F(0)), e1: FramingLift(F(1, 4))})
z = push(framed_fine, GraphElement(framed_coarse, parse_tensor("g", H, 1)), None)
print("\nframed push, second slot recolored by a quarter turn:")
print("   ", z.value)
