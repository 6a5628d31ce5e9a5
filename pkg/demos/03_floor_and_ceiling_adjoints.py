"""Adjoints on posets, computed from best approximations.

The inclusion of the integers into a grid of halves has adjoints on both
sides: the right adjoint is the floor, the left adjoint is the ceiling.
A map can also fail to have an adjoint, for a reason worth seeing.
"""

from fincat import (
    FinitePoset,
    MonotoneMap,
    best_approximation,
    left_adjoint,
    right_adjoint,
    verify_adjunction,
)
from fincat.galois import approximation_report, floor_ceiling_demo, integer_grid_inclusion

inclusion = integer_grid_inclusion(3, 2)
ceiling = left_adjoint(inclusion)
floor = right_adjoint(inclusion)

print("point  ceiling  floor")
for label in inclusion.cod.elements:
    print(f"{label:>5}  {ceiling(label):>7}  {floor(label):>5}")
print()

# The defining equivalence holds on every (integer, grid point) pair; the
# certificate also re-checks the derived laws such as f.g.f = f.
cert = verify_adjunction(ceiling, inclusion)
print("ceiling -| inclusion verified on", cert.verified_on, "pairs")
cert = verify_adjunction(inclusion, floor)
print("inclusion -| floor verified on", cert.verified_on, "pairs")
print()

# Checked against arithmetic, including the negative convention.
report = floor_ceiling_demo(5, 2)
print("floor/ceiling agree with arithmetic on all grid points:", report.ok)
print()

# Surjectivity is not enough for an adjoint: map an antichain onto a point
# and the approximants of that point have no least member.
g = MonotoneMap(
    FinitePoset.antichain(["y1", "y2"]),
    FinitePoset.chain(["x"]),
    {"y1": "x", "y2": "x"},
)
status = approximation_report(g, "x")
print("approximants of x:", status.approximants)
print("best approximation:", best_approximation(g, "x"), f"({status.status})")
print("left adjoint of g:", left_adjoint(g))
