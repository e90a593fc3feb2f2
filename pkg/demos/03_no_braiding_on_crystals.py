#!/usr/bin/env python3
"""Why chains admit no braiding.

Crystal isomorphisms between multiplicity-free shapes are unique, so any
candidate braiding is pinned on the two smallest tensor squares.  Chasing
one word through a naturality square then contradicts the value the
hexagon axiom forces.  The machine reconstructs both values.
"""

from qcactus.crystals import braiding_obstruction, unique_component_isomorphism

sigma11 = unique_component_isomorphism((1, 1), (1, 1))
print("the unique isomorphism of shape (1,1) is the identity:",
      sigma11.is_identity())

sigma12 = unique_component_isomorphism((1, 2), (2, 1))
print("\nthe unique isomorphism (1,2) -> (2,1) acts by:")
for w, v in sorted(sigma12.items(), key=lambda p: str(p[0])):
    print(f"  {w} -> {v}")

witness = braiding_obstruction()
print("\nnaturality against the component inclusion forces")
print(f"  sigma(b1⊗b-1⊗b1) = {witness.forced}")
print("while the hexagon composite (id⊗sigma)(sigma⊗id) gives")
print(f"  sigma(b1⊗b-1⊗b1) = {witness.hexagon}")
print(f"\nobstruction confirmed (values differ): {witness.distinct}")
