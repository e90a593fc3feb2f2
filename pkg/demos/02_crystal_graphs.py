#!/usr/bin/env python3
"""Chains, tensor words, and connected components.

The crystal of highest weight n is a chain of n+1 vertices; tensor
products are flat words with the operators acting through the tensor
rule.  Decomposing a shape recovers the multiplicity-one ladder of
highest weights for two factors.
"""

from qcactus.crystals import (
    TensorWord,
    crystal_dot,
    decompose,
    tensor_e,
    tensor_f,
    words,
    wt,
)

print("the weight-2 chain:")
for w in words((2,)):
    print(f"  {w}  -> f -> {tensor_f(w)}")

print("\nall words of shape (1, 2) with their operator images:")
for w in words((1, 2)):
    print(f"  {str(w):12} e-> {str(tensor_e(w)):12} f-> {tensor_f(w)}")

print("\nconnected components of (1, 2):")
for comp in decompose((1, 2)):
    chain = " -> ".join(str(x) for x in comp.elements)
    print(f"  highest weight {comp.highest_weight}: {chain}")

print("\nthe ladder for shapes (m, n), m, n <= 3:")
for m in range(4):
    row = []
    for n in range(4):
        hws = [c.highest_weight for c in decompose((m, n))]
        row.append("{" + ",".join(map(str, hws)) + "}")
    print("  " + "  ".join(f"{cell:12}" for cell in row))

print("\nthree factors introduce multiplicity: shape (1, 1, 1) ->",
      [c.highest_weight for c in decompose((1, 1, 1))])

print("\nGraphviz source for shape (1, 1):\n")
print(crystal_dot((1, 1)))
