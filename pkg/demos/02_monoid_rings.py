#!/usr/bin/env python3
"""Sparse exact arithmetic in monoid rings on cone lattice points.

The second preset is the ring with three named monomials U = x^(1,0),
V = x^(1,1), W = x^(1,2); because (1,0) + (1,2) = 2 * (1,1) in the monoid,
the relation U*W = V^2 holds identically, with no quotient construction.
"""

from gradedk0 import PrimeField, preset_ring

ring = preset_ring("R2")
U, V, W = ring.gen("U"), ring.gen("V"), ring.gen("W")

print("U =", U, " V =", V, " W =", W)
print("U*W      =", U * W)
print("V^2      =", V**2)
print("U*W - V^2 =", U * W - V**2)

elem = (U + W) ** 2 + 3 * V - ring.constant(7)
print("(U+W)^2 + 3V - 7 =", elem)

# graded pieces read off single exponents; the element is the sum of them
print("coefficient at (2,2):", elem.graded_piece((2, 2)))
print("coefficient at (0,0):", elem.graded_piece((0, 0)))
print("coefficient at (9,9):", elem.graded_piece((9, 9)))

# reduction onto the degree-0 part kills every positive-degree term
print("reduce_mod_plus:", elem.reduce_mod_plus())
print("reduce of a product = product of reduces:",
      (elem * elem).reduce_mod_plus() == elem.reduce_mod_plus() ** 2)

# the same ring with coefficients mod 7
ring7 = preset_ring("R2", base=PrimeField(7))
U7 = ring7.gen("U")
print("\nover F_7: 7*U =", 7 * U7, " (vanishes)")
print("canonical term order of", ring7.gen("W") + U7, "->",
      [t["exp"] for t in (ring7.gen("W") + U7).to_term_list()])
