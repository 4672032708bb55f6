#!/usr/bin/env python3
"""Cones, the positive order form, and well-ordered window enumeration.

Walks through the three built-in geometries: the coordinate orthant, the
cone spanned by (1,0) and (1,2), and the irrational cone spanned by (1,0)
and (1, sqrt(2)), all in exact arithmetic.
"""

from gradedk0 import Cone, OrderForm, QuadraticField, enumerate_window

print("== the coordinate orthant ==")
orthant = Cone.rational([(1, 0), (0, 1)])
print("facets (inward normals):", orthant.facets)
pointed, order = orthant.is_pointed()
print("pointed:", pointed, " witness gamma0:", order.gamma0)
print("interior vector:", orthant.interior_vector())

# The order form gives a total order: compare by gamma0, break ties by
# ascending lexicographic comparison.  With gamma0 = (2,3):
order23 = OrderForm((2, 3))
print("compare (1,0) vs (0,1):", order23.compare((1, 0), (0, 1)))   # -1: 2 < 3
print("compare (3,0) vs (0,2):", order23.compare((3, 0), (0, 2)))   # +1: tie 6=6, lex

# Every slice {gamma0 <= bound} of the cone is finite, so the order is a
# well-ordering on (base + cone) lattice points; list a window:
print("window gamma<=5:", enumerate_window(order23, orthant, (0, 0), 5))

print()
print("== a non-simplicial-looking rational cone ==")
cone12 = Cone.rational([(1, 0), (1, 2)])
print("facets:", cone12.facets)
print("pointed witness:", cone12.is_pointed()[1].gamma0)
print("contains (2,3)?", cone12.contains((2, 3)))
print("contains (0,1)?", cone12.contains((0, 1)))

print()
print("== the irrational cone, exactly ==")
field = QuadraticField(2)
sqrt2 = field.sqrt_gen()
cone_irr = Cone([(1, 0), (field.one(), sqrt2)], field)
print("facets:", cone_irr.facets)
pointed, order = cone_irr.is_pointed()
print("pointed:", pointed, " witness gamma0:", order.gamma0)
# membership of (1,1): needs sqrt(2)*1 - 1 >= 0, decided by integer
# comparison 2 >= 1, never by floating point
print("contains (1,1)?", cone_irr.contains((1, 1)))
print("contains (1,2)?", cone_irr.contains((1, 2)))
print("window gamma<=3:", enumerate_window(order, cone_irr, (0, 0), 3))

print()
print("== a cone that is not pointed ==")
line = Cone.rational([(1, 0), (-1, 0)])
print("pointed:", line.is_pointed()[0])
print("opposite directions inside it:", line.opposite_pair())
