#!/usr/bin/env python3
"""Decomposing a graded projective presentation by explicit conjugation.

A module is presented as the image of a graded idempotent matrix e on a
shifted free module.  Reducing e coefficientwise onto degree 0 gives a
block-diagonal idempotent ebar over the base; the unipotent matrix

    u = ebar*e + (1-ebar)*(1-e)

conjugates e into ebar exactly, and its correction u - 1 is nilpotent
because every positive degree has order-form value at least 1.  Filtration
stages fall out as conjugated partial block sums.
"""

from gradedk0 import (
    GradedMatrix,
    IdempotentPresentation,
    conjugator,
    filtration_idempotent,
    filtration_window,
    graded_dimension,
    graded_rank,
    preset_ring,
    window_index,
)

ring = preset_ring("R1", gamma0=(2, 3))
X = ring.gen("X")
shifts = ((0, 0), (1, 0))
e = GradedMatrix(ring, shifts, shifts,
                 [[ring.one(), X], [ring.zero(), ring.zero()]])
pres = IdempotentPresentation(ring, shifts, e)

print("presenting idempotent e =", e)
dec = conjugator(pres)
print("reduced blocks:", dec.blocks)
print("u     =", dec.u)
print("u_inv =", dec.u_inv)
print("nilpotency bound on the correction:", dec.nilpotency_bound)

check = dec.u.compose(e).compose(dec.u_inv)
print("u e u_inv equals the reduced form:",
      check == GradedMatrix.from_base_blocks(ring, shifts, dec.blocks))

# the module is free of rank one on a degree-(0,0) generator; dimensions:
for a in [(0, 0), (1, 0), (0, 1), (2, 1)]:
    print(f"dim of the degree-{a} piece:", graded_dimension(pres, a))

print("\n== the filtration ==")
v = ring.cone.interior_vector()
k = window_index(pres, v)
window = filtration_window(ring, v, k)
print("interior vector:", v, " window index:", k)
print("window points:", window)
for a in window:
    stage = filtration_idempotent(pres, a)
    print(f"stage at {a}: class {graded_rank(stage)}")
