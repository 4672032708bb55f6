"""Built-in rings and reproducible sample modules.

Three presets ship with the package:

* R1: the coordinate orthant in Z^2 with named monomials X = (1,0), Y = (0,1)
  (a bigraded polynomial ring in two variables).
* R2: the cone spanned by (1,0) and (1,2) with named monomials U = (1,0),
  V = (1,1), W = (1,2); the monoid relation U*W = V^2 holds identically.
* R3: the cone spanned by (1,0) and (1,sqrt(2)), with exact quadratic
  arithmetic; its monoid is not finitely generated, so there are no named
  monomials.

Random idempotents are built to be idempotent by construction: a random
0/1 diagonal over the base, conjugated first by a unit-triangular base
matrix inside each same-shift block and then by a random unipotent graded
matrix supported in positive degrees.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .cones import Cone, OrderForm, enumerate_window, vsub
from .errors import InternalCheckError
from .modules import (
    GradedMatrix,
    IdempotentPresentation,
    shift_positions,
    unipotent_inverse,
)
from .rings import GradedRing
from .scalars import (
    QQ,
    IntegerRing,
    PrimeField,
    ProductRing,
    QuadraticField,
    QuadraticReal,
    RationalField,
)

PRESET_NAMES = ("R1", "R2", "R3")


def preset_ring(name: str, base=QQ, gamma0=None) -> GradedRing:
    if name == "R1":
        cone = Cone.rational([(1, 0), (0, 1)])
        named = {"X": (1, 0), "Y": (0, 1)}
    elif name == "R2":
        cone = Cone.rational([(1, 0), (1, 2)])
        named = {"U": (1, 0), "V": (1, 1), "W": (1, 2)}
    elif name == "R3":
        field = QuadraticField(2)
        cone = Cone([(1, 0), (field.one(), field.sqrt_gen())], field)
        named = {}
    else:
        raise ValueError(f"unknown preset {name!r}; expected one of {PRESET_NAMES}")
    order = OrderForm(tuple(gamma0)) if gamma0 is not None else None
    return GradedRing(base, cone, order=order, named_generators=named)


def sample_degrees(ring: GradedRing, count: int = 2) -> list:
    """Degrees used for the free sample modules R + R(-g)."""
    if ring.named_generators:
        return list(ring.named_generators.values())
    bound = 2
    while bound < 64:
        pts = [
            p
            for p in enumerate_window(ring.order, ring.cone, ring.origin, bound)
            if any(p)
        ]
        if len(pts) >= count:
            return pts[:count]
        bound *= 2
    raise InternalCheckError("no nonzero lattice points found in the cone")


def _random_coeff(base, rng: random.Random, nonzero: bool = True):
    for _ in range(64):
        if isinstance(base, RationalField):
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        elif isinstance(base, PrimeField):
            c = base.from_int(rng.randint(0, base.p - 1))
        elif isinstance(base, QuadraticField):
            c = QuadraticReal(
                Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-2, 2)), base.d
            )
        elif isinstance(base, IntegerRing):
            c = rng.randint(-3, 3)
        elif isinstance(base, ProductRing):
            c = base.from_factor_values(
                _random_coeff(f, rng, nonzero=False) for f in base.factors
            )
        else:
            raise ValueError(f"cannot sample coefficients from {base!r}")
        if not nonzero or not base.is_zero(c):
            return c
    raise InternalCheckError("failed to sample a nonzero coefficient")


def _random_unit_triangular(base, size: int, rng: random.Random):
    m = [
        [base.one() if i == j else base.zero() for j in range(size)]
        for i in range(size)
    ]
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < 0.5:
                m[i][j] = _random_coeff(base, rng)
    return m


def random_idempotent(
    ring: GradedRing,
    rng: random.Random,
    max_summands: int = 4,
    shift_bound: int = 6,
) -> IdempotentPresentation:
    """Seeded random graded idempotent presentation, idempotent by construction."""
    pts = enumerate_window(ring.order, ring.cone, ring.origin, shift_bound)
    size = rng.randint(1, max_summands)
    shifts = tuple(pts[rng.randrange(len(pts))] for _ in range(size))
    base = ring.base
    blocks = {}
    for b, idx in shift_positions(shifts).items():
        g = len(idx)
        diag = [
            [
                base.from_int(1 if (i == j and rng.random() < 0.7) else 0)
                for j in range(g)
            ]
            for i in range(g)
        ]
        tri = _random_unit_triangular(base, g, rng)
        tri_inv = linalg.invert(tri, base)
        blocks[b] = linalg.mat_mul(tri_inv, linalg.mat_mul(diag, tri, base), base)
    diagonal = GradedMatrix.from_base_blocks(ring, shifts, blocks)
    ident = GradedMatrix.identity(ring, shifts)
    entries = [list(row) for row in ident.entries]
    for i in range(size):
        for j in range(size):
            d = vsub(shifts[j], shifts[i])
            if any(d) and ring.cone.contains(d) and rng.random() < 0.5:
                entries[i][j] = entries[i][j] + ring.monomial(d, _random_coeff(base, rng))
    perturb = GradedMatrix(ring, shifts, shifts, entries)
    perturb_inv = unipotent_inverse(perturb)
    e = perturb_inv.compose(diagonal).compose(perturb)
    return IdempotentPresentation(ring, shifts, e)


def default_sample_modules(ring: GradedRing, seed: int, random_count: int = 10):
    """Named sample presentations: free modules R + R(-g), then seeded randoms."""
    samples = []
    for g in sample_degrees(ring):
        pres = IdempotentPresentation.free(ring, (ring.origin, g))
        samples.append((f"free:R+R(-{','.join(str(x) for x in g)})", pres))
    rng = random.Random(seed)
    for i in range(random_count):
        samples.append(
            (f"random-{i}", random_idempotent(ring, rng, max_summands=4, shift_bound=3))
        )
    return samples
