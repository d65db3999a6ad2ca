"""Newton polyhedra of monomial ideals, exactly.

NP(I) = conv(generator exponents) + nonnegative orthant.  The facet normals
are primitive nonnegative integer vectors; offsets are integers because every
facet is tight at a lattice generator.  Facets come from an incremental
double description run on the dual of the homogenized cone, seeded with the
orthant rays, so everything stays in exact integer arithmetic.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ideals import Exponents, MonomialIdeal
from .lp import lp_max_scale, scale_positive, scale_sum_supremum  # re-export

__all__ = [
    "Facet",
    "Weight",
    "NewtonPolyhedron",
    "newton_polyhedron",
    "facet_enumeration",
    "weight_order",
    "lp_max_scale",
    "scale_positive",
    "scale_sum_supremum",
]


@dataclass(frozen=True)
class Facet:
    """Valid inequality normal . x >= offset, tight on an (n-1)-face."""

    normal: tuple[int, ...]
    offset: int

    def holds(self, p, strict: bool = False) -> bool:
        v = sum(w * x for w, x in zip(self.normal, p))
        return v > self.offset if strict else v >= self.offset


@dataclass(frozen=True)
class Weight:
    """Monomial valuation: ord_w(x^a) = w . a with w primitive, >= 0, != 0."""

    w: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.w)
        if not w or all(x == 0 for x in w):
            raise ValueError("weight must be nonzero")
        if any(x < 0 for x in w):
            raise ValueError("weight must be nonnegative")
        g = 0
        for x in w:
            g = gcd(g, x)
        if g != 1:
            raise ValueError(f"weight {w} is not primitive")
        object.__setattr__(self, "w", w)

    def order(self, I: MonomialIdeal) -> int:
        return weight_order(self.w, I)


def weight_order(w, I: MonomialIdeal) -> int:
    """ord_w(I) = min over generators of w . a.  Error on the zero ideal
    (the order would be +infinity)."""
    if I.is_zero:
        raise ValueError("order of the zero ideal is +infinity")
    w = tuple(w)
    if len(w) != I.nvars:
        raise ValueError("weight dimension mismatch")
    return min(sum(wi * ai for wi, ai in zip(w, g)) for g in I.gens)


def _primitive(vec: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return tuple(x // g for x in vec) if g > 1 else vec


def facet_enumeration(points, nvars: int) -> tuple[Facet, ...]:
    """Irredundant H-representation of conv(points) + orthant.

    Double description on the dual cone D = {y : g . y >= 0 for every
    homogenized generator g}, whose extreme rays are the facets.  The
    generators are (e_i, 0) for the orthant rays and (v, 1) for each point;
    the seed cone uses the orthant rows plus the first point row, which form
    a unimodular matrix, so the initial rays are written down directly.
    """
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        raise ValueError("need at least one point")
    if any(len(p) != nvars for p in pts):
        raise ValueError("point dimension mismatch")
    n = nvars
    v0 = pts[0]
    constraints: list[tuple[int, ...]] = [
        tuple(1 if j == i else 0 for j in range(n)) + (0,) for i in range(n)
    ]
    constraints.append(v0 + (1,))

    # Inverse of [[I, 0], [v0, 1]] read off directly: columns (e_j, -v0_j)
    # and (0, ..., 0, 1).
    rays: list[tuple[int, ...]] = [
        tuple(1 if j == i else 0 for j in range(n)) + (-v0[i],)
        for i in range(n)
    ]
    rays.append((0,) * n + (1,))

    def dot(c, r):
        return sum(x * y for x, y in zip(c, r))

    def tight_set(r):
        return frozenset(
            k for k, c in enumerate(constraints) if dot(c, r) == 0
        )

    tight = [tight_set(r) for r in rays]

    for p in pts[1:]:
        row = p + (1,)
        vals = [dot(row, r) for r in rays]
        if all(v >= 0 for v in vals):
            constraints.append(row)
            tight = [
                t | {len(constraints) - 1} if vals[k] == 0 else t
                for k, t in enumerate(tight)
            ]
            continue
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        new_rays: list[tuple[int, ...]] = []
        for kp in pos:
            for kn in neg:
                common = tight[kp] & tight[kn]
                adjacent = True
                for ko in range(len(rays)):
                    if ko in (kp, kn):
                        continue
                    if common <= tight[ko]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                alpha, beta = vals[kp], -vals[kn]
                combo = tuple(
                    alpha * rays[kn][j] + beta * rays[kp][j]
                    for j in range(n + 1)
                )
                new_rays.append(_primitive(combo))
        constraints.append(row)
        kept = [rays[k] for k in pos + zero] + new_rays
        rays = []
        seen = set()
        for r in kept:
            if r not in seen:
                seen.add(r)
                rays.append(r)
        tight = [tight_set(r) for r in rays]

    facets = []
    for r in rays:
        w, d = r[:n], r[n]
        if all(x == 0 for x in w):
            continue  # homogenization facet
        if any(x < 0 for x in w):  # pragma: no cover - excluded by the cone
            raise AssertionError(f"negative facet normal {w}")
        c = -d
        assert c == min(
            sum(wi * pi for wi, pi in zip(w, p)) for p in pts
        ), "facet offset must be the support minimum"
        facets.append(Facet(w, c))
    facets.sort(key=lambda f: (f.normal, f.offset))
    return tuple(facets)


class NewtonPolyhedron:
    """V-representation plus lazily computed, cached facets."""

    def __init__(self, vpoints, nvars: int):
        self._vpoints = tuple(tuple(int(x) for x in p) for p in vpoints)
        if not self._vpoints:
            raise ValueError("empty polyhedron (zero ideal has no NP)")
        self._nvars = nvars
        self._lock = threading.Lock()
        self._facets: tuple[Facet, ...] | None = None

    @property
    def vpoints(self) -> tuple[Exponents, ...]:
        return self._vpoints

    @property
    def nvars(self) -> int:
        return self._nvars

    def facets(self) -> tuple[Facet, ...]:
        if self._facets is None:
            with self._lock:
                if self._facets is None:
                    self._facets = facet_enumeration(
                        self._vpoints, self._nvars
                    )
        return self._facets

    def contains_point(self, p) -> bool:
        p = tuple(p)
        if len(p) != self._nvars:
            raise ValueError("dimension mismatch")
        return all(f.holds(p) for f in self.facets())

    def __repr__(self):
        return f"NewtonPolyhedron(vpoints={self._vpoints!r})"


def newton_polyhedron(I: MonomialIdeal) -> NewtonPolyhedron:
    if I.is_zero:
        raise ValueError("the zero ideal has an empty Newton polyhedron")
    return NewtonPolyhedron(I.gens, I.nvars)
