"""Closure operations on monomial ideals, computed exactly.

Integral closure is Newton-polyhedron membership; the inner integral closure
(elements r with r^n in I^(n+1) for some n) is cut out by making every
positive-offset facet inequality strict; the natural closure is I plus its
inner integral closure; for monomial ideals the continuous closure equals the
natural closure, which is what licenses computing it exactly here.  The axes
closure has no known exact algorithm; this module brackets it between a
provable lower bound (a colon/integral-closure fixed point) and the integral
closure, and delegates exclusion certificates to the glued-ring module.

Three independent routes to the inner integral closure are exported (facet
test, exact LP, intersection of relevant valuation ideals) and must agree;
tests and the selftest driver enforce that monomial by monomial.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import axesrings
from .ideals import (
    Exponents,
    MonomialIdeal,
    divides,
    exp_mul,
    minimal_vectors,
    monomial_primes,
)
from .lp import OPTIMAL, STOPPED, UNBOUNDED, scale_positive, scale_sum_supremum
from .polyhedra import Facet, Weight, newton_polyhedron, weight_order

# int64 dot products are exact as long as values stay far below 2^63; the
# guard keeps a huge margin and anything bigger falls back to Python ints.
_INT64_SAFE = 2**40


# ---------------------------------------------------------------------------
# box scans


def _box_bounds(I: MonomialIdeal, pad: int = 0) -> list[int]:
    return [max(g[i] for g in I.gens) + pad for i in range(I.nvars)]


def _facet_mask(points: np.ndarray, facets, strict_positive: bool):
    """Boolean mask over integer points: all facet inequalities hold, the
    positive-offset ones strictly when strict_positive is set."""
    W = np.array([f.normal for f in facets], dtype=np.int64)
    C = np.array([f.offset for f in facets], dtype=np.int64)
    if strict_positive:
        C = C + (C > 0)
    if points.size and (
        int(np.abs(points).max(initial=0))
        * max(1, int(np.abs(W).max(initial=0)))
        * points.shape[1]
        > _INT64_SAFE
    ):
        mask = np.empty(len(points), dtype=bool)
        for k, p in enumerate(points):  # exact big-int fallback
            mask[k] = all(
                sum(int(w) * int(x) for w, x in zip(f.normal, p))
                >= f.offset + (1 if strict_positive and f.offset > 0 else 0)
                for f in facets
            )
        return mask
    vals = points @ W.T
    return (vals >= C).all(axis=1)


def _box_points(bounds: list[int]) -> np.ndarray:
    sides = [b + 1 for b in bounds]
    grid = np.indices(sides, dtype=np.int64)
    return grid.reshape(len(sides), -1).T


def _minimal_from_mask(mask: np.ndarray, bounds: list[int]):
    """Minimal lattice points of an up-closed set given as a mask over the
    box grid: a point is minimal iff it is in the set and no coordinate
    predecessor is."""
    sides = [b + 1 for b in bounds]
    grid = mask.reshape(sides)
    has_pred = np.zeros_like(grid)
    for axis in range(len(sides)):
        sl_to = [slice(None)] * len(sides)
        sl_from = [slice(None)] * len(sides)
        sl_to[axis] = slice(1, None)
        sl_from[axis] = slice(None, -1)
        has_pred[tuple(sl_to)] |= grid[tuple(sl_from)]
    minimal = grid & ~has_pred
    return [tuple(int(x) for x in p) for p in np.argwhere(minimal)]


# ---------------------------------------------------------------------------
# integral closure


def in_integral_closure(I: MonomialIdeal, m) -> bool:
    """x^m integral over I, i.e. m lies in NP(I)."""
    if I.is_zero:
        return False
    m = I._check_monomial(m)
    return newton_polyhedron(I).contains_point(m)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Lattice points of NP(I), minimalized.  The search box is
    0 <= a_i <= M_i with M_i the largest i-th exponent of a generator: any
    NP point above the box in coordinate i stays in NP after subtracting
    e_i, so no minimal generator escapes (regression-tested)."""
    if I.is_zero:
        return I
    facets = newton_polyhedron(I).facets()
    bounds = _box_bounds(I)
    pts = _box_points(bounds)
    mask = _facet_mask(pts, facets, strict_positive=False)
    return MonomialIdeal(I.vars, tuple(_minimal_from_mask(mask, bounds)))


# ---------------------------------------------------------------------------
# inner integral closure, three ways


def in_inner_closure(I: MonomialIdeal, m) -> bool:
    """Facet test: every facet inequality holds, strictly whenever the
    offset is positive."""
    if I.is_zero:
        return False
    m = I._check_monomial(m)
    return all(
        f.holds(m, strict=f.offset > 0) for f in newton_polyhedron(I).facets()
    )


def in_inner_closure_lp(I: MonomialIdeal, m) -> bool:
    """LP test: a positive scale eps with m in conv(gens) + eps conv(gens)
    + orthant exists.  Uses the merged single-simplex form (see lp module)."""
    if I.is_zero:
        return False
    m = I._check_monomial(m)
    status, val = scale_sum_supremum(m, I.gens)
    if status in (STOPPED, UNBOUNDED):
        return True
    return val > 1


def inner_integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Facet-test route.  Box pad 1: if a passes the strict test and
    a_i >= M_i + 2, then a - 2 e_i is still in NP, so w.a >= c + 2 w_i on
    every positive facet and a - e_i passes too (regression-tested)."""
    if I.is_zero:
        return I
    facets = newton_polyhedron(I).facets()
    bounds = _box_bounds(I, pad=1)
    pts = _box_points(bounds)
    mask = _facet_mask(pts, facets, strict_positive=True)
    return MonomialIdeal(I.vars, tuple(_minimal_from_mask(mask, bounds)))


def inner_integral_closure_lp(I: MonomialIdeal) -> MonomialIdeal:
    """LP route, no facet data touched.  Points divisible by an LP-certified
    generator are skipped: LP feasibility is up-closed because the orthant
    slack absorbs e_i, so such points are members and never minimal."""
    if I.is_zero:
        return I
    bounds = _box_bounds(I, pad=1)
    order = sorted(
        itertools.product(*(range(b + 1) for b in bounds)),
        key=lambda p: (sum(p), p),
    )
    gens: list[Exponents] = []
    for a in order:
        if any(divides(g, a) for g in gens):
            continue
        if in_inner_closure_lp(I, a):
            gens.append(a)
    return MonomialIdeal(I.vars, tuple(gens))


def rees_valuations(I: MonomialIdeal) -> list[tuple[Weight, int]]:
    """Positive-offset facet normals of NP(I) with their orders, the monomial
    Rees valuations.  Unit ideal: empty list."""
    if I.is_zero:
        raise ValueError("the zero ideal has no Rees valuations")
    facets = newton_polyhedron(I).facets()
    return [(Weight(f.normal), f.offset) for f in facets if f.offset > 0]


def _threshold_gens(w: tuple[int, ...], K: int) -> tuple[Exponents, ...]:
    """Minimal a >= 0 with w.a >= K and a_i = 0 wherever w_i = 0."""
    n = len(w)
    pos = [i for i in range(n) if w[i] > 0]
    out: list[Exponents] = []
    cur = [0] * n

    def rec(idx: int, remaining: int) -> None:
        i = pos[idx]
        if idx == len(pos) - 1:
            cur[i] = -(-remaining // w[i]) if remaining > 0 else 0
            out.append(tuple(cur))
            cur[i] = 0
            return
        hi = -(-remaining // w[i]) if remaining > 0 else 0
        for v in range(hi + 1):
            cur[i] = v
            rec(idx + 1, remaining - v * w[i])
        cur[i] = 0

    rec(0, K)
    return minimal_vectors(out)


def relevant_ideal(w, I: MonomialIdeal) -> MonomialIdeal:
    """Contraction of the (k+1)-st power of the valuation maximal ideal,
    k = ord_w(I): all monomials of w-order at least floor(k) + 1.  With a
    primitive integer weight the value group is Z, so floor(k) + 1 is the
    least order strictly above k.  Requires ord_w(I) > 0."""
    if isinstance(w, Weight):
        w = w.w
    w = tuple(int(x) for x in w)
    k = weight_order(w, I)
    if k <= 0:
        raise ValueError(
            "relevant ideal needs ord_w(I) > 0 (valuation must contract I "
            "into its maximal ideal)"
        )
    K = int(k) + 1 if k == int(k) else -(-k // 1)
    return MonomialIdeal(I.vars, _threshold_gens(w, int(K)))


def inner_via_relevant(I: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the relevant valuation ideals over the Rees
    valuations.  Must coincide with inner_integral_closure; exported as a
    cross-check, not a third semantics.

    The intersection is assembled as a conjunction of generator-divisibility
    masks over the inner search box, which provably contains every minimal
    generator of the intersection (same padding argument as the facet
    route)."""
    if I.is_zero:
        return I
    rvs = rees_valuations(I)
    if not rvs:
        return MonomialIdeal.unit(I.vars)
    bounds = _box_bounds(I, pad=1)
    pts = _box_points(bounds)
    mask = np.ones(len(pts), dtype=bool)
    for w, k in rvs:
        gens = np.array(_threshold_gens(w.w, int(k) + 1), dtype=np.int64)
        member = np.zeros(len(pts), dtype=bool)
        step = max(1, 2_000_000 // max(1, len(gens)))
        for lo in range(0, len(pts), step):
            chunk = pts[lo : lo + step]
            member[lo : lo + step] = (
                (chunk[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
            )
        mask &= member
    return MonomialIdeal(I.vars, tuple(_minimal_from_mask(mask, bounds)))


# ---------------------------------------------------------------------------
# special part of the integral closure


def in_special_part(I: MonomialIdeal, J: MonomialIdeal, m) -> bool:
    """LP criterion: m in conv(gens I) + eps conv(gens J) + orthant for some
    eps > 0.  This is the normative semantics; a facet-only test on NP(I) is
    unsound for J != I (witness I=(xy), J=(x,y), m=xy)."""
    I._check_ambient(J)
    if I.is_zero or J.is_zero:
        return False
    m = I._check_monomial(m)
    return scale_positive(m, I.gens, J.gens)


def special_part(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """J-special part of the integral closure of I (monomials r with
    r^n integral over J I^n for some n).  Zero I or J gives the nilpotent
    ideal, which is zero here."""
    I._check_ambient(J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.vars)
    bounds = [
        max(g[i] for g in I.gens) + max(g[i] for g in J.gens)
        for i in range(I.nvars)
    ]
    order = sorted(
        itertools.product(*(range(b + 1) for b in bounds)),
        key=lambda p: (sum(p), p),
    )
    gens: list[Exponents] = []
    for a in order:
        if any(divides(g, a) for g in gens):
            continue
        if scale_positive(a, I.gens, J.gens):
            gens.append(a)
    return MonomialIdeal(I.vars, tuple(gens))


# ---------------------------------------------------------------------------
# natural closure and continuous closure


def natural_closure(I: MonomialIdeal) -> MonomialIdeal:
    """I plus its inner integral closure.  A genuine closure operation."""
    if I.is_zero:
        return I
    return I.sum(inner_integral_closure(I))


def in_natural_closure(I: MonomialIdeal, m) -> bool:
    return I.contains(m) or in_inner_closure(I, m)


def is_naturally_closed(I: MonomialIdeal) -> bool:
    return natural_closure(I) == I


CONTINUOUS_JUSTIFICATION = (
    "natural closure <= continuous closure holds in any affine complex "
    "algebra; for a monomial ideal the natural closure is itself a "
    "naturally closed monomial ideal, hence continuously closed, so the "
    "chain I <= cont(I) <= cont(natural(I)) = natural(I) collapses and "
    "cont(I) = natural(I)."
)


def continuous_closure_monomial(I: MonomialIdeal) -> MonomialIdeal:
    """Continuous closure of a monomial ideal, valid over characteristic-0
    (complex) coefficients: equals the natural closure."""
    return natural_closure(I)


# ---------------------------------------------------------------------------
# axes closure: lower bound, sandwich, membership verdicts


def axes_lower_bound(I: MonomialIdeal) -> MonomialIdeal:
    """Least fixed point of
        K |-> natural(K) + sum_P (P * integral_closure(K)) ∩ (K : P)
    over the monomial primes P, starting at I.  Every step stays inside the
    axes closure (natural closure does, and the colon terms land in the
    axes closure of K by the glued-ring multiplier argument), so the fixed
    point is a provable lower bound for I^ax.  It is not claimed to equal
    the axes closure.

    Terminates because each iterate is a monomial ideal between I and its
    integral closure, a finite lattice; primes are visited in binary subset
    order so the output is reproducible."""
    if I.is_zero:
        return I
    primes = monomial_primes(I.vars)[1:]  # skip (0): its term is always zero
    K = I
    while True:
        nxt = natural_closure(K)
        closure = integral_closure(K)
        for P in primes:
            term = P.product(closure).intersect(K.colon(P))
            nxt = nxt.sum(term)
        if nxt == K:
            return K
        K = nxt


class AxesVerdict(enum.Enum):
    IN_LOWER_BOUND = "in-lower-bound"
    OUTSIDE_INTEGRAL_CLOSURE = "outside-integral-closure"
    OUT_CERTIFIED = "out-certified"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class AxesMembershipVerdict:
    """Sound verdict on x^m in I^ax: membership verdicts only via the lower
    bound, exclusion only via the integral closure or a checked
    certificate."""

    kind: AxesVerdict
    certificate: "axesrings.ExclusionCertificate | None" = None

    @property
    def decided_member(self) -> bool | None:
        if self.kind is AxesVerdict.IN_LOWER_BOUND:
            return True
        if self.kind in (
            AxesVerdict.OUTSIDE_INTEGRAL_CLOSURE,
            AxesVerdict.OUT_CERTIFIED,
        ):
            return False
        return None


def axes_membership(
    I: MonomialIdeal,
    m,
    budget: int = 4000,
    branches: int | None = None,
    truncation: int = 6,
    seed: int = 0,
) -> AxesMembershipVerdict:
    """Decide x^m against the axes closure of I as far as soundly possible,
    delegating to the glued-ring certificate search in the undecided band
    between the lower bound and the integral closure."""
    if I.is_zero:
        raise ValueError("axes membership needs a nonzero ideal")
    m = I._check_monomial(m)
    if axes_lower_bound(I).contains(m):
        return AxesMembershipVerdict(AxesVerdict.IN_LOWER_BOUND)
    if not in_integral_closure(I, m):
        return AxesMembershipVerdict(AxesVerdict.OUTSIDE_INTEGRAL_CLOSURE)
    config = axesrings.CertifySearchConfig(
        branches=branches, truncation=truncation, seed=seed, budget=budget
    )
    cert = axesrings.certify_exclusion(I, m, config)
    if cert is not None:
        return AxesMembershipVerdict(AxesVerdict.OUT_CERTIFIED, cert)
    return AxesMembershipVerdict(AxesVerdict.UNKNOWN)


# ---------------------------------------------------------------------------
# fiber criterion (monomial specialization)


def fiber_exclusion_monomial(
    f,
    g,
    fiber_ideal: MonomialIdeal,
    J: MonomialIdeal,
    fiber_vars,
) -> bool:
    """Certified exclusion from the continuous closure by specializing to
    fibers: returns True iff x^f is outside natural_closure(J) and x^g is
    outside the natural closure of fiber_ideal within the fiber subring.
    True certifies x^(f+g) outside cont(fiber_ideal + x^g J); False draws
    no conclusion.

    fiber_ideal must be supported on fiber_vars and primary to the ideal of
    all fiber variables (that is what makes the excluded fiber locus dense),
    and g must be a fiber monomial."""
    vars = J.vars
    fiber_ideal._check_ambient(J)
    fiber_names = tuple(v for v in vars if v in set(fiber_vars))
    if len(fiber_names) != len(set(fiber_vars)):
        unknown = set(fiber_vars) - set(vars)
        raise ValueError(f"unknown fiber variables {sorted(unknown)}")
    f = J._check_monomial(f)
    g = J._check_monomial(g)
    fiber_idx = [vars.index(v) for v in fiber_names]
    outside = [i for i in range(len(vars)) if i not in fiber_idx]
    if any(g[i] for i in outside):
        raise ValueError("g must be a monomial in the fiber variables")
    I_sub = fiber_ideal.restrict(fiber_names)  # errors if not supported there
    if I_sub.radical() != MonomialIdeal(
        fiber_names, tuple(tuple(1 if j == i else 0 for j in range(len(fiber_names))) for i in range(len(fiber_names)))
    ):
        raise ValueError(
            "fiber ideal must be primary to the ideal of all fiber variables"
        )
    g_sub = tuple(g[i] for i in fiber_idx)
    if in_natural_closure(J, f):
        return False
    if in_natural_closure(I_sub, g_sub):
        return False
    return True
