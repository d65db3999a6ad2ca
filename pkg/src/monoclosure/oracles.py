"""Brute-force membership oracles, independent of all polyhedral code.

These decide power conditions like x^(n a) in I^(n+1) purely by divisibility
against explicit generator selections, and exist to validate the polyhedral
shortcuts.  Bounded search only: a negative answer means "not found up to the
bound", never a proof of non-membership.
"""
from __future__ import annotations

from functools import lru_cache

from .ideals import Exponents, MonomialIdeal


@lru_cache(maxsize=65536)
def _can_cover(gens: tuple[Exponents, ...], target: Exponents, k: int) -> bool:
    """Can k generators (repetition allowed) sum componentwise below target?

    Depth-first selection with nondecreasing generator indices; memoized on
    the residual, which is what keeps the selection tree tractable.
    """
    if k == 0:
        return True
    # residual total degree must allow k more picks of the cheapest generator
    mindeg = min(sum(g) for g in gens)
    if sum(target) < k * mindeg:
        return False
    for idx, g in enumerate(gens):
        if all(gi <= ti for gi, ti in zip(g, target)):
            residual = tuple(ti - gi for gi, ti in zip(g, target))
            if _can_cover(gens[idx:], residual, k - 1):
                return True
    return False


def power_in_power(a, I: MonomialIdeal, n: int) -> bool:
    """Decide x^(n a) in I^(n+1) by explicit generator selection."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if I.is_zero:
        return False
    target = tuple(n * int(x) for x in a)
    return _can_cover(I.gens, target, n + 1)


def monomial_in_power(a, I: MonomialIdeal, k: int) -> bool:
    """Decide x^(k a) in I^k the same way."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if I.is_zero:
        return False
    target = tuple(k * int(x) for x in a)
    return _can_cover(I.gens, target, k)


def inner_oracle(a, I: MonomialIdeal, bound: int = 20) -> int | None:
    """Least n <= bound with x^(n a) in I^(n+1), else None (no n found up
    to the bound)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    a = tuple(int(x) for x in a)
    for n in range(1, bound + 1):
        if power_in_power(a, I, n):
            return n
    return None


def integral_oracle(a, I: MonomialIdeal, bound: int = 20) -> int | None:
    """Least k <= bound with x^(k a) in I^k, else None."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    a = tuple(int(x) for x in a)
    for k in range(1, bound + 1):
        if monomial_in_power(a, I, k):
            return k
    return None
