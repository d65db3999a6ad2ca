"""Exact arithmetic for monomial ideals over a fixed variable list.

A monomial is an exponent vector in N^n.  A monomial ideal is stored by its
unique minimal generating set, divisibility-minimalized and sorted
lexicographically, so structural equality coincides with ideal equality.
The zero ideal has no generators; the unit ideal is generated by the zero
vector.
"""
from __future__ import annotations

from dataclasses import dataclass

Exponents = tuple[int, ...]


class AmbientMismatch(ValueError):
    """Operands live over different variable lists."""


def divides(g: Exponents, m: Exponents) -> bool:
    """Componentwise g <= m, i.e. x^g divides x^m."""
    return all(a <= b for a, b in zip(g, m))


def exp_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def exp_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_colon(a: Exponents, b: Exponents) -> Exponents:
    """Exponent of x^a : x^b, componentwise max(a - b, 0)."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def total_degree(a: Exponents) -> int:
    return sum(a)


def minimal_vectors(vectors) -> tuple[Exponents, ...]:
    """Divisibility-minimal elements, deduplicated, in lexicographic order."""
    uniq = sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(v), v))
    kept: list[Exponents] = []
    for v in uniq:
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in canonical form (minimal generators, sorted)."""

    vars: tuple[str, ...]
    gens: tuple[Exponents, ...]

    def __post_init__(self):
        names = tuple(str(v) for v in self.vars)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        n = len(names)
        raw = []
        for g in self.gens:
            t = tuple(int(e) for e in g)
            if len(t) != n:
                raise ValueError(
                    f"generator {t} has length {len(t)}, expected {n}"
                )
            if any(e < 0 for e in t):
                raise ValueError(f"negative exponent in generator {t}")
            raw.append(t)
        object.__setattr__(self, "vars", names)
        object.__setattr__(self, "gens", minimal_vectors(raw))

    # -- basic structure ---------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @classmethod
    def zero(cls, vars) -> "MonomialIdeal":
        return cls(tuple(vars), ())

    @classmethod
    def unit(cls, vars) -> "MonomialIdeal":
        vars = tuple(vars)
        return cls(vars, ((0,) * len(vars),))

    def _check_ambient(self, other: "MonomialIdeal") -> None:
        if self.vars != other.vars:
            raise AmbientMismatch(
                f"ambient mismatch: {self.vars} vs {other.vars}"
            )

    def _check_monomial(self, m) -> Exponents:
        t = tuple(int(e) for e in m)
        if len(t) != self.nvars or any(e < 0 for e in t):
            raise ValueError(f"bad monomial {t} for ambient {self.vars}")
        return t

    # -- membership and comparison -----------------------------------------

    def contains(self, m) -> bool:
        """True iff x^m lies in the ideal (some generator divides it)."""
        t = self._check_monomial(m)
        return any(divides(g, t) for g in self.gens)

    def __contains__(self, m) -> bool:
        return self.contains(m)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff other is a subideal of self."""
        self._check_ambient(other)
        return all(self.contains(g) for g in other.gens)

    # -- arithmetic ----------------------------------------------------------

    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        return MonomialIdeal(self.vars, self.gens + other.gens)

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        gens = [exp_mul(a, b) for a in self.gens for b in other.gens]
        return MonomialIdeal(self.vars, tuple(gens))

    def power(self, k: int) -> "MonomialIdeal":
        if k < 1:
            raise ValueError(f"power exponent must be >= 1, got {k}")
        out = self
        for _ in range(k - 1):
            out = out.product(self)
        return out

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Ideal quotient self : other.  Undefined for other = (0)."""
        self._check_ambient(other)
        if other.is_zero:
            raise ValueError("colon by the zero ideal is undefined here")
        out = None
        for b in other.gens:
            piece = MonomialIdeal(
                self.vars, tuple(exp_colon(a, b) for a in self.gens)
            )
            out = piece if out is None else out.intersect(piece)
        return out

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ambient(other)
        gens = [exp_lcm(a, b) for a in self.gens for b in other.gens]
        return MonomialIdeal(self.vars, tuple(gens))

    def radical(self) -> "MonomialIdeal":
        gens = [tuple(1 if e > 0 else 0 for e in g) for g in self.gens]
        return MonomialIdeal(self.vars, tuple(gens))

    def saturate_variable(self, i: int) -> "MonomialIdeal":
        """Zero the i-th exponent of every generator (localize at powers of
        the i-th variable, then contract to the remaining-variable subring,
        re-extended)."""
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        gens = [g[:i] + (0,) + g[i + 1 :] for g in self.gens]
        return MonomialIdeal(self.vars, tuple(gens))

    # -- subring restriction / extension -------------------------------------

    def support(self) -> tuple[int, ...]:
        """Indices of variables appearing in some generator."""
        return tuple(
            i for i in range(self.nvars) if any(g[i] for g in self.gens)
        )

    def restrict(self, names) -> "MonomialIdeal":
        """Contract to the subring on the named variables.  Every generator
        must be supported on them."""
        names = tuple(names)
        idx = []
        for nm in names:
            if nm not in self.vars:
                raise ValueError(f"unknown variable {nm!r}")
            idx.append(self.vars.index(nm))
        keep = set(idx)
        for g in self.gens:
            if any(g[i] for i in range(self.nvars) if i not in keep):
                raise ValueError(
                    f"generator {g} not supported on subring {names}"
                )
        gens = [tuple(g[i] for i in idx) for g in self.gens]
        return MonomialIdeal(names, tuple(gens))

    def extend(self, vars) -> "MonomialIdeal":
        """Expand to a larger ambient ring containing all current variables."""
        vars = tuple(vars)
        pos = []
        for nm in self.vars:
            if nm not in vars:
                raise ValueError(f"variable {nm!r} missing from {vars}")
            pos.append(vars.index(nm))
        gens = []
        for g in self.gens:
            t = [0] * len(vars)
            for i, e in zip(pos, g):
                t[i] = e
            gens.append(tuple(t))
        return MonomialIdeal(vars, tuple(gens))

    # -- operator sugar -------------------------------------------------------

    def __add__(self, other):
        return self.sum(other)

    def __mul__(self, other):
        return self.product(other)

    def __pow__(self, k):
        return self.power(k)


def make_ideal(vars, raw_gens) -> MonomialIdeal:
    """Canonical monomial ideal from any generating set."""
    return MonomialIdeal(tuple(vars), tuple(tuple(g) for g in raw_gens))


def monomial_primes(vars) -> list[MonomialIdeal]:
    """All monomial primes: the zero ideal, then the 2^n - 1 variable-subset
    ideals in binary subset order (bit i = i-th variable present)."""
    vars = tuple(vars)
    n = len(vars)
    out = []
    for mask in range(2**n):
        gens = []
        for i in range(n):
            if mask >> i & 1:
                e = [0] * n
                e[i] = 1
                gens.append(tuple(e))
        out.append(MonomialIdeal(vars, tuple(gens)))
    return out


def principal(vars, m) -> MonomialIdeal:
    return MonomialIdeal(tuple(vars), (tuple(m),))
