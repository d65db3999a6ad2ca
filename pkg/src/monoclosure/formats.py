"""Text and JSON formats for monomials, ideals, and rationals.

Monomial syntax: caret powers and ``*`` separators (``u^2``, ``u*v*x^2``),
``1`` for the unit monomial.  Ideal syntax: a parenthesized comma list,
``(u^2, v^2, u*v*x^2)``; ``(0)`` or ``()`` is the zero ideal and ``(1)`` the
unit ideal.  JSON ideal format:

    {"vars": ["u", "v", "x"], "gens": [[2,0,0], [0,2,0], [1,1,2]]}

Rationals serialize as strings "p/q", integers bare ("2", not "2/1").
"""
from __future__ import annotations

import re
from fractions import Fraction

from .ideals import Exponents, MonomialIdeal

_FACTOR_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^([0-9]+))?$")


def fraction_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def _monomial_factors(text: str) -> dict[str, int]:
    text = text.strip()
    if text == "1":
        return {}
    out: dict[str, int] = {}
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if m is None:
            raise ValueError(f"bad monomial factor {factor.strip()!r}")
        name, exp = m.group(1), int(m.group(2) or 1)
        out[name] = out.get(name, 0) + exp
    return out


def parse_monomial(text: str, vars) -> Exponents:
    """Parse ``u*v*x^2`` against a known variable list."""
    vars = tuple(vars)
    factors = _monomial_factors(text)
    unknown = set(factors) - set(vars)
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)} in {text!r}")
    return tuple(factors.get(v, 0) for v in vars)


def format_monomial(vars, m: Exponents) -> str:
    parts = []
    for name, e in zip(vars, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def parse_ideal(text: str, vars=None) -> MonomialIdeal:
    """Parse ``(u^2, v^2, u*v*x^2)``.  When no variable list is given the
    variables are inferred alphabetically from the ones that appear."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    terms = [t for t in (s.strip() for s in body.split(",")) if t]
    if terms == ["0"]:
        terms = []
    if not terms:
        if vars is None:
            raise ValueError(
                "cannot infer variables for the zero ideal; pass vars"
            )
        return MonomialIdeal.zero(tuple(vars))
    if vars is None:
        names: set[str] = set()
        for t in terms:
            names |= set(_monomial_factors(t))
        vars = tuple(sorted(names))
    vars = tuple(vars)
    return MonomialIdeal(vars, tuple(parse_monomial(t, vars) for t in terms))


def format_ideal(I: MonomialIdeal) -> str:
    if I.is_zero:
        return "(0)"
    return "(" + ", ".join(format_monomial(I.vars, g) for g in I.gens) + ")"


def ideal_to_dict(I: MonomialIdeal) -> dict:
    return {"vars": list(I.vars), "gens": [list(g) for g in I.gens]}


def ideal_from_dict(d: dict) -> MonomialIdeal:
    return MonomialIdeal(tuple(d["vars"]), tuple(tuple(g) for g in d["gens"]))
