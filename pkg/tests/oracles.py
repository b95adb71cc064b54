"""Independent reference computations for the tests.

Nothing here imports the package's arithmetic; values from the package are
converted to sympy or plain integer data first and re-derived from scratch.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy as sp

X = sp.Symbol("x", positive=True)
Y = sp.Symbol("y", positive=True)


# -- conversions -----------------------------------------------------------------

def qpoly_expr(p) -> sp.Expr:
    return sum((sp.Rational(c.numerator, c.denominator) * X ** i
                for i, c in enumerate(p.coeffs)), sp.Integer(0))


def zpoly_coeffs(p) -> list[int]:
    return [int(c) for c in p.coeffs]


def puiseux_expr(a) -> sp.Expr:
    return sum((sp.Rational(c.numerator, c.denominator) * X ** sp.Rational(e.numerator, e.denominator)
                for e, c in a.terms.items()), sp.Integer(0))


def ratfunc_expr(f) -> sp.Expr:
    return puiseux_expr(f.numerator()) / puiseux_expr(f.denominator())


def same(a: sp.Expr, b: sp.Expr) -> bool:
    return sp.simplify(a - b) == 0


# -- Q[x] --------------------------------------------------------------------------

def sigma_q(expr: sp.Expr, c, d: int, s: int) -> sp.Expr:
    for _ in range(s):
        expr = expr.subs(X, sp.nsimplify(c) * X ** d)
    return sp.expand(expr)


def q_ideal_contains(r: sp.Expr, gens: list[sp.Expr]) -> bool:
    """Membership in the ideal of Q[x] generated by ``gens`` (a PID: divide by the gcd)."""
    g = sp.Integer(0)
    for h in gens:
        g = sp.gcd(g, h)
    if g == 0:
        return sp.expand(r) == 0
    return sp.rem(sp.Poly(r, X, domain="QQ"), sp.Poly(g, X, domain="QQ")).is_zero


def brute_preimage_members(c, d: int, s: int, gens: list[sp.Expr], max_deg: int = 4,
                           coeffs=(-1, 0, 1)) -> list[sp.Expr]:
    """Every f of degree <= max_deg with small coefficients and sigma^s(f) in (gens)."""
    out = []
    for cs in itertools.product(coeffs, repeat=max_deg + 1):
        if not any(cs):
            continue
        f = sum(ci * X ** i for i, ci in enumerate(cs))
        if q_ideal_contains(sigma_q(f, c, d, s), gens):
            out.append(f)
    return out


# -- Z[x]: bounded lattice membership ---------------------------------------------

def _hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row echelon form over Z by repeated Euclid on each pivot column."""
    rows = [list(r) for r in rows if any(r)]
    out = []
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        live = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        if live:
            p = live[0]
            if p[col] < 0:
                p = [-a for a in p]
            out.append(p)
        rows = [r for r in rest if any(r)]
    return out


def z_span_contains(r: list[int], gens: list[list[int]], max_deg: int) -> bool:
    """Is r a Z[x]-combination of gens using only products of degree <= max_deg?

    A True answer is a proof of membership; False only says no combination
    of that size exists.
    """
    width = max_deg + 1
    rows = []
    for g in gens:
        for shift in range(width - len(g) + 1):
            row = [0] * width
            for i, c in enumerate(g):
                row[i + shift] = c
            rows.append(row)
    target = list(r) + [0] * (width - len(r))
    if len(target) > width:
        return False
    # reduce against the echelon basis, highest degree first
    basis = _hnf_rows([row[::-1] for row in rows])
    t = target[::-1]
    for b in basis:
        col = next(i for i, v in enumerate(b) if v)
        if t[col] % b[col]:
            return False
        q = t[col] // b[col]
        t = [a - q * v for a, v in zip(t, b)]
    return not any(t)


# -- models -------------------------------------------------------------------------

def halfint_contains(coeffs) -> bool:
    """q = sum c_i x^i lies in Z + Z[1/2][x]x."""
    cs = [Fraction(c) for c in coeffs]
    if cs and cs[0].denominator != 1:
        return False
    for c in cs[1:]:
        den = c.denominator
        if den & (den - 1):
            return False
    return True


def puiseux_gcd_expr(a, b) -> sp.Expr:
    """gcd in Q[x^(1/2^n)], monic in y = x^(1/2^n) at the common level."""
    n = max(a.level, b.level)
    to_y = {X: Y ** (2 ** n)}
    pa = sp.Poly(sp.expand(puiseux_expr(a).subs(to_y)), Y, domain="QQ")
    pb = sp.Poly(sp.expand(puiseux_expr(b).subs(to_y)), Y, domain="QQ")
    g = sp.gcd(pa, pb)
    if not g.is_zero:
        g = g.monic()
    return g.as_expr().subs(Y, X ** sp.Rational(1, 2 ** n))


def skew_mul_expr(p, q) -> list[sp.Expr]:
    """Coefficients of p*q in D[t; sigma] computed with sympy rational functions."""
    pa = [ratfunc_expr(c) for c in p.coeffs]
    qa = [ratfunc_expr(c) for c in q.coeffs]
    if not pa or not qa:
        return []
    out = [sp.Integer(0)] * (len(pa) + len(qa) - 1)
    for i, a in enumerate(pa):
        for j, b in enumerate(qa):
            out[i + j] += a * b.subs(X, X ** (2 ** i))
    return out
