"""Sparse univariate polynomials as ``{exponent: Fraction}`` dicts.

Kept separate from :mod:`cohnjordan.polys` on purpose: the explicit models
built on top of these routines serve as oracles for the fraction
arithmetic, so they must not share its code path.
"""

from __future__ import annotations

import math
from fractions import Fraction

SPoly = dict  # {int: Fraction}


def clean(p: SPoly) -> SPoly:
    return {e: Fraction(c) for e, c in p.items() if c}


def deg(p: SPoly) -> int:
    return max(p) if p else -1


def lc(p: SPoly) -> Fraction:
    return p[max(p)]


def add(p: SPoly, q: SPoly) -> SPoly:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def scale(p: SPoly, c) -> SPoly:
    if not c:
        return {}
    return {e: a * c for e, a in p.items()}


def sub(p: SPoly, q: SPoly) -> SPoly:
    return add(p, scale(q, -1))


def mul(p: SPoly, q: SPoly) -> SPoly:
    out: SPoly = {}
    for e, a in p.items():
        for f, b in q.items():
            out[e + f] = out.get(e + f, 0) + a * b
    return {e: c for e, c in out.items() if c}


def divmod_(p: SPoly, q: SPoly) -> tuple[SPoly, SPoly]:
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    dq, cq = deg(q), lc(q)
    quo: SPoly = {}
    rem = dict(p)
    while rem and deg(rem) >= dq:
        dr = deg(rem)
        f = rem[dr] / cq
        quo[dr - dq] = f
        for e, b in q.items():
            key = e + dr - dq
            v = rem.get(key, 0) - f * b
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return quo, rem


def monic(p: SPoly) -> SPoly:
    return scale(p, 1 / lc(p)) if p else p


def stride(*polys: SPoly) -> int:
    """Largest m such that every exponent is a multiple of m (0 for constants)."""
    m = 0
    for p in polys:
        for e in p:
            m = math.gcd(m, e)
    return m


def gcd(p: SPoly, q: SPoly) -> SPoly:
    m = stride(p, q)
    if m > 1:
        # Q[y] is free over Q[y^m], so the gcd can be taken in y^m
        return stretch(gcd(squeeze(p, m), squeeze(q, m)), m)
    p, q = monic(p), monic(q)
    while q:
        p, q = q, monic(divmod_(p, q)[1])
    return monic(p)


def xgcd(p: SPoly, q: SPoly) -> tuple[SPoly, SPoly, SPoly]:
    """(g, u, v) with u*p + v*q == g and g monic (or zero)."""
    r0, r1 = p, q
    s0, s1 = {0: Fraction(1)}, {}
    t0, t1 = {}, {0: Fraction(1)}
    while r1:
        quo, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return r0, s0, t0
    inv = 1 / lc(r0)
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def lcm(p: SPoly, q: SPoly) -> SPoly:
    if not p or not q:
        return {}
    return monic(divmod_(mul(p, q), gcd(p, q))[0])


def reflect(p: SPoly) -> SPoly:
    """p(-y)."""
    return {e: (-c if e % 2 else c) for e, c in p.items()}


def stretch(p: SPoly, m: int) -> SPoly:
    """p(y^m)."""
    return {e * m: c for e, c in p.items()}


def squeeze(p: SPoly, m: int) -> SPoly:
    """Inverse of :func:`stretch`; all exponents must be divisible by m."""
    if any(e % m for e in p):
        raise ValueError("exponent not divisible")
    return {e // m: c for e, c in p.items()}


def all_divisible(p: SPoly, m: int) -> bool:
    return all(e % m == 0 for e in p)
