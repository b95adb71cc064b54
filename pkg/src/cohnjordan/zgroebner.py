"""Strong Groebner bases over the integers (Moeller's S/G-polynomial scheme).

Polynomials are dicts ``{exponent tuple: int}`` under the lexicographic
order on exponent tuples, so variable 0 is the largest.  A strong basis G
of an ideal I has the property that every nonzero f in I has a leading
term divisible (monomial *and* coefficient) by the leading term of some
g in G, which makes membership a matter of top-reduction.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Optional

from .contract import DegreeBoundExceeded

ZDict = dict  # {tuple[int, ...]: int}


def lead(p: ZDict):
    m = max(p)
    return m, p[m]


def _divides(m: tuple, n: tuple) -> bool:
    return all(a <= b for a, b in zip(m, n))


def _mono_lcm(m: tuple, n: tuple) -> tuple:
    return tuple(max(a, b) for a, b in zip(m, n))


def _mono_div(m: tuple, n: tuple) -> tuple:
    return tuple(a - b for a, b in zip(m, n))


def _addmul(acc: ZDict, p: ZDict, c: int, shift: tuple) -> None:
    """acc += c * x^shift * p, in place."""
    for m, a in p.items():
        key = tuple(u + v for u, v in zip(m, shift))
        v = acc.get(key, 0) + c * a
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def _scaled(p: ZDict, c: int, shift: tuple) -> ZDict:
    out: ZDict = {}
    _addmul(out, p, c, shift)
    return out


def total_degree(p: ZDict) -> int:
    return max((sum(m) for m in p), default=-1)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _normalize_sign(p: ZDict) -> ZDict:
    if p and lead(p)[1] < 0:
        return {m: -c for m, c in p.items()}
    return p


def top_reduce(p: ZDict, basis: list[ZDict]) -> ZDict:
    """Strongly top-reduce ``p`` until its leading term is irreducible."""
    p = dict(p)
    leads = [lead(g) for g in basis]
    while p:
        m, c = lead(p)
        for g, (gm, gc) in zip(basis, leads):
            if c % gc == 0 and _divides(gm, m):
                _addmul(p, g, -(c // gc), _mono_div(m, gm))
                break
        else:
            return p
    return p


def s_poly(f: ZDict, g: ZDict) -> ZDict:
    (fm, fc), (gm, gc) = lead(f), lead(g)
    m = _mono_lcm(fm, gm)
    L = fc * gc // gcd(fc, gc)
    out = _scaled(f, L // fc, _mono_div(m, fm))
    _addmul(out, g, -(L // gc), _mono_div(m, gm))
    return out


def g_poly(f: ZDict, g: ZDict) -> ZDict:
    (fm, fc), (gm, gc) = lead(f), lead(g)
    m = _mono_lcm(fm, gm)
    _, u, v = _xgcd(fc, gc)
    out = _scaled(f, u, _mono_div(m, fm))
    _addmul(out, g, v, _mono_div(m, gm))
    return out


def minimalize(basis: list[ZDict]) -> list[ZDict]:
    """Drop elements whose leading term is strongly divisible by another's."""
    basis = [_normalize_sign(g) for g in basis if g]
    basis.sort(key=lambda g: (lead(g)[0], abs(lead(g)[1])))
    keep: list[ZDict] = []
    for g in basis:
        gm, gc = lead(g)
        if any(_divides(hm, gm) and gc % hc == 0 for hm, hc in (lead(h) for h in keep)):
            continue
        keep.append(g)
    return keep


def full_reduce(p: ZDict, basis: list[ZDict]) -> ZDict:
    """Strongly reduce every term of ``p``, not only the leading one."""
    p = dict(p)
    leads = [lead(g) for g in basis]
    done: ZDict = {}
    while p:
        m, c = lead(p)
        for g, (gm, gc) in zip(basis, leads):
            if _divides(gm, m) and c % gc == 0:
                _addmul(p, g, -(c // gc), _mono_div(m, gm))
                break
        else:
            done[m] = c
            del p[m]
    return done


def _coprime_terms(f: ZDict, g: ZDict) -> bool:
    (fm, fc), (gm, gc) = lead(f), lead(g)
    return gcd(fc, gc) == 1 and all(a == 0 or b == 0 for a, b in zip(fm, gm))


DEFAULT_MAX_PAIRS = 4000


def strong_groebner(gens: Iterable[ZDict], degree_cap: Optional[int] = None,
                    max_pairs: int = DEFAULT_MAX_PAIRS) -> list[ZDict]:
    """Strong Groebner basis of the ideal generated by ``gens``.

    Pairs are treated smallest lcm first.  With ``degree_cap`` set,
    DegreeBoundExceeded is raised as soon as a new basis element exceeds that
    total degree; it is also raised after ``max_pairs`` pairs, so a bounded
    caller never waits on coefficient blow-up.
    """
    basis = [_normalize_sign(dict(g)) for g in gens if g]
    for g in basis:
        if len(g) == 1 and abs(lead(g)[1]) == 1 and not any(lead(g)[0]):
            return [g]

    def key(i, j):
        m = _mono_lcm(lead(basis[i])[0], lead(basis[j])[0])
        return (sum(m), m)

    pairs = [(key(i, j), i, j) for j in range(len(basis)) for i in range(j)]
    done = 0
    while pairs:
        pairs.sort(reverse=True)
        _, i, j = pairs.pop()
        done += 1
        if done > max_pairs:
            raise DegreeBoundExceeded(f"gave up after {max_pairs} critical pairs")
        f, g = basis[i], basis[j]
        fc, gc = lead(f)[1], lead(g)[1]
        cands = [] if _coprime_terms(f, g) else [s_poly(f, g)]
        if fc % gc and gc % fc:
            cands.append(g_poly(f, g))
        for h in cands:
            h = full_reduce(h, basis)
            if not h:
                continue
            h = _normalize_sign(h)
            if degree_cap is not None and total_degree(h) > degree_cap:
                raise DegreeBoundExceeded(
                    f"basis element of degree {total_degree(h)} exceeds cap {degree_cap}")
            basis.append(h)
            n = len(basis) - 1
            if h == {lead(h)[0]: 1} and not any(lead(h)[0]):
                return [h]
            pairs.extend((key(a, n), a, n) for a in range(n))
    return minimalize(basis)


def is_member(p: ZDict, basis: list[ZDict]) -> bool:
    return not top_reduce(p, basis)
