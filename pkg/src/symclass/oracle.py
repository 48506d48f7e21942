"""Exact-arithmetic decision of small bond dimensions.

With z_k = y_k / x_k and X_k = c_k x_k^N, a decomposition with k finite points
means b_a = sum_k X_k z_k^a for the moment vector b, i.e. b lies in the column
span of the (N+1) x k Vandermonde matrix of distinct nodes z_1..z_k. Since the
top k x k block is invertible for distinct nodes, this is equivalent to the
vanishing of the bordered minors built from rows 0..k-1 plus one further row.
Each minor is divisible by the Vandermonde determinant; the quotients are
polynomials in the z's. A point at infinity (x = 0) only feeds b_N, which is
handled by an extra unknown t != 0 subtracted from b_N.

Feasibility over the complex numbers is decided by a Groebner basis: the
system together with 1 - u * prod(z_j - z_i) (and t) is inconsistent iff its
reduced basis is {1}.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy as sp

DEFAULT_MAX_D = 3


@lru_cache(maxsize=None)
def _template(n: int, k: int, infinity: bool):
    zs = sp.symbols(f"z1:{k + 1}")
    t = sp.Symbol("t")
    bs = sp.symbols(f"b0:{n + 1}")
    col = list(bs)
    if infinity:
        col[-1] = col[-1] - t
    vdm = sp.Integer(1)
    for i in range(k):
        for j in range(i + 1, k):
            vdm *= zs[j] - zs[i]
    vdm = sp.expand(vdm)
    gens = list(zs) + ([t] if infinity else [])
    quotients = []
    for row in range(k, n + 1):
        rows = list(range(k)) + [row]
        minor = sp.Matrix([[z ** a for z in zs] + [col[a]] for a in rows]).det()
        q, r = sp.div(sp.expand(minor), vdm, *gens)
        if r != 0:
            raise ArithmeticError("bordered minor is not divisible by the Vandermonde determinant")
        quotients.append(sp.expand(q))
    return zs, t, bs, vdm, quotients


def _feasible(b: Sequence[sp.Rational], k: int, infinity: bool) -> bool:
    n = len(b) - 1
    if k == 0:
        return infinity and all(v == 0 for v in b[:-1]) and b[-1] != 0
    if k > n + 1:
        return False
    zs, t, bs, vdm, quotients = _template(n, k, infinity)
    values = dict(zip(bs, b))
    eqs = [e for e in (sp.expand(q.xreplace(values)) for q in quotients) if e != 0]
    u = sp.Symbol("u")
    gens = list(zs) + ([t] if infinity else []) + [u]
    saturate = vdm * (t if infinity else 1)
    basis = sp.groebner(eqs + [1 - u * saturate], *gens, order="grevlex")
    return not (len(basis.exprs) == 1 and basis.exprs[0] == 1)


def exact_bond_dimension(moments: Sequence[int | Fraction | sp.Rational], max_d: int = DEFAULT_MAX_D) -> int | None:
    """Minimal D <= max_d for exact rational moments, or None if D > max_d.

    D points are either D finite nodes, or D - 1 finite nodes plus the point
    at infinity; at most one point can sit at infinity.
    """
    b = [sp.Rational(v.numerator, v.denominator) if isinstance(v, Fraction) else sp.Rational(v) for v in moments]
    if all(v == 0 for v in b):
        raise ValueError("the zero vector has no decomposition")
    for d in range(1, max_d + 1):
        if _feasible(b, d, False) or _feasible(b, d - 1, True):
            return d
    return None
