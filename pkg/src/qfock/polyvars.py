"""Small dense multivariate polynomial helpers for the verification utilities.

Polynomials in x_1..x_n are dicts mapping exponent vectors (tuples of n
nonnegative ints) to coefficients; coefficients may be plain integers or
ring elements from :mod:`qfock.qring`.  Only what the bialternant and
q-symmetrization checks need is provided.
"""

from __future__ import annotations

from itertools import permutations

VarPoly = dict


def vp_sub(a: VarPoly, b: VarPoly) -> VarPoly:
    out = dict(a)
    for k, c in b.items():
        nc = out.get(k, 0) - c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return out


def vp_mul(a: VarPoly, b: VarPoly) -> VarPoly:
    out: VarPoly = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            nc = out.get(key, 0) + ca * cb
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
    return out


def signed_alternant(entries: tuple[int, ...], sign_of_inversions=None) -> VarPoly:
    """sum over all assignments of ``entries`` to the variables.

    The default weight is the ordinary sign (-1)**inv, giving the alternant;
    passing a callable inv -> coeff builds weighted variants such as the
    (-q)**inv sum of the q-symmetrization lemma.
    """
    n = len(entries)
    out: VarPoly = {}
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        key = tuple(entries[perm[i]] for i in range(n))
        c = (-1) ** inv if sign_of_inversions is None else sign_of_inversions(inv)
        nc = out.get(key, 0) + c
        if nc:
            out[key] = nc
        else:
            out.pop(key, None)
    return out


def divide_by_diff(p: VarPoly, i: int, j: int) -> VarPoly | None:
    """Exact division by (x_i - x_j); None when the remainder is nonzero.

    Synthetic division in x_i: with P = sum_d P_d x_i^d the quotient satisfies
    Q_{D-1} = P_D and Q_{d-1} = P_d + x_j Q_d, remainder P_0 + x_j Q_0.
    """
    if not p:
        return {}
    buckets: dict[int, VarPoly] = {}
    for key, c in p.items():
        d = key[i]
        rest = key[:i] + (0,) + key[i + 1 :]
        buckets.setdefault(d, {})[rest] = c
    top = max(buckets)
    if top == 0:
        return None

    def shift_j(poly: VarPoly) -> VarPoly:
        out = {}
        for key, c in poly.items():
            k2 = list(key)
            k2[j] += 1
            out[tuple(k2)] = c
        return out

    quotient: VarPoly = {}
    cur = buckets.get(top, {})  # Q_{top-1}
    for d in range(top - 1, -1, -1):
        for key, c in cur.items():
            k2 = list(key)
            k2[i] = d
            quotient[tuple(k2)] = c
        nxt = shift_j(cur)
        for key, c in buckets.get(d, {}).items():
            nc = nxt.get(key, 0) + c
            if nc:
                nxt[key] = nc
            else:
                nxt.pop(key, None)
        cur = nxt
    # cur now holds the remainder P_0 + x_j * Q_0
    if cur:
        return None
    return quotient
