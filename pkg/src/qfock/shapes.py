"""Partitions, integer tuples, strips and the straightening normalization.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  ``straighten`` is the linkage
normalization that turns a Schur function indexed by an arbitrary integer
tuple into +/- a partition-indexed one or into zero.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and canonicalize a partition (strips trailing zeros)."""
    t = tuple(int(p) for p in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if any(p <= 0 for p in t):
        raise ValueError(f"partition parts must be positive: {parts!r}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
    return t


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def straighten(t: Sequence[int]):
    """Normalize a Schur index tuple: None for zero, else (sign, partition).

    Shift by the staircase delta = (l-1, ..., 1, 0); a repeated or negative
    entry of t + delta gives zero (negative entries correspond to components
    that annihilate the vacuum).  Otherwise sort strictly decreasing and
    shift back; the sign is the inversion parity of the sorting permutation.
    """
    l = len(t)
    u = [t[k] + (l - 1 - k) for k in range(l)]
    inv = 0
    for i in range(l):
        ui = u[i]
        if ui < 0:
            return None
        for j in range(i + 1, l):
            if ui == u[j]:
                return None
            if ui < u[j]:
                inv += 1
    u.sort(reverse=True)
    lam = tuple(u[k] - (l - 1 - k) for k in range(l))
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return (-1 if inv % 2 else 1, lam)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: lam'_i = #{j : lam_j >= i}."""
    if not lam:
        return ()
    out = []
    for i in range(1, lam[0] + 1):
        out.append(sum(1 for p in lam if p >= i))
    return tuple(out)


def z_lambda(lam: Partition) -> int:
    """The centralizer order prod_i i**m_i * m_i! for lam = (1^m1 2^m2 ...)."""
    out = 1
    mult = 1
    for k, p in enumerate(lam):
        mult = mult + 1 if k and lam[k - 1] == p else 1
        out *= p * mult
    return out


def contains(lam: Partition, rho: Partition) -> bool:
    if len(rho) > len(lam):
        return False
    return all(lam[i] >= rho[i] for i in range(len(rho)))


def is_horizontal_strip(lam: Partition, rho: Partition) -> bool:
    """True iff rho <= lam and lam - rho has at most one box per column.

    Equivalent to the interlacing lam_1 >= rho_1 >= lam_2 >= rho_2 >= ...
    """
    if not contains(lam, rho):
        return False
    padded = rho + (0,) * (len(lam) - len(rho))
    return all(lam[i + 1] <= padded[i] for i in range(len(lam) - 1))


def is_vertical_strip(lam: Partition, rho: Partition) -> bool:
    """True iff rho <= lam and lam - rho has at most one box per row."""
    if not contains(lam, rho):
        return False
    padded = rho + (0,) * (len(lam) - len(rho))
    return all(lam[i] - padded[i] <= 1 for i in range(len(lam)))


@lru_cache(maxsize=None)
def horizontal_strips(rho: Partition, n: int) -> tuple[Partition, ...]:
    """All lam >= rho with lam - rho a horizontal n-strip."""
    if n < 0:
        raise ValueError("strip size must be nonnegative")
    results: list[Partition] = []
    l = len(rho)

    def build(i: int, remaining: int, prefix: list[int]):
        if i == l:
            # one extra row below rho, holding at most rho_l boxes
            if remaining <= rho[l - 1]:
                lam = prefix + ([remaining] if remaining else [])
                results.append(tuple(lam))
            return
        lo = rho[i]
        hi = remaining + lo if i == 0 else min(rho[i - 1], lo + remaining)
        for val in range(lo, hi + 1):
            build(i + 1, remaining - (val - lo), prefix + [val])

    if l == 0:
        results.append((n,) if n else ())
    else:
        build(0, n, [])
    return tuple(sorted(results, key=partition_sort_key))


def vertical_strips(rho: Partition, n: int) -> tuple[Partition, ...]:
    """All lam >= rho with lam - rho a vertical n-strip (conjugate of horizontal)."""
    return tuple(
        sorted(
            (conjugate(k) for k in horizontal_strips(conjugate(rho), n)),
            key=partition_sort_key,
        )
    )


def partition_sort_key(lam: Partition):
    """Weights ascending, reverse-lexicographic within a weight."""
    return (sum(lam), tuple(-p for p in lam))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in the canonical deterministic order."""
    if n < 0:
        return ()
    out: list[Partition] = []

    def build(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(min(cap, remaining), 0, -1):
            build(remaining - p, p, prefix + (p,))

    build(n, n if n else 1, ())
    return tuple(sorted(out, key=partition_sort_key))


def partitions_up_to(max_weight: int) -> tuple[Partition, ...]:
    out: list[Partition] = []
    for n in range(max_weight + 1):
        out.extend(partitions_of(n))
    return tuple(out)


def partitions_in_box(max_len: int, max_part: int) -> Iterator[Partition]:
    """All partitions (including the empty one) with at most max_len parts,
    each part at most max_part."""
    if max_len < 0 or max_part < 0:
        return
    yield ()
    if max_len == 0 or max_part == 0:
        return

    def build(rows_left: int, cap: int, prefix: tuple[int, ...]):
        for p in range(cap, 0, -1):
            cur = prefix + (p,)
            yield cur
            if rows_left > 1:
                yield from build(rows_left - 1, p, cur)

    yield from build(max_len, max_part, ())
