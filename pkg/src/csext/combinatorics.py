"""Partition and dominant-weight combinatorics.

Partitions are tuples of positive integers in weakly decreasing order, with
trailing zeros stripped; ``()`` is the zero partition.  Weights are integer
tuples of a fixed ambient rank n, and a dominant weight is weakly decreasing.
Row and generator indices in this module are 1-based, matching the usual
conventions for Young diagrams.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ScopeError, ScopeReason

Partition = tuple[int, ...]
Weight = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize to a partition, stripping trailing zeros and validating.

    Accepts any weakly decreasing sequence of nonnegative integers, so a
    dominant nonnegative weight can be reinterpreted as a partition directly.
    """
    t = tuple(int(x) for x in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    for i, x in enumerate(t):
        if x <= 0:
            raise ValueError(f"partition parts must be positive, got {t}")
        if i and t[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing, got {t}")
    return t


def degree(lam: Partition) -> int:
    """Number of cells of the Young diagram."""
    return sum(lam)


def height(lam: Partition) -> int:
    """Number of nonzero parts."""
    return len(as_partition(lam))


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def check_dominant(w: Sequence[int]) -> Weight:
    t = tuple(int(x) for x in w)
    if not is_dominant(t):
        raise ValueError(f"weight is not dominant (not weakly decreasing): {t}")
    return t


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram: column lengths become parts."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Prefix-sum dominance lam >= mu, with implicit trailing zeros.

    Applied literally, so partitions of unequal degree are comparable.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def strictly_dominates(lam: Partition, mu: Partition) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    return lam != mu and dominates(lam, mu)


def weight_leq(mu: Weight, lam: Weight) -> bool:
    """True iff lam - mu is a nonnegative integer sum of roots e_i - e_j, i < j.

    Equivalent prefix-sum form: the entry sums agree and every prefix sum of
    lam - mu is nonnegative.
    """
    if len(mu) != len(lam):
        raise ValueError(f"weight lengths differ: {len(mu)} vs {len(lam)}")
    s = 0
    for x, y in zip(lam, mu):
        s += x - y
        if s < 0:
            return False
    return s == 0


def weight_lt(mu: Weight, lam: Weight) -> bool:
    """Strict weight order: mu <= lam and mu != lam."""
    return tuple(mu) != tuple(lam) and weight_leq(mu, lam)


def is_p_regular(lam: Partition, p: int) -> bool:
    """No nonzero part value occurs p or more times."""
    lam = as_partition(lam)
    return all(count < p for count in _part_multiplicities(lam))


def _part_multiplicities(lam: Partition) -> Iterator[int]:
    for _, grp in itertools.groupby(lam):
        yield sum(1 for _ in grp)


def is_p_restricted(w: Weight, p: int) -> bool:
    """All consecutive differences of a dominant weight are < p."""
    w = check_dominant(w)
    return all(w[i] - w[i + 1] < p for i in range(len(w) - 1))


def chi(lam: Partition) -> int:
    """lam_1 - lam_h + h for a nonzero partition of height h, else 0."""
    lam = as_partition(lam)
    if not lam:
        return 0
    return lam[0] - lam[-1] + len(lam)


class RemovableRows(NamedTuple):
    """Rows r < n of a dominant weight with a strict drop to the next row."""

    rows: tuple[int, ...]
    i_min: int | None
    j_max: int | None


def removable_rows(w: Weight) -> RemovableRows:
    w = check_dominant(w)
    rows = tuple(r for r in range(1, len(w)) if w[r - 1] > w[r])
    if not rows:
        return RemovableRows((), None, None)
    return RemovableRows(rows, rows[0], rows[-1])


def psi(w: Weight) -> int:
    """j - i + w_i - w_{j+1} over the extreme removable rows i, j; 0 if none."""
    w = check_dominant(w)
    rr = removable_rows(w)
    if rr.i_min is None:
        return 0
    i, j = rr.i_min, rr.j_max
    return j - i + w[i - 1] - w[j]


def is_cs_partition(lam: Partition, p: int) -> bool:
    """Complete splittability test for the irreducible head of S^lam: chi <= p.

    p-regularity of lam (existence of the head) is the caller's concern.
    """
    return chi(lam) <= p


def is_cs_weight(w: Weight, p: int) -> bool:
    """Complete splittability test for p-restricted dominant weights: psi <= p."""
    w = check_dominant(w)
    if not is_p_restricted(w, p):
        raise ScopeError(
            ScopeReason.NOT_P_RESTRICTED,
            f"the psi criterion applies to p-restricted weights only, got {w} at p={p}",
        )
    return psi(w) <= p


def has_rim_p_hook(lam: Partition, p: int) -> bool:
    """Whether some rim hook of p cells can be removed from the diagram.

    Beta-set test: with beta_i = lam_i + h - i, a removable rim p-hook exists
    iff some beta >= p has beta - p outside the beta-set.
    """
    lam = as_partition(lam)
    h = len(lam)
    betas = {lam[i] + h - 1 - i for i in range(h)}
    return any(b >= p and b - p not in betas for b in betas)


def is_big_partition(lam: Partition, p: int) -> bool:
    """Completely splittable, at least two parts, and a removable rim p-hook."""
    lam = as_partition(lam)
    return is_cs_partition(lam, p) and len(lam) >= 2 and has_rim_p_hook(lam, p)


def is_big_weight(w: Weight, p: int) -> bool:
    """Whether a p-restricted dominant weight admits the nontrivial node move.

    Requires a removable row, and with i, j the extreme removable rows:
      1. j - i + w_i - w_{j+1} <= p   (completely splittable), and
      2. w_i - w_{j+1} > 1,  j - 1 + w_i - w_{j+1} >= p,  and
         i - w_i + w_{j+1} + p + 1 <= n.
    """
    w = check_dominant(w)
    if not is_p_restricted(w, p):
        raise ScopeError(
            ScopeReason.NOT_P_RESTRICTED,
            f"bigness is defined for p-restricted weights only, got {w} at p={p}",
        )
    rr = removable_rows(w)
    if rr.i_min is None:
        return False
    i, j = rr.i_min, rr.j_max
    n = len(w)
    gap = w[i - 1] - w[j]
    return (
        j - i + gap <= p
        and gap > 1
        and j - 1 + gap >= p
        and i - w[i - 1] + w[j] + p + 1 <= n
    )


def hat(w: Weight, p: int) -> Weight:
    """Move p + 1 - psi nodes from the last column to column w_{j+1} + 1.

    Subtracts the roots e_{a+k} - e_{j+k}, k = 1..(i - j - w_i + w_{j+1} + p + 1)
    with a = j + w_i - w_{j+1} - p - 1.  Defined for big weights only; the
    result is dominant, has the same entry sum and sits strictly below w in
    the weight order.
    """
    w = check_dominant(w)
    if not is_big_weight(w, p):
        raise ScopeError(
            ScopeReason.NOT_BIG, f"the node move is defined for big weights only, got {w} at p={p}"
        )
    rr = removable_rows(w)
    i, j = rr.i_min, rr.j_max
    gap = w[i - 1] - w[j]
    count = i - j - gap + p + 1
    base = j + gap - p - 1
    out = list(w)
    for k in range(1, count + 1):
        out[base + k - 1] -= 1
        out[j + k - 1] += 1
    return tuple(out)


def tilde(lam: Partition, p: int) -> Partition:
    """Partition-side counterpart of the node move, via conjugation.

    Computed as conjugate(hat(pad(conjugate(lam), m))) with ambient rank
    m = degree(lam).  The conjugate-side weight is p-restricted exactly when
    lam is p-regular, so p-irregular input is refused.
    """
    lam = as_partition(lam)
    if not is_big_partition(lam, p):
        raise ScopeError(
            ScopeReason.NOT_BIG,
            f"the tilde move is defined for big partitions only, got {lam} at p={p}",
        )
    if not is_p_regular(lam, p):
        raise ScopeError(
            ScopeReason.NOT_P_REGULAR,
            f"the conjugation route needs a p-regular partition, got {lam} at p={p}",
        )
    w = pad(conjugate(lam), degree(lam))
    return conjugate(as_partition(hat(w, p)))


def pad(a: Sequence[int], m: int | float) -> tuple[int, ...]:
    """Truncate or zero-extend a sequence to length m.

    Truncation must not drop a nonzero entry.  m = math.inf returns the
    trailing-zero-stripped normal form of the infinitely padded sequence.
    """
    t = tuple(int(x) for x in a)
    if m == math.inf:
        while t and t[-1] == 0:
            t = t[:-1]
        return t
    m = int(m)
    if m < 0:
        raise ValueError(f"pad length must be nonnegative, got {m}")
    if m < len(t):
        if any(x != 0 for x in t[m:]):
            raise ValueError(f"cannot truncate {t} to length {m}: nonzero entry dropped")
        return t[:m]
    return t + (0,) * (m - len(t))


def normalize_pair(lam: Weight, mu: Weight) -> tuple[Weight, Weight]:
    """Subtract lam_n from every entry of both weights, making lam_n = 0.

    Twisting by a power of the determinant character; every predicate used by
    the oracles is invariant under this translation.
    """
    if len(lam) != len(mu):
        raise ValueError(f"weight lengths differ: {len(lam)} vs {len(mu)}")
    if not lam:
        return tuple(lam), tuple(mu)
    c = lam[-1]
    return tuple(x - c for x in lam), tuple(x - c for x in mu)


def enum_partitions(m: int) -> list[Partition]:
    """All partitions of m in reverse-lexicographic order, (m) first."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return [()]
    out: list[Partition] = []
    cur = [m]
    while True:
        out.append(tuple(cur))
        k = len(cur) - 1
        while k >= 0 and cur[k] == 1:
            k -= 1
        if k < 0:
            return out
        val = cur[k] - 1
        cur = cur[:k] + [val]
        rem = m - sum(cur)
        while rem > 0:
            nxt = min(val, rem)
            cur.append(nxt)
            rem -= nxt


def enum_dominant_weights(n: int, m: int) -> list[Weight]:
    """All dominant weights of rank n with nonnegative entries summing to m.

    Ascending lexicographic order.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")

    def rec(k: int, s: int, cap: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            if s == 0:
                yield ()
            return
        lo = -(-s // k)
        for first in range(max(lo, 0), min(cap, s) + 1):
            for rest in rec(k - 1, s - first, first):
                yield (first,) + rest

    return list(rec(n, m, m))


def enum_dominant_weights_bounded(n: int, max_entry: int) -> Iterator[Weight]:
    """All dominant weights of rank n with entries in [0, max_entry].

    Descending lexicographic order.
    """
    yield from itertools.combinations_with_replacement(range(max_entry, -1, -1), n)
