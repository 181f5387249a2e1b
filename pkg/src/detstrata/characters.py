"""Characters of the simple equivariant D-modules attached to rank strata.

Each stratum closure V_p carries a simple equivariant D-module whose
decomposition into irreducibles is multiplicity free and cut out by explicit
inequalities and parity conditions on dominant weights.  The predicates below
implement those conditions, with the uniform boundary convention that an
entry indexed below 1 reads +infinity and one indexed past the length reads
-infinity, which makes the extreme strata (the whole space and the origin)
come out right.
"""

from __future__ import annotations

import math

from .partitions import IntegerWeight
from .spaces import GENERAL, SYMMETRIC, MatrixSpace


def _entry(w: IntegerWeight, i: int) -> float:
    """1-indexed entry with +inf below index 1 and -inf past the end."""
    if i < 1:
        return math.inf
    if i > len(w):
        return -math.inf
    return w.entries[i - 1]


def lambda_extension(w: IntegerWeight, s: int, m: int) -> IntegerWeight:
    """Extend a length-n weight to length m >= n, splicing s copies of s.

    The result is (w_1 - (m-n), ..., w_s - (m-n), s, ..., s, w_{s+1}, ..., w_n)
    with m - n copies of s in the middle.  Raises when the result fails to be
    weakly decreasing, which signals an input outside the natural domain.
    """
    n = len(w)
    if not 0 <= s <= n <= m:
        raise ValueError(f"require 0 <= s <= n <= m, got s={s}, n={n}, m={m}")
    d = m - n
    entries = (
        tuple(a - d for a in w.entries[:s]) + (s,) * d + w.entries[s:]
    )
    for a, b in zip(entries, entries[1:]):
        if a < b:
            raise ValueError(f"extension of {w} with s={s}, m={m} is not dominant: {entries}")
    return IntegerWeight(entries)


def member_general(w: IntegerWeight, m: int, p: int) -> bool:
    """Whether w (length n) lies in the stratum-p character set for m x n matrices.

    The conditions are w_{n-p} >= m - p and w_{n-p+1} <= n - p.
    """
    n = len(w)
    if not 0 <= p <= n <= m:
        raise ValueError(f"require 0 <= p <= n <= m, got p={p}, n={n}, m={m}")
    return _entry(w, n - p) >= m - p and _entry(w, n - p + 1) <= n - p


def member_symmetric(w: IntegerWeight, p: int) -> bool:
    """Whether w lies in the stratum-p character set for symmetric n x n matrices.

    For n - p odd: all entries even, w_{n-p} >= n - p + 1 >= w_{n-p+2}.
    For n - p even: entries up to index n - p odd, the rest even,
    w_{n-p} >= n - p + 1 and w_{n-p+1} <= n - p.
    """
    n = len(w)
    if not 0 <= p <= n:
        raise ValueError(f"require 0 <= p <= n, got p={p}, n={n}")
    k = n - p
    if k % 2 == 1:
        if any(a % 2 != 0 for a in w.entries):
            return False
        return _entry(w, k) >= k + 1 and _entry(w, k + 2) <= k + 1
    if any(w.entries[i] % 2 != 1 for i in range(k)):
        return False
    if any(w.entries[i] % 2 != 0 for i in range(k, n)):
        return False
    return _entry(w, k) >= k + 1 and _entry(w, k + 1) <= k


def member_skew(w: IntegerWeight, p: int) -> bool:
    """Whether w lies in the stratum-p character set for skew-symmetric n x n matrices.

    Stratum p holds rank 2p.  For n even the entries pair up as
    w_1 = w_2, w_3 = w_4, ... with w_{n-2p} >= n - 2p - 1 and
    w_{n-2p+1} <= n - 2p.  For n odd the pivot entry is pinned,
    w_{n-2p} = n - 2p - 1, the pairing applies above it and shifts by one
    below it.
    """
    n = len(w)
    half = n // 2
    if not 0 <= p <= half:
        raise ValueError(f"require 0 <= p <= floor(n/2), got p={p}, n={n}")
    k = n - 2 * p
    if n % 2 == 0:
        if any(w.entries[2 * i] != w.entries[2 * i + 1] for i in range(half)):
            return False
        return _entry(w, k) >= k - 1 and _entry(w, k + 1) <= k
    if _entry(w, k) != k - 1:
        return False
    for i in range(1, half - p + 1):
        if w.entries[2 * i - 2] != w.entries[2 * i - 1]:
            return False
    for i in range(half - p + 1, half + 1):
        if w.entries[2 * i - 1] != w.entries[2 * i]:
            return False
    return True


def multiplicity(space: MatrixSpace, p: int, w: IntegerWeight) -> int:
    """Multiplicity (0 or 1) of the irreducible with highest weight w in the stratum-p module."""
    space.check_stratum(p)
    if len(w) != space.n:
        raise ValueError(f"weight length {len(w)} does not match n={space.n}")
    if space.family == GENERAL:
        accepted = member_general(w, space.m, p)
    elif space.family == SYMMETRIC:
        accepted = member_symmetric(w, p)
    else:
        accepted = member_skew(w, p)
    return 1 if accepted else 0
