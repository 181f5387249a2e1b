"""Schur-functor contents of exterior powers of F1 (x) F2, Sym^2 F and wedge^2 F.

The three enumerations below list the partitions indexing the irreducible
summands of the i-th exterior power of the three spaces an n x n (or m x n)
matrix space is built from.  The tensor-product case is Cauchy's formula; the
other two are the classical plethysms, parametrized by the Durfee size r of
the output partition together with an auxiliary partition alpha packed around
the Durfee square.
"""

from __future__ import annotations

from .partitions import Partition, enumerate_in_rectangle


def cauchy_exterior(m: int, n: int, i: int) -> list[Partition]:
    """Partitions mu indexing wedge^i(F1 (x) F2), dim F1 = m >= dim F2 = n.

    The i-th exterior power decomposes as the sum of S_{mu'}F1 (x) S_mu F2
    over partitions mu of i; a summand survives exactly when mu has at most
    n parts and mu' at most m parts, i.e. mu fits in the n x m box.
    Returned in decreasing lexicographic order.
    """
    if not m >= n >= 1:
        raise ValueError(f"require m >= n >= 1, got m={m}, n={n}")
    if not 0 <= i <= m * n:
        raise ValueError(f"require 0 <= i <= m*n, got i={i}")
    return enumerate_in_rectangle(n, m, i)


def symmetric_exterior_partitions(n: int, i: int) -> list[Partition]:
    """Partitions of 2i indexing wedge^i(Sym^2 F), dim F = n.

    Each summand corresponds to a pair (r, alpha) with alpha inside the
    r x (n - r) box and r^2 + r + 2|alpha| = 2i; the partition has first r
    rows r + 1 + alpha_j and the conjugate of alpha below the Durfee square.
    """
    if n < 1:
        raise ValueError(f"require n >= 1, got n={n}")
    if not 0 <= i <= n * (n + 1) // 2:
        raise ValueError(f"require 0 <= i <= n(n+1)/2, got i={i}")
    out = []
    r = 0
    while r * (r + 1) <= 2 * i:
        rest = 2 * i - r * (r + 1)
        # r^2 + r is even, so rest is always even
        for alpha in enumerate_in_rectangle(r, n - r, rest // 2):
            arm = alpha.pad(r)
            legs = alpha.conjugate().parts
            out.append(Partition(tuple(r + 1 + a for a in arm) + legs))
        r += 1
    return sorted(out, reverse=True)


def skew_exterior_partitions(n: int, i: int) -> list[Partition]:
    """Partitions of 2i indexing wedge^i(wedge^2 F), dim F = n >= 2.

    Each summand corresponds to a pair (r, alpha) with alpha inside the
    r x (n - r - 1) box and r^2 + r + 2|alpha| = 2i; the partition has first
    r rows r + alpha_j, then a single row of length r, then the conjugate of
    alpha.
    """
    if n < 2:
        raise ValueError(f"require n >= 2, got n={n}")
    if not 0 <= i <= n * (n - 1) // 2:
        raise ValueError(f"require 0 <= i <= n(n-1)/2, got i={i}")
    out = []
    r = 0
    while r * (r + 1) <= 2 * i:
        rest = 2 * i - r * (r + 1)
        for alpha in enumerate_in_rectangle(r, n - r - 1, rest // 2):
            arm = alpha.pad(r)
            legs = alpha.conjugate().parts
            out.append(Partition(tuple(r + a for a in arm) + (r,) + legs))
        r += 1
    return sorted(out, reverse=True)


def schur_dimension(p: Partition, N: int) -> int:
    """dim S_p(C^N) by the hook content formula; 0 when p has more than N parts."""
    if N < 0:
        raise ValueError(f"require N >= 0, got N={N}")
    if len(p) > N:
        return 0
    conj = p.conjugate().pad(p.parts[0] if p.parts else 0)
    num = 1
    den = 1
    for i, row in enumerate(p.parts):
        for j in range(row):
            num *= N + j - i
            den *= (row - j) + (conj[j] - i) - 1
    dim, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"hook content product not integral for {p}, N={N}")
    return dim
