"""Independent oracles used by the test suite.

Everything here recomputes quantities from first principles (Weyl dimension
products, semistandard tableaux, brute-force symmetric powers) so the library
is checked against code that shares none of its internals.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations_with_replacement


def weyl_dimension(parts: tuple[int, ...], N: int) -> int:
    """dim of the GL_N irrep with highest weight ``parts`` (padded), as a product over pairs."""
    if len(parts) > N:
        return 0
    lam = list(parts) + [0] * (N - len(parts))
    num = den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def schur_character(parts: tuple[int, ...], n: int) -> Counter:
    """Monomial expansion of the Schur polynomial in n variables via SSYT enumeration.

    Keys are exponent vectors of length n, values the number of semistandard
    tableaux of shape ``parts`` with that content.
    """
    parts = tuple(p for p in parts if p)
    out: Counter = Counter()
    if len(parts) > n:
        return out
    rows = len(parts)
    tab = [[0] * p for p in parts]
    content = [0] * n

    def fill(r: int, c: int) -> None:
        if r == rows:
            out[tuple(content)] += 1
            return
        if c == parts[r]:
            fill(r + 1, 0)
            return
        lo = 1
        if c > 0:
            lo = max(lo, tab[r][c - 1])
        if r > 0 and c < parts[r - 1]:
            lo = max(lo, tab[r - 1][c] + 1)
        for v in range(lo, n + 1):
            tab[r][c] = v
            content[v - 1] += 1
            fill(r, c + 1)
            content[v - 1] -= 1

    fill(0, 0)
    return out


def sym_power_character(weights: list[tuple[int, ...]], d: int) -> Counter:
    """Character of the d-th symmetric power of a representation with the given weights."""
    out: Counter = Counter()
    for combo in combinations_with_replacement(range(len(weights)), d):
        v = [0] * len(weights[0])
        for k in combo:
            for t, a in enumerate(weights[k]):
                v[t] += a
        out[tuple(v)] += 1
    return out


def decompose_into_schur(char: Counter, n: int) -> dict[tuple[int, ...], int]:
    """Multiplicities of Schur polynomials in a symmetric character, by leading-term subtraction."""
    char = Counter({k: v for k, v in char.items() if v})
    mults: dict[tuple[int, ...], int] = {}
    while char:
        lead = max(char)
        # the lex-greatest monomial of a symmetric polynomial is dominant
        assert all(a >= b for a, b in zip(lead, lead[1:])), lead
        c = char[lead]
        assert c > 0, (lead, c)
        parts = tuple(a for a in lead if a)
        mults[parts] = c
        for w, k in schur_character(parts, n).items():
            char[w] -= c * k
            if char[w] == 0:
                del char[w]
    return mults


def sym2_weights(n: int) -> list[tuple[int, ...]]:
    """Weights of Sym^2 of the standard GL_n representation."""
    out = []
    for i in range(n):
        for j in range(i, n):
            v = [0] * n
            v[i] += 1
            v[j] += 1
            out.append(tuple(v))
    return out


def wedge2_weights(n: int) -> list[tuple[int, ...]]:
    """Weights of wedge^2 of the standard GL_n representation."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i] += 1
            v[j] += 1
            out.append(tuple(v))
    return out


def dominant_box(n: int, bound: int = 6):
    """All weakly decreasing integer n-tuples with entries in [-bound, bound]."""
    return combinations_with_replacement(range(bound, -bound - 1, -1), n)
