"""Exact Laurent polynomials in one variable q, and Gaussian binomial coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial, stored as a dense coefficient run.

    ``coeffs[k]`` is the coefficient of ``q**(min_exp + k)``.  The run is
    trimmed so its first and last entries are nonzero; the zero polynomial is
    the canonical value with an empty run and ``min_exp == 0``.  All
    coefficients are exact Python integers.
    """

    min_exp: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        min_exp = int(self.min_exp)
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            coeffs, min_exp = (), 0
        else:
            min_exp += lo
            coeffs = coeffs[lo:hi]
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(0, (1,))

    @classmethod
    def q_power(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls(exponent, (coefficient,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> LaurentPoly:
        nonzero = {e: c for e, c in terms.items() if c != 0}
        if not nonzero:
            return cls.zero()
        lo = min(nonzero)
        hi = max(nonzero)
        return cls(lo, tuple(nonzero.get(e, 0) for e in range(lo, hi + 1)))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        k = exponent - self.min_exp
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def support(self) -> list[int]:
        """Exponents carrying a nonzero coefficient, increasing."""
        return [self.min_exp + k for k, c in enumerate(self.coeffs) if c != 0]

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        return LaurentPoly(
            lo,
            tuple(self.coefficient(e) + other.coefficient(e) for e in range(lo, hi + 1)),
        )

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(self.min_exp + other.min_exp, tuple(out))

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q**k (k may be negative)."""
        if self.is_zero:
            return self
        return LaurentPoly(self.min_exp + k, self.coeffs)

    def substitute_power(self, k: int) -> LaurentPoly:
        """Replace q by q**k, scaling every exponent by k >= 1."""
        if k < 1:
            raise ValueError(f"exponent scale must be positive, got {k}")
        if self.is_zero or k == 1:
            return self
        return LaurentPoly.from_terms(
            {(self.min_exp + i) * k: c for i, c in enumerate(self.coeffs)}
        )

    def evaluate(self, x: int) -> int:
        """Exact value at an integer x; x must be +-1 when negative exponents occur."""
        if self.is_zero:
            return 0
        if self.min_exp < 0 and x not in (1, -1):
            raise ValueError(
                f"cannot evaluate negative exponents at x={x}; only x = 1 or -1 stay integral"
            )
        if x == 1:
            return sum(self.coeffs)
        if x == -1:
            return sum(c if (self.min_exp + i) % 2 == 0 else -c for i, c in enumerate(self.coeffs))
        return sum(c * x ** (self.min_exp + i) for i, c in enumerate(self.coeffs) if c != 0)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + i
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls(int(data["min_exp"]), tuple(data["coeffs"]))


@lru_cache(maxsize=None)
def gauss_binomial(a: int, b: int) -> LaurentPoly:
    """The q-binomial coefficient: polynomial of degree b*(a-b) with constant term 1.

    Computed by the Pascal-type recursion
    ``[a, b] = [a-1, b-1] + q**b * [a-1, b]``, so every coefficient is an
    exact integer.  The coefficient of q**k counts partitions of k inside the
    (a-b) x b box.
    """
    if b < 0 or b > a:
        raise ValueError(f"require 0 <= b <= a, got a={a}, b={b}")
    if b == 0 or b == a:
        return LaurentPoly.one()
    return gauss_binomial(a - 1, b - 1) + gauss_binomial(a - 1, b).shift(b)
