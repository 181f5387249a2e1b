"""The three families of matrix spaces with their rank stratifications."""

from __future__ import annotations

from dataclasses import dataclass

GENERAL = "general"
SYMMETRIC = "symmetric"
SKEW = "skew"


@dataclass(frozen=True)
class MatrixSpace:
    """One of: m x n matrices (m >= n), symmetric n x n, or skew-symmetric n x n.

    Strata are the loci of fixed rank; in the skew case stratum p holds the
    rank 2p matrices, so there are floor(n/2) + 1 strata instead of n + 1.
    """

    family: str
    n: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.family == GENERAL:
            if self.m is None or not self.m >= self.n >= 1:
                raise ValueError(f"general family needs m >= n >= 1, got m={self.m}, n={self.n}")
        elif self.family == SYMMETRIC:
            if self.m is not None:
                raise ValueError("symmetric family takes a single size n")
            if self.n < 1:
                raise ValueError(f"symmetric family needs n >= 1, got n={self.n}")
        elif self.family == SKEW:
            if self.m is not None:
                raise ValueError("skew family takes a single size n")
            if self.n < 2:
                raise ValueError(f"skew family needs n >= 2, got n={self.n}")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @classmethod
    def general(cls, m: int, n: int) -> MatrixSpace:
        return cls(GENERAL, n, m)

    @classmethod
    def symmetric(cls, n: int) -> MatrixSpace:
        return cls(SYMMETRIC, n)

    @classmethod
    def skew(cls, n: int) -> MatrixSpace:
        return cls(SKEW, n)

    @property
    def dim(self) -> int:
        """Dimension of the ambient affine space."""
        if self.family == GENERAL:
            return self.m * self.n
        if self.family == SYMMETRIC:
            return self.n * (self.n + 1) // 2
        return self.n * (self.n - 1) // 2

    @property
    def num_strata(self) -> int:
        if self.family == SKEW:
            return self.n // 2 + 1
        return self.n + 1

    @property
    def strata(self) -> range:
        return range(self.num_strata)

    def check_stratum(self, p: int) -> None:
        if not 0 <= p < self.num_strata:
            raise ValueError(f"stratum {p} out of range for {self}: 0..{self.num_strata - 1}")

    def stratum_dim(self, p: int) -> int:
        """Dimension d_p of the closure of stratum p."""
        self.check_stratum(p)
        if self.family == GENERAL:
            return p * (self.m + self.n - p)
        if self.family == SYMMETRIC:
            return p * (2 * self.n - p + 1) // 2
        return p * (2 * self.n - 2 * p - 1)

    def params(self) -> dict[str, int]:
        if self.family == GENERAL:
            return {"m": self.m, "n": self.n}
        return {"n": self.n}

    def __str__(self) -> str:
        if self.family == GENERAL:
            return f"general({self.m},{self.n})"
        return f"{self.family}({self.n})"
