"""Integer partitions (Young diagrams) and dominant integer weights."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.

    The empty sequence is the zero partition.  Equality is structural, so the
    trimming makes ``Partition((3, 1, 0))`` and ``Partition((3, 1))`` the same
    value.  Ordering is lexicographic on the stored parts.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(a) for a in self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    @property
    def size(self) -> int:
        """Number of boxes of the Young diagram."""
        return sum(self.parts)

    @property
    def durfee(self) -> int:
        """Side length of the largest square contained in the diagram."""
        s = 0
        for i, a in enumerate(self.parts, start=1):
            if a >= i:
                s = i
        return s

    def conjugate(self) -> Partition:
        """Transpose of the Young diagram: row i of the result counts parts >= i."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for a in self.parts if a >= i) for i in range(1, self.parts[0] + 1))
        )

    def fits_in(self, rows: int, cols: int) -> bool:
        """Containment in the rows x cols rectangle."""
        if rows < 0 or cols < 0:
            raise ValueError("rectangle sides must be nonnegative")
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def pad(self, length: int) -> tuple[int, ...]:
        """Parts extended by zeros to the given length."""
        if length < len(self.parts):
            raise ValueError(f"partition {self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def to_weight(self, length: int) -> IntegerWeight:
        """View as a dominant weight of the given length (pad with zeros)."""
        return IntegerWeight(self.pad(length))

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> Partition:
        return cls(tuple(data))


@dataclass(frozen=True)
class IntegerWeight:
    """A weakly decreasing integer sequence of fixed, explicit length."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(a) for a in self.entries)
        for a, b in zip(entries, entries[1:]):
            if a < b:
                raise ValueError(f"entries must be weakly decreasing: {entries}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __repr__(self) -> str:
        return f"IntegerWeight({list(self.entries)})"

    def dual(self) -> IntegerWeight:
        """The dual weight: negate and reverse.  An involution preserving dominance."""
        return IntegerWeight(tuple(-a for a in reversed(self.entries)))

    @property
    def is_partition(self) -> bool:
        return not self.entries or self.entries[-1] >= 0


def enumerate_in_rectangle(rows: int, cols: int, k: int) -> list[Partition]:
    """All partitions of size k inside the rows x cols box, lexicographically decreasing."""
    if rows < 0 or cols < 0 or k < 0:
        raise ValueError("rows, cols, k must be nonnegative")
    out: list[Partition] = []

    def fill(prefix: list[int], remaining: int, max_part: int, rows_left: int) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        if rows_left == 0:
            return
        # first part large enough that the remaining rows can absorb the rest
        for a in range(min(max_part, remaining), 0, -1):
            if a * rows_left < remaining:
                break
            prefix.append(a)
            fill(prefix, remaining - a, a, rows_left - 1)
            prefix.pop()

    fill([], k, cols, rows)
    return out
