from collections.abc import Iterable
from dataclasses import dataclass


@dataclass(frozen=True)
class PatternMatrix:
    """
    n x n boolean matrix over the (or, and) semiring.

    Row p is an int bitset, bit q set iff entry (p + 1, q + 1) is 1.
    """

    size: int
    rows: tuple[int, ...]

    @classmethod
    def zero(cls, size: int) -> "PatternMatrix":
        return cls(size, (0,) * size)

    @classmethod
    def identity(cls, size: int) -> "PatternMatrix":
        return cls(size, tuple(1 << i for i in range(size)))

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "PatternMatrix":
        rows = [0] * size
        for p, q in pairs:
            rows[p - 1] |= 1 << (q - 1)
        return cls(size, tuple(rows))

    def __matmul__(self, other: "PatternMatrix") -> "PatternMatrix":
        if self.size != other.size:
            raise ValueError(f"Size mismatch: {self.size} and {other.size}")
        other_rows = other.rows
        out: list[int] = []
        for row in self.rows:
            acc = 0
            while row:
                low = row & -row
                acc |= other_rows[low.bit_length() - 1]
                row ^= low
            out.append(acc)
        return PatternMatrix(self.size, tuple(out))

    def __bool__(self) -> bool:
        return any(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self

    def get(self, p: int, q: int) -> bool:
        return bool(self.rows[p - 1] >> (q - 1) & 1)

    def transpose(self) -> "PatternMatrix":
        return PatternMatrix.from_pairs(self.size, ((q, p) for p, q in self.entries()))

    def entries(self) -> list[tuple[int, int]]:
        """1-based positions of the ones, row-major"""
        return [
            (p, q)
            for p, row in enumerate(self.rows, 1)
            for q in range(1, self.size + 1)
            if row >> (q - 1) & 1
        ]

    def popcount(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def nonzero_rows(self) -> int:
        return sum(1 for row in self.rows if row)

    def to_lists(self) -> list[list[int]]:
        return [[row >> q & 1 for q in range(self.size)] for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in line) for line in self.to_lists())
