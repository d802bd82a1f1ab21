"""Partition diagrams: set partitions of two rows of k vertices.

Vertex convention shared by every module: top vertex i (1-based) maps to
index i-1, bottom vertex i' maps to k+i-1. Multiplication stacks one diagram
above another, closes under union-find on 3k vertices, and reports how many
connected components were confined to the glued middle row; the caller turns
that count into a monomial coefficient.
"""

from __future__ import annotations

from .partitions import SetPartition, UnionFind

__all__ = ["PartitionDiagram"]


class PartitionDiagram:
    """A set partition of {0..2k-1} viewed as a two-row diagram."""

    __slots__ = ("k", "part")

    def __init__(self, k: int, part: SetPartition):
        if k <= 0:
            raise ValueError(f"k must be positive, got {k}")
        if part.n != 2 * k:
            raise ValueError(f"expected ground size {2 * k}, got {part.n}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "part", part)

    def __setattr__(self, name, value):
        raise AttributeError("PartitionDiagram is immutable")

    @classmethod
    def identity(cls, k: int) -> "PartitionDiagram":
        return cls(k, SetPartition(2 * k, [[i, k + i] for i in range(k)]))

    @classmethod
    def from_signed_blocks(cls, k: int, blocks) -> "PartitionDiagram":
        """Blocks of 1-based signed vertices: +i is top i, -i is bottom i'."""
        conv = [[(v - 1) if v > 0 else (k - v - 1) for v in block] for block in blocks]
        return cls(k, SetPartition(2 * k, conv))

    def to_signed_blocks(self) -> list[list[int]]:
        k = self.k
        return [
            [v + 1 if v < k else -(v - k + 1) for v in block]
            for block in self.part.blocks
        ]

    # -- structure -----------------------------------------------------------

    def propagating_number(self) -> int:
        """Number of blocks meeting both the top and the bottom row."""
        k = self.k
        return sum(1 for b in self.part.blocks if b[0] < k <= b[-1])

    def multiply(self, other: "PartitionDiagram") -> tuple["PartitionDiagram", int]:
        """Stack self above other; return (resulting diagram, middle loops)."""
        if self.k != other.k:
            raise ValueError(f"k mismatch: {self.k} != {other.k}")
        k = self.k
        uf = UnionFind(3 * k)
        # self occupies rows 0..k-1 (top) and k..2k-1 (middle), other occupies
        # k..2k-1 (middle) and 2k..3k-1 (bottom): shift other's indices by k.
        for block in self.part.blocks:
            first = block[0]
            for v in block[1:]:
                uf.union(first, v)
        for block in other.part.blocks:
            first = block[0] + k
            for v in block[1:]:
                uf.union(first, v + k)
        touched_outside = set()
        for v in range(k):
            touched_outside.add(uf.find(v))
        for v in range(2 * k, 3 * k):
            touched_outside.add(uf.find(v))
        middle_roots = {uf.find(v) for v in range(k, 2 * k)}
        loops = len(middle_roots - touched_outside)
        groups: dict[int, list[int]] = {}
        for v in range(k):
            groups.setdefault(uf.find(v), []).append(v)
        for v in range(2 * k, 3 * k):
            groups.setdefault(uf.find(v), []).append(v - k)
        result = PartitionDiagram(k, SetPartition(2 * k, groups.values()))
        return result, loops

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        k = self.k

        def tok(v: int) -> str:
            return str(v + 1) if v < k else f"{v - k + 1}'"

        return "[" + "|".join("{" + ",".join(tok(v) for v in b) + "}" for b in self.part.blocks) + "]"

    def __repr__(self) -> str:
        return f"PartitionDiagram({self.k}, {self.part!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartitionDiagram)
            and self.k == other.k
            and self.part == other.part
        )

    def __hash__(self) -> int:
        return hash((self.k, self.part))
