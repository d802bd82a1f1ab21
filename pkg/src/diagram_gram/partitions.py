"""Canonical set partitions of {0..n-1}.

Everything in this package is built on top of these: diagrams are set
partitions of two rows of vertices, diagram multiplication is a union-find
closure, and the coarsening order on diagrams is blockwise containment.

A partition is stored in canonical form: each block a sorted tuple, blocks
ordered by minimal element. Two partitions compare equal iff their canonical
forms are identical, so instances can be hashed, deduplicated and used as
cache keys.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

__all__ = ["SetPartition", "UnionFind", "set_partitions"]


class UnionFind:
    """Array-based union-find with path compression and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, v: int) -> int:
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]

    def blocks(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            groups.setdefault(self.find(v), []).append(v)
        return sorted(groups.values())


class SetPartition:
    """An immutable partition of {0..n-1} into disjoint nonempty blocks."""

    __slots__ = ("n", "blocks", "block_index")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError(f"ground size must be nonnegative, got {n}")
        canon = sorted(tuple(sorted(b)) for b in blocks)
        index = [-1] * n
        seen = 0
        for bi, block in enumerate(canon):
            if not block:
                raise ValueError("empty block")
            for v in block:
                if not 0 <= v < n:
                    raise ValueError(f"element {v} out of range for ground size {n}")
                if index[v] != -1:
                    raise ValueError(f"element {v} occurs in two blocks")
                index[v] = bi
            seen += len(block)
        if seen != n:
            missing = [v for v in range(n) if index[v] == -1]
            raise ValueError(f"blocks do not cover the ground set, missing {missing}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", tuple(canon))
        object.__setattr__(self, "block_index", tuple(index))

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls(n, [[v] for v in range(n)])

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "SetPartition":
        """Finest partition in which each listed pair lies in one block."""
        uf = UnionFind(n)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i}, {j}) out of range for ground size {n}")
            uf.union(i, j)
        return cls(n, uf.blocks())

    # -- lattice operations ------------------------------------------------

    def join(self, other: "SetPartition") -> "SetPartition":
        """Smallest partition coarser than both self and other."""
        if self.n != other.n:
            raise ValueError(f"ground size mismatch: {self.n} != {other.n}")
        uf = UnionFind(self.n)
        for part in (self, other):
            for block in part.blocks:
                first = block[0]
                for v in block[1:]:
                    uf.union(first, v)
        return SetPartition(self.n, uf.blocks())

    def is_coarser_than(self, other: "SetPartition") -> bool:
        """True iff every block of other is contained in a block of self."""
        if self.n != other.n:
            raise ValueError(f"ground size mismatch: {self.n} != {other.n}")
        index = self.block_index
        for block in other.blocks:
            bi = index[block[0]]
            if any(index[v] != bi for v in block[1:]):
                return False
        return True

    # -- views ---------------------------------------------------------------

    def block_of(self, v: int) -> tuple[int, ...]:
        return self.blocks[self.block_index[v]]

    def restrict(self, points: Sequence[int]) -> "SetPartition":
        """Partition induced on `points`, relabelled by position in `points`."""
        pos = {v: i for i, v in enumerate(points)}
        pieces: dict[int, list[int]] = {}
        for v in points:
            pieces.setdefault(self.block_index[v], []).append(pos[v])
        return SetPartition(len(points), pieces.values())

    def num_blocks(self) -> int:
        return len(self.blocks)

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __str__(self) -> str:
        return "{" + "|".join(",".join(str(v) for v in b) for b in self.blocks) + "}"

    def __repr__(self) -> str:
        return f"SetPartition({self.n}, {list(map(list, self.blocks))})"


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of `items`, by restricted growth strings."""
    items = list(items)
    n = len(items)
    if n == 0:
        yield []
        return
    # rgs[i] = index of the block containing items[i]; rgs[i] <= max(rgs[:i]) + 1
    rgs = [0] * n

    def rec(i: int, maxused: int):
        if i == n:
            blocks: list[list] = [[] for _ in range(maxused + 1)]
            for j, b in enumerate(rgs):
                blocks[b].append(items[j])
            yield blocks
            return
        for b in range(maxused + 2):
            rgs[i] = b
            yield from rec(i + 1, max(maxused, b))

    yield from rec(1, 0)
