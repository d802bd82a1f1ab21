"""Classical and generalized Stirling numbers, with a counting oracle.

`gen_stirling_z2` and `gen_stirling_partition` count, by closed formula, the
diagrams with prescribed reduced edge counts lying above a given symmetric
diagram in the coarsening order. `count_coarser_bruteforce` computes the same
quantity by exhaustively enumerating merge patterns of the diagram's row
blocks; the two are tied together in the acceptance suite and the formula is
never trusted where the enumeration disagrees.
"""

from __future__ import annotations

from functools import lru_cache

from .diagrams import PartitionDiagram
from .partitions import set_partitions
from .z2diagrams import Z2Diagram

__all__ = [
    "stirling2",
    "binomial",
    "gen_stirling_z2",
    "gen_stirling_partition",
    "count_coarser_bruteforce",
]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(min(k, n - k)):
        out = out * (n - i) // (i + 1)
    return out


def gen_stirling_z2(s1: int, s2: int, r1: int, r2: int, p1: int, p2: int) -> int:
    """Coarser-diagram count for the doubled-vertex families.

    Number of diagrams with the same through classes and p1 conjugate-pair
    plus p2 flip-fixed horizontal edges lying above a diagram that has r1
    and r2 of them. Zero outside the window p1 <= r1, r1 - p1 >= p2 - r2;
    equals 1 when (p1, p2) == (r1, r2).
    """
    if p1 < 0 or p2 < 0 or p1 > r1 or r1 - p1 < p2 - r2:
        return 0
    total = 0
    for i in range(p1, r1 + 1):
        outer = binomial(r1, i) * 2 ** (i - p1) * stirling2(i, p1)
        if outer == 0:
            continue
        inner = 0
        for j in range(r1 - i + 1):
            # the lower summation bound for l is clamped at zero when j
            # exceeds p2; validated against the brute-force oracle
            acc = 0
            for l in range(max(0, p2 - j), r2 + 1):
                acc += binomial(r2, l) * s2 ** (r2 - l) * stirling2(l + j, p2)
            inner += binomial(r1 - i, j) * (2 * s1 + s2) ** (r1 - i - j) * acc
        total += outer * inner
    return total


def gen_stirling_partition(s: int, r: int, p: int) -> int:
    """Coarser-diagram count for the plain partition-diagram family."""
    if p < 0 or p > r:
        return 0
    return sum(
        binomial(r, i) * s ** (r - i) * stirling2(i, p) for i in range(p, r + 1)
    )


# -- brute-force oracle ------------------------------------------------------


def _z2_row_units(diagram: Z2Diagram):
    """Top-row blocks of a symmetric diagram with flip and through metadata.

    Returns (blocks, conj, through, fixed) where conj[i] is the index of the
    flip-conjugate of block i and fixed[i] marks flip-fixed blocks.
    """
    half = 2 * diagram.k
    top, _ = diagram.halves()
    blocks = list(top.blocks)
    through = []
    for block in blocks:
        full = diagram.part.block_of(block[0])
        through.append(full[-1] >= half)
    index = top.block_index
    conj = [index[b[0] ^ 1] for b in blocks]
    fixed = [conj[i] == i for i in range(len(blocks))]
    return blocks, conj, through, fixed


def count_coarser_bruteforce(diagram, p1: int, p2: int | None = None) -> int:
    """Count coarser diagrams with the given horizontal-edge profile.

    For a doubled diagram, (p1, p2) is the target profile; for a plain
    partition diagram, p1 is the target horizontal-edge count and p2 must be
    omitted. The count is over the unrestricted symmetric family: every
    type-respecting blockwise merge of the diagram's row structure.
    """
    if isinstance(diagram, Z2Diagram):
        if p2 is None:
            raise ValueError("doubled diagrams need a (p1, p2) target")
        return _count_coarser_z2(diagram, p1, p2)
    if isinstance(diagram, PartitionDiagram):
        if p2 is not None:
            raise ValueError("plain diagrams take a single target count")
        return _count_coarser_partition(diagram, p1)
    raise TypeError(f"unsupported diagram type {type(diagram).__name__}")


def _count_coarser_z2(diagram: Z2Diagram, p1: int, p2: int) -> int:
    if not diagram.is_mirror_symmetric():
        raise ValueError("oracle requires a mirror-symmetric diagram")
    blocks, conj, through, fixed = _z2_row_units(diagram)
    n = len(blocks)
    count = 0
    for grouping in set_partitions(range(n)):
        group_of = {}
        for gi, group in enumerate(grouping):
            for b in group:
                group_of[b] = gi
        # distinct through blocks may never share a group: merging them would
        # either collapse two through classes or turn a conjugate pair into a
        # flip-fixed class, both of which change the through profile
        ok = True
        for group in grouping:
            if sum(1 for b in group if through[b]) > 1:
                ok = False
                break
        if not ok:
            continue
        # the merged partition must still be flip-stable: flipping every
        # block must permute the groups
        if any(
            group_of[conj[group[0]]] != group_of[conj[b]]
            for group in grouping
            for b in group[1:]
        ):
            continue
        q1 = q2 = 0
        for gi, group in enumerate(grouping):
            if any(through[b] for b in group):
                continue
            image = group_of[conj[group[0]]]
            if image == gi:
                q2 += 1
            elif image > gi:
                q1 += 1
        if (q1, q2) == (p1, p2):
            count += 1
    return count


def _count_coarser_partition(diagram: PartitionDiagram, p: int) -> int:
    k = diagram.k
    top = diagram.part.restrict(range(k))
    bottom = diagram.part.restrict(range(k, 2 * k))
    if top != bottom:
        raise ValueError("oracle requires a mirror-symmetric diagram")
    blocks = list(top.blocks)
    through = []
    for block in blocks:
        full = diagram.part.block_of(block[0])
        through.append(full[-1] >= k)
    count = 0
    for grouping in set_partitions(range(len(blocks))):
        horizontal = 0
        ok = True
        for group in grouping:
            t = sum(1 for b in group if through[b])
            if t > 1:
                ok = False
                break
            if t == 0:
                horizontal += 1
        if ok and horizontal == p:
            count += 1
    return count
