"""Coarsening poset and block-diagonal reduction of the Gram matrices.

The basis diagrams carry a partial order: u lies below v when every class of
v is contained in a class of u of compatible type (a paired through class
may only grow into a paired through class, a flip-fixed horizontal edge only
into flip-fixed targets, and so on). Subtracting, for every diagram, the
fully reduced columns of all strictly coarser diagrams is Moebius inversion
along that poset, so the congruence transform is computed in closed form as
the inverse of the poset's zeta matrix: a unitriangular integer matrix T
with G~ = T' G T. A literal column-by-column subtraction is kept as an
alternative method for arbitration; both produce the same transform.

The reduced matrix decomposes into one block per horizontal-edge profile,
plus, for the signed algebra only, a separate block collecting the diagrams
whose classes are all singletons covering every fiber (their natural
coarsenings leave the signed family, so their entries keep extra terms).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagrams import PartitionDiagram
from .gram import DiagramKey, GramMatrix, build_gram, enumerate_diagrams
from .polynomials import Poly, phi_partition, phi_z2
from .z2diagrams import Z2Diagram

__all__ = [
    "CoarseningPoset",
    "BlockDecomposition",
    "DiffEntry",
    "diagram_coarser_or_equal",
    "coarsening_poset",
    "minimal_common_coarsening",
    "reduce_gram",
    "reduced_decomposition",
    "predicted_blocks",
    "compare_blocks",
    "swap_pair_parameters",
    "is_rho_key",
]


# -- the coarsening relation ---------------------------------------------------


def _block_types(diagram):
    """Per-block (is_through, is_flip_fixed) for doubled diagrams."""
    half = 2 * diagram.k
    index = diagram.part.block_index
    out = []
    for block in diagram.part.blocks:
        through = block[0] < half <= block[-1]
        fixed = index[block[0] ^ 1] == index[block[0]]
        out.append((through, fixed))
    return out


def diagram_coarser_or_equal(da, db) -> bool:
    """True iff da is a coarser diagram of db (reflexively).

    Every class of db must be contained in a class of da; through classes
    must land one-to-one in through classes of the same flip type, and
    flip-fixed horizontal edges only in flip-fixed targets. Plain partition
    diagrams carry no flip typing. Without the one-to-one requirement the
    relation would identify pairs whose product drops the through count,
    and the block reduction degenerates.
    """
    if isinstance(da, Z2Diagram) != isinstance(db, Z2Diagram):
        raise TypeError("cannot compare diagrams of different families")
    index_a = da.part.block_index
    used_through: set[int] = set()
    if isinstance(da, Z2Diagram):
        types_a = _block_types(da)
        types_b = _block_types(db)
        for bi, block in enumerate(db.part.blocks):
            target = index_a[block[0]]
            if any(index_a[v] != target for v in block[1:]):
                return False
            b_through, b_fixed = types_b[bi]
            a_through, a_fixed = types_a[target]
            if b_through:
                if not a_through or a_fixed != b_fixed:
                    return False
                if target in used_through:
                    return False
                used_through.add(target)
            elif b_fixed and not a_fixed:
                return False
        return True
    k = da.k
    for block in db.part.blocks:
        target = index_a[block[0]]
        if any(index_a[v] != target for v in block[1:]):
            return False
        if block[0] < k <= block[-1]:
            tb = da.part.blocks[target]
            if not (tb[0] < k <= tb[-1]):
                return False
            if target in used_through:
                return False
            used_through.add(target)
    return True


@dataclass(frozen=True)
class CoarseningPoset:
    keys: tuple[DiagramKey, ...]
    leq: tuple[tuple[bool, ...], ...]  # leq[u][v]: diagram u coarser-or-equal v

    def strictly_below(self, v: int) -> list[int]:
        return [u for u in range(len(self.keys)) if u != v and self.leq[u][v]]


@lru_cache(maxsize=None)
def coarsening_poset(algebra: str, k: int, s1: int, s2: int = 0) -> CoarseningPoset:
    basis = enumerate_diagrams(algebra, k, s1, s2)
    diagrams = [d for _, d in basis]
    n = len(diagrams)
    leq = tuple(
        tuple(diagram_coarser_or_equal(diagrams[u], diagrams[v]) for v in range(n))
        for u in range(n)
    )
    return CoarseningPoset(tuple(key for key, _ in basis), leq)


def minimal_common_coarsening(algebra: str, k: int, s1: int, s2: int, u: int, v: int):
    """Index of the finest diagram coarser than both basis elements, or None.

    Applies when the product of the two diagrams keeps the full through
    count. Both u, v and the returned index refer to the unrestricted
    family's basis (the search runs there even when called for the signed
    algebra). Raises if the minimum is not unique.
    """
    ambient = "partition" if algebra == "partition" else "z2"
    basis = enumerate_diagrams(ambient, k, s1, s2)
    diagrams = [d for _, d in basis]
    target = s1 if algebra == "partition" else 2 * s1 + s2
    prod, _ = diagrams[u].multiply(diagrams[v])
    if prod.propagating_number() != target:
        return None
    candidates = [
        w
        for w in range(len(diagrams))
        if diagram_coarser_or_equal(diagrams[w], diagrams[u])
        and diagram_coarser_or_equal(diagrams[w], diagrams[v])
    ]
    finest = [
        w
        for w in candidates
        if all(diagram_coarser_or_equal(diagrams[o], diagrams[w]) for o in candidates)
    ]
    if len(finest) != 1:
        raise RuntimeError(
            f"common coarsening of {u} and {v} is not unique: {finest}"
        )
    return finest[0]


# -- transform -------------------------------------------------------------------


def _zeta_inverse(poset: CoarseningPoset) -> tuple[tuple[int, ...], ...]:
    """Columns of Z^-1 by back substitution; unitriangular with integer entries."""
    n = len(poset.keys)
    leq = poset.leq
    cols: list[list[int]] = [[0] * n for _ in range(n)]
    for v in range(n):
        col = cols[v]
        col[v] = 1
        below = [u for u in range(n) if u != v and leq[u][v]]
        # solve upward along the order itself: everything strictly above u
        # (within the interval) has strictly fewer elements above it
        above_count = {u: sum(1 for w in below if w != u and leq[u][w]) for u in below}
        for u in sorted(below, key=lambda u: above_count[u]):
            acc = col[v]
            for w in below:
                if w != u and leq[u][w]:
                    acc += col[w]
            col[u] = -acc
    return tuple(tuple(cols[v][u] for v in range(n)) for u in range(n))


def _sequential_transform(poset: CoarseningPoset) -> tuple[tuple[int, ...], ...]:
    """Literal column operations in basis order: col v -= reduced col u."""
    n = len(poset.keys)
    cols = [[1 if u == v else 0 for u in range(n)] for v in range(n)]
    for v in range(n):
        for u in poset.strictly_below(v):
            for w in range(n):
                cols[v][w] -= cols[u][w]
    return tuple(tuple(cols[v][u] for v in range(n)) for u in range(n))


def _congruence(transform, entries):
    """T' G T for an integer matrix T (given as rows) and polynomial G."""
    n = len(entries)
    cols = [[(u, transform[u][v]) for u in range(n) if transform[u][v]] for v in range(n)]
    gt = [[None] * n for _ in range(n)]
    for i in range(n):
        row = entries[i]
        for v in range(n):
            acc = Poly.zero()
            for u, c in cols[v]:
                p = row[u]
                if p.coeffs:
                    acc = acc + p.scalar_mul(c)
            gt[i][v] = acc
    out = [[None] * n for _ in range(n)]
    for u in range(n):
        for j in range(n):
            acc = Poly.zero()
            for w, c in cols[u]:
                p = gt[w][j]
                if p.coeffs:
                    acc = acc + p.scalar_mul(c)
            out[u][j] = acc
    return tuple(tuple(row) for row in out)


# -- blocks and predictions --------------------------------------------------------


def is_rho_key(key: DiagramKey, k: int, s1: int, s2: int) -> bool:
    """Signed-algebra keys whose classes are all singletons filling every fiber."""
    sizes = [p for part in key.alpha for p in part]
    return all(p == 1 for p in sizes) and len(sizes) == k and s1 + s2 + key.r1 + key.r2 == k


def swap_pair_parameters(du, dv):
    """Role-swap parameters (t1, t2) for two diagrams on the same row partition.

    The pair qualifies when both diagrams restrict to the same top-row
    partition and differ only in which classes are designated through; t1
    counts exchanged conjugate pairs and t2 exchanged flip-fixed classes.
    Returns None for non-qualifying pairs.
    """
    if isinstance(du, Z2Diagram):
        half = 2 * du.k
        top_u, _ = du.halves()
        top_v, _ = dv.halves()
        if top_u != top_v:
            return None
        thr_u = _through_block_set(du, half)
        thr_v = _through_block_set(dv, half)
    else:
        k = du.k
        top_u = du.part.restrict(range(k))
        top_v = dv.part.restrict(range(k))
        if top_u != top_v:
            return None
        thr_u = _through_block_set(du, k)
        thr_v = _through_block_set(dv, k)
    only_u = thr_u - thr_v
    if not only_u:
        return None
    if isinstance(du, Z2Diagram):
        t1 = t2 = 0
        for block in only_u:
            flipped = frozenset(v ^ 1 for v in block)
            if flipped == block:
                t2 += 1
            else:
                t1 += 1
        return t1 // 2, t2
    return len(only_u), 0


def _through_block_set(diagram, half):
    out = set()
    for block in diagram.part.blocks:
        if block[0] < half <= block[-1]:
            out.add(frozenset(v for v in block if v < half))
    return out


@dataclass(frozen=True)
class DiffEntry:
    block: tuple
    row_key: DiagramKey
    col_key: DiagramKey
    got: Poly
    predicted: Poly
    informative: bool

    def describe(self) -> str:
        kind = "informative" if self.informative else "hard"
        return (
            f"[{kind}] block {self.block} entry ({self.row_key.i},{self.row_key.alpha},"
            f"{self.row_key.r1},{self.row_key.r2}) x ({self.col_key.i},{self.col_key.alpha},"
            f"{self.col_key.r1},{self.col_key.r2}): reduced {self.got} vs predicted {self.predicted}"
        )


@dataclass(frozen=True)
class BlockDecomposition:
    gram: GramMatrix
    transform: tuple[tuple[int, ...], ...]
    reduced: tuple[tuple[Poly, ...], ...]
    cells: tuple[tuple[tuple, tuple[int, ...]], ...]  # (label, member indices)
    offblock_violations: tuple[tuple[int, int], ...]
    predicted: dict
    diffs: tuple[DiffEntry, ...]

    def block(self, label) -> tuple[tuple[Poly, ...], ...]:
        members = dict(self.cells)[label]
        return tuple(
            tuple(self.reduced[u][v] for v in members) for u in members
        )

    def predicted_block(self, label) -> tuple[tuple[Poly, ...], ...]:
        return self.predicted[label]

    def hard_diffs(self) -> tuple[DiffEntry, ...]:
        return tuple(d for d in self.diffs if not d.informative)


def _cells_of(gram: GramMatrix):
    """Ordered (label, indices) cells; signed all-singleton keys go to "rho"."""
    groups: dict[tuple, list[int]] = {}
    for idx, key in enumerate(gram.keys):
        if gram.algebra == "signed" and is_rho_key(key, gram.k, gram.s1, gram.s2):
            label = ("rho",)
        else:
            label = ("cell", key.r1, key.r2)
        groups.setdefault(label, []).append(idx)
    ordered = sorted(groups.items(), key=lambda kv: min(kv[1]))
    return tuple((label, tuple(members)) for label, members in ordered)


def reduce_gram(gram: GramMatrix, method: str = "mobius") -> BlockDecomposition:
    """Congruence-reduce a Gram matrix and compare against the closed forms."""
    poset = coarsening_poset(gram.algebra, gram.k, gram.s1, gram.s2)
    if method == "mobius":
        transform = _zeta_inverse(poset)
    elif method == "sequential":
        transform = _sequential_transform(poset)
    else:
        raise ValueError(f"unknown reduction method {method!r}")
    reduced = _congruence(transform, gram.entries)
    cells = _cells_of(gram)
    cell_of = {}
    for label, members in cells:
        for m in members:
            cell_of[m] = label
    n = gram.dimension()
    violations = tuple(
        (u, v)
        for u in range(n)
        for v in range(n)
        if cell_of[u] != cell_of[v] and not reduced[u][v].is_zero()
    )
    predicted = predicted_blocks(gram, cells)
    diffs = compare_blocks(gram, reduced, cells, predicted)
    return BlockDecomposition(
        gram, transform, reduced, cells, violations, predicted, diffs
    )


@lru_cache(maxsize=None)
def reduced_decomposition(algebra: str, k: int, s1: int, s2: int = 0) -> BlockDecomposition:
    return reduce_gram(build_gram(algebra, k, s1, s2))


def predicted_blocks(gram: GramMatrix, cells=None) -> dict:
    """Closed-form block predictions, keyed like the extracted blocks.

    Within an ordinary block the diagonal is the named product polynomial and
    the only nonzero off-diagonal entries sit at role-swap pairs. The signed
    "rho" block additionally carries the correction product phi(0, free) on
    its diagonal and literal statement terms elsewhere; where the literal
    statement disagrees with the reduction output the comparison downgrades
    to informative rather than patching either side.
    """
    if cells is None:
        cells = _cells_of(gram)
    s1, s2, k = gram.s1, gram.s2, gram.k
    partition = gram.algebra == "partition"
    out = {}
    for label, members in cells:
        size = len(members)
        block = [[Poly.zero()] * size for _ in range(size)]
        for a in range(size):
            ka = gram.keys[members[a]]
            da = gram.diagrams[members[a]]
            for b in range(size):
                kb = gram.keys[members[b]]
                db = gram.diagrams[members[b]]
                if label[0] == "rho":
                    block[a][b] = _predict_rho_entry(gram, ka, da, kb, db)
                elif a == b:
                    block[a][b] = (
                        phi_partition(s1, ka.r1) if partition else phi_z2(s1, s2, ka.r1, ka.r2)
                    )
                else:
                    swap = swap_pair_parameters(da, db)
                    if swap is not None:
                        block[a][b] = _swap_pair_value(gram, ka, swap)
        out[label] = tuple(tuple(row) for row in block)
    return out


def _swap_pair_value(gram: GramMatrix, key: DiagramKey, swap) -> Poly:
    t1, t2 = swap
    if gram.algebra == "partition":
        value = phi_partition(gram.s1 + t1, key.r1 - t1)
        sign = (-1) ** t1
        fact = _factorial(t1)
        return value.scalar_mul(sign * fact)
    value = phi_z2(gram.s1 + t1, gram.s2 + t2, key.r1 - t1, key.r2 - t2)
    coeff = (-1) ** (t1 + t2) * 2**t1 * _factorial(t1) * _factorial(t2)
    return value.scalar_mul(coeff)


def _predict_rho_entry(gram: GramMatrix, ka, da, kb, db) -> Poly:
    s1, s2, k = gram.s1, gram.s2, gram.k
    free = k - s1 - s2
    correction = phi_z2(s1, s2, 0, free)
    if ka == kb and da == db:
        return phi_z2(s1, s2, ka.r1, ka.r2) + correction
    prod, _ = da.multiply(db)
    if prod.propagating_number() == 2 * s1 + s2:
        return correction.scalar_mul((-1) ** (ka.r1 + kb.r1))
    swap = swap_pair_parameters(da, db)
    if swap is not None:
        # literal statement value: role-swap term plus the correction product
        return _swap_pair_value(gram, ka, swap) + correction
    return Poly.zero()


def compare_blocks(gram: GramMatrix, reduced, cells, predicted) -> tuple[DiffEntry, ...]:
    """Entrywise reduced-vs-predicted diff; rho off-diagonals are informative."""
    diffs = []
    for label, members in cells:
        pred = predicted[label]
        for a, u in enumerate(members):
            for b, v in enumerate(members):
                got = reduced[u][v]
                want = pred[a][b]
                if got != want:
                    informative = label[0] == "rho" and u != v
                    diffs.append(
                        DiffEntry(label, gram.keys[u], gram.keys[v], got, want, informative)
                    )
    return tuple(diffs)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
