"""Independent third-route oracles for the two load-bearing kernels.

Diagram multiplication is re-implemented here as breadth-first search over
the glued incidence graph, and determinants are cross-checked against
sympy's symbolic determinant. Both oracles share no code with the library
paths they check.
"""

import random

import sympy

from diagram_gram.determinant import det_direct
from diagram_gram.diagrams import PartitionDiagram
from diagram_gram.gram import build_gram
from diagram_gram.partitions import SetPartition, set_partitions
from diagram_gram.polynomials import Poly


def multiply_oracle(d1: PartitionDiagram, d2: PartitionDiagram):
    """Compose two diagrams by BFS over the union of their edge sets."""
    k = d1.k
    edges = {v: set() for v in range(3 * k)}

    def connect(a, b):
        edges[a].add(b)
        edges[b].add(a)

    for block in d1.part.blocks:
        for a in block:
            for b in block:
                if a != b:
                    connect(a, b)
    for block in d2.part.blocks:
        for a in block:
            for b in block:
                if a != b:
                    connect(a + k, b + k)
    seen = set()
    components = []
    for start in range(3 * k):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        comp = []
        while queue:
            v = queue.pop()
            comp.append(v)
            for w in edges[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        components.append(sorted(comp))
    loops = sum(1 for comp in components if all(k <= v < 2 * k for v in comp))
    blocks = []
    for comp in components:
        outer = [v if v < k else v - k for v in comp if v < k or v >= 2 * k]
        if outer:
            blocks.append(outer)
    return PartitionDiagram(k, SetPartition(2 * k, blocks)), loops


def random_diagram(rng, k):
    parts = list(set_partitions(range(2 * k)))
    return PartitionDiagram(k, SetPartition(2 * k, rng.choice(parts)))


def test_multiplication_against_bfs_oracle():
    rng = random.Random(5)
    for k in (1, 2, 3, 4):
        for _ in range(60):
            a, b = random_diagram(rng, k), random_diagram(rng, k)
            assert a.multiply(b) == multiply_oracle(a, b)


def test_multiplication_oracle_exhaustive_k2():
    diagrams = [
        PartitionDiagram(2, SetPartition(4, blocks)) for blocks in set_partitions(range(4))
    ]
    for a in diagrams:
        for b in diagrams:
            assert a.multiply(b) == multiply_oracle(a, b)


def _to_sympy(matrix):
    x = sympy.Symbol("x")
    return sympy.Matrix(
        [[sympy.Poly(list(reversed(p.coeffs)) or [0], x).as_expr() for p in row] for row in matrix]
    )


def test_det_direct_against_sympy_random():
    rng = random.Random(17)
    x = sympy.Symbol("x")
    for n in (2, 3, 4, 5):
        for _ in range(6):
            matrix = tuple(
                tuple(
                    Poly([rng.randint(-4, 4) for _ in range(rng.randint(0, 3))])
                    for _ in range(n)
                )
                for _ in range(n)
            )
            ours = det_direct(matrix)
            theirs = sympy.expand(_to_sympy(matrix).det())
            assert sympy.Poly(theirs, x).all_coeffs() == list(reversed(ours.coeffs)) or (
                theirs == 0 and ours.is_zero()
            )


def test_det_direct_against_sympy_gram():
    x = sympy.Symbol("x")
    for algebra, k, s1 in (("partition", 3, 1), ("partition", 3, 0), ("z2", 2, 0)):
        gram = build_gram(algebra, k, s1, 0)
        ours = det_direct(gram.entries)
        theirs = sympy.expand(_to_sympy(gram.entries).det())
        assert sympy.Poly(theirs, x).all_coeffs() == list(reversed(ours.coeffs))
