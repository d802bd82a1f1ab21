"""Exact determinants of polynomial matrices by evaluation-interpolation.

Polynomial matrices here have integer coefficients; the determinant is
recovered from integer determinants (fraction-free Bareiss elimination) at
enough consecutive integer points, followed by exact Lagrange interpolation
over the rationals. This path is independent of the block reduction and is
used to cross-validate it.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Poly, linear_factor, phi_partition, phi_z2, quadratic_factor

__all__ = ["DetResult", "det_direct", "det_blocks", "worker_count"]

THREADS_ENV = "DIAGRAM_GRAM_THREADS"


def worker_count() -> int:
    """Worker cap for the evaluation stage, from DIAGRAM_GRAM_THREADS."""
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class DetResult:
    poly: Poly
    factored: tuple[tuple[Poly, int], ...] | None = None

    def factored_product(self) -> Poly:
        if self.factored is None:
            return self.poly
        out = Poly.one()
        for factor, mult in self.factored:
            for _ in range(mult):
                out = out * factor
        return out


def _bareiss_int(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[i][i]
        for r in range(i + 1, n):
            mr = m[r]
            mi = m[i]
            factor = mr[i]
            for c in range(i + 1, n):
                mr[c] = (piv * mr[c] - factor * mi[c]) // prev
            mr[i] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def _interpolate(xs: list[int], ys: list[int]) -> Poly:
    """Exact Newton interpolation through (xs[i], ys[i])."""
    n = len(xs)
    coeffs = [Fraction(y) for y in ys]  # divided differences, built in place
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    poly = Poly.zero()
    basis = Poly.one()
    for i in range(n):
        poly = poly + basis.scalar_mul(coeffs[i])
        basis = basis * linear_factor(xs[i])
    return poly


def det_direct(matrix) -> Poly:
    """Determinant of a square polynomial matrix, exactly.

    Degree bound: sum over rows of the maximal entry degree. The matrix is
    evaluated at the integers 0..bound; each integer determinant is computed
    by fraction-free elimination and the results are interpolated.
    """
    n = len(matrix)
    if n == 0:
        return Poly.one()
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    bound = 0
    for row in matrix:
        degrees = [p.degree() for p in row if not p.is_zero()]
        if not degrees:
            return Poly.zero()
        bound += max(degrees)
    xs = list(range(bound + 1))

    def det_at(x: int) -> int:
        rows = []
        for row in matrix:
            vals = []
            for p in row:
                val = p.eval_at(x)
                if not isinstance(val, int):
                    raise ValueError("det_direct expects integer-coefficient entries")
                vals.append(val)
            rows.append(vals)
        return _bareiss_int(rows)

    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            ys = list(pool.map(det_at, xs))
    else:
        ys = [det_at(x) for x in xs]
    return _interpolate(xs, ys)


def _components(block) -> list[list[int]]:
    """Connected components of the nonzero off-diagonal coupling graph."""
    n = len(block)
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i in range(n):
        for j in range(i + 1, n):
            if not block[i][j].is_zero() or not block[j][i].is_zero():
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _phi_atoms(algebra: str, s1: int, s2: int, r1: int, r2: int) -> list[Poly]:
    if algebra == "partition":
        return [linear_factor(s1 + l) for l in range(r1)]
    return [quadratic_factor(s1 + j) for j in range(r1)] + [
        linear_factor(s2 + l) for l in range(r2)
    ]


def det_blocks(decomposition) -> DetResult:
    """Determinant assembled from the reduced blocks.

    Each block splits into connected components of its coupling graph.
    Isolated diagonal entries that equal the named product polynomial keep
    their factors symbolic; every other component contributes its directly
    computed determinant.
    """
    gram = decomposition.gram
    factors: dict[Poly, int] = {}

    def add(poly: Poly, mult: int = 1):
        factors[poly] = factors.get(poly, 0) + mult

    for label, members in decomposition.cells:
        block = decomposition.block(label)
        for comp in _components(block):
            if len(comp) == 1:
                idx = comp[0]
                key = gram.keys[members[idx]]
                expected = (
                    phi_partition(gram.s1, key.r1)
                    if gram.algebra == "partition"
                    else phi_z2(gram.s1, gram.s2, key.r1, key.r2)
                )
                entry = block[idx][idx]
                if label[0] != "rho" and entry == expected:
                    for atom in _phi_atoms(gram.algebra, gram.s1, gram.s2, key.r1, key.r2):
                        add(atom)
                    continue
                add(entry)
                continue
            sub = tuple(tuple(block[i][j] for j in comp) for i in comp)
            add(det_direct(sub))
    poly = Poly.one()
    for factor, mult in factors.items():
        for _ in range(mult):
            poly = poly * factor
    return DetResult(poly, tuple(sorted(factors.items(), key=lambda kv: str(kv[0]))))
