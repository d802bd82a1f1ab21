"""Semisimplicity verdicts from the assembled Gram determinants.

The product of the Gram determinants over every admissible through-class
profile is the obstruction polynomial f: the algebra at an exact rational
parameter value is flagged non-semisimple as soon as any retained factor of
f vanishes there. Only the profiles whose cell-module Gram matrices coincide
with the combinatorial ones are assembled, so a "semisimple" answer is
relative to the implemented factors; a "not semisimple" answer is
unconditional.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .determinant import DetResult, det_blocks
from .gram import DEFAULT_GUARD, check_window
from .polynomials import Poly, linear_factor, quadratic_factor
from .reduction import reduced_decomposition

__all__ = ["FactorRecord", "Verdict", "admissible_profiles", "global_poly", "verdict"]


@dataclass(frozen=True)
class FactorRecord:
    """One retained determinant factor with its profile of origin."""

    s1: int
    s2: int
    poly: Poly
    multiplicity: int

    def describe_at(self, q) -> str:
        """Human-readable witness; cites a named atom when one divides."""
        atom = _vanishing_atom(self.poly, q)
        if atom is not None:
            return str(atom)
        return str(self.poly)


def _vanishing_atom(poly: Poly, q) -> Poly | None:
    bound = max(8, poly.degree() + 2)
    for m in range(bound):
        for atom in (quadratic_factor(m), linear_factor(m)):
            if atom.eval_at(q) == 0 and atom.divides(poly):
                return atom
    return None


@dataclass(frozen=True)
class Verdict:
    algebra: str
    k: int
    q: Fraction | None  # None means the symbolic, indeterminate parameter
    semisimple: bool
    witnesses: tuple[tuple[int, int, str], ...]
    caveat: str

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "k": self.k,
            "q": None if self.q is None else str(self.q),
            "semisimple": self.semisimple,
            "witnesses": [
                {"s1": s1, "s2": s2, "factor": desc} for s1, s2, desc in self.witnesses
            ],
            "caveat": self.caveat,
        }


CAVEAT = (
    "semisimple means: no implemented Gram-determinant factor vanishes; "
    "profiles outside the coincidence cases are not examined"
)


def admissible_profiles(algebra: str, k: int):
    """Profiles (s1, s2) whose Gram matrix is assembled for the product."""
    if algebra == "partition":
        return tuple((s, 0) for s in range(k + 1))
    if algebra == "z2":
        return tuple(
            (s1, s2) for s1 in range(k + 1) for s2 in range(k - s1 + 1)
        )
    return tuple(
        (s1, s2) for s1 in range(k) for s2 in range(k - s1)
    )


@lru_cache(maxsize=None)
def global_poly(algebra: str, k: int, guard: int = DEFAULT_GUARD):
    """Obstruction polynomial with its factor records, over all profiles."""
    check_window(algebra, k, 0, 0)
    records: list[FactorRecord] = []
    poly = Poly.one()
    for s1, s2 in admissible_profiles(algebra, k):
        decomposition = reduced_decomposition(algebra, k, s1, s2)
        if decomposition.gram.dimension() == 0:
            continue
        result = det_blocks(decomposition)
        poly = poly * result.poly
        for factor, mult in result.factored:
            if factor.degree() <= 0:
                continue
            records.append(FactorRecord(s1, s2, factor, mult))
    return DetResult(poly), tuple(records)


def verdict(algebra: str, k: int, q: Fraction | int | None) -> Verdict:
    """Decide semisimplicity at an exact rational q (None for symbolic)."""
    if isinstance(q, float):
        raise TypeError("q must be an exact rational, not a float")
    result, records = global_poly(algebra, k)
    if q is None:
        # over the rational function field the obstruction never vanishes
        return Verdict(algebra, k, None, not result.poly.is_zero(), (), CAVEAT)
    q = Fraction(q)
    witnesses = tuple(
        (rec.s1, rec.s2, rec.describe_at(q))
        for rec in records
        if rec.poly.eval_at(q) == 0
    )
    return Verdict(algebra, k, q, not witnesses, witnesses, CAVEAT)
