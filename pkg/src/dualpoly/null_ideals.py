"""Null polynomials on R and on R[a1..ak].

``N`` is the ideal of polynomials vanishing on R; ``N'`` the sub-ideal whose
derivatives vanish too. Membership is decided by evaluating at every element.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .enumeration import DEFAULT_BUDGET, derivative_block, evaluate_block, map_chunks, power_tables
from .errors import RingMismatchError
from .poly import DualPoly, FunctionTable, Poly, derivative, pair_table
from .rings import FiniteRing


def in_N(f: Poly) -> bool:
    return not f.values().any()


def in_Nprime(f: Poly) -> bool:
    return in_N(f) and in_N(derivative(f))


def is_null_on_dual(f: DualPoly) -> bool:
    """Null on R[a1..ak] iff f0 is in N' and every f_i is in N."""
    return in_Nprime(f.f0) and all(in_N(p) for p in f.parts)


def same_function(f: DualPoly, g: DualPoly) -> bool:
    if f.ring != g.ring or f.k != g.k:
        raise RingMismatchError("polynomials over different dual rings")
    return is_null_on_dual(f - g)


def class_key(f: DualPoly) -> tuple:
    """``(([f0], [f0']), [f1], ..., [fk])``: equal exactly when f and g agree on R[a1..ak]."""
    return (pair_table(f.f0),) + tuple(FunctionTable(p.ring, p.values()) for p in f.parts)


def canonical_monic_null_base(ring: FiniteRing) -> Poly:
    """``prod_{r in R} (x - r)``: monic of degree |R|, null on R."""
    return Poly.from_roots(ring, range(ring.order))


def canonical_monic_null_dual(ring: FiniteRing) -> Poly:
    """``prod_{r in R} (x - r)^2``: monic of degree 2|R|, null on every R[a1..ak]."""
    return Poly.from_roots(ring, range(ring.order), multiplicity=2)


def reduce_representative(f: DualPoly) -> DualPoly:
    """Equivalent representative with deg f0 < 2|R| and deg f_i < |R|."""
    h_dual = canonical_monic_null_dual(f.ring)
    h_base = canonical_monic_null_base(f.ring)
    return DualPoly(f.f0.divmod_monic(h_dual)[1],
                    tuple(p.divmod_monic(h_base)[1] for p in f.parts))


@dataclass(frozen=True)
class BoundedNullSets:
    """Members of N_n (null, degree < n) and N'_n (also null derivative)."""

    n: int
    null: tuple
    primed_null: tuple = None

    @property
    def sizes(self):
        return {"N": len(self.null), "N_prime": None if self.primed_null is None else len(self.primed_null)}


def null_coefficients(ring: FiniteRing, n: int, *, primed: bool = False, workers: int = 1,
                      budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Coefficient rows (degree < n) of every member of N_n, or of N'_n when ``primed``."""
    powers = power_tables(ring.mul_table, ring.one, n)

    def chunk(C):
        keep = ~evaluate_block(ring.add_table, ring.mul_table, C, powers).any(axis=1)
        if primed:
            D = derivative_block(ring, C[keep])
            sub = ~evaluate_block(ring.add_table, ring.mul_table, D, powers).any(axis=1)
            keep[np.nonzero(keep)[0][~sub]] = False
        return C[keep]

    parts = map_chunks(ring.order, n, chunk, workers=workers, budget=budget,
                       what=f"null polynomials of degree < {n} over {ring}")
    return np.concatenate(parts) if parts else np.zeros((0, n), dtype=np.int64)


def enumerate_bounded_null(ring: FiniteRing, n: int, primed: bool = True, *, workers: int = 1,
                           budget: int = DEFAULT_BUDGET) -> BoundedNullSets:
    rows = null_coefficients(ring, n, workers=workers, budget=budget)
    null = tuple(Poly(ring, r) for r in rows)
    primed_null = None
    if primed:
        primed_null = tuple(f for f in null if in_N(derivative(f)))
    return BoundedNullSets(n, null, primed_null)
