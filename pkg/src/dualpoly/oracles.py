"""Brute-force reference implementations.

Nothing here uses the derivative-based evaluation formula or any structural
criterion: values on R[a1..ak] come from Horner's rule with the dual ring's own
multiplication. The tests compare the fast paths against these.
"""

from __future__ import annotations

import numpy as np

from .dual import DualElement, DualRing, dual_add, dual_mul
from .poly import DualPoly, Poly


def horner_dual(f: DualPoly, x: DualElement) -> DualElement:
    """``f(x)`` by Horner's rule in R[a..], one element at a time."""
    dr = x.ring
    acc = dr.element(0)
    for c in reversed(f.dual_coefficients(dr)):
        acc = dual_add(dual_mul(acc, x), c)
    return acc


def horner_base(f: Poly, a: int) -> int:
    ring = f.ring
    acc = 0
    for c in reversed(f.coeffs):
        acc = ring.add(ring.mul(acc, a), c)
    return acc


def naive_dual_table(f, dr: DualRing) -> np.ndarray:
    """Value table of f on every element of R[a..], vectorized Horner over dual tables."""
    if isinstance(f, Poly):
        f = DualPoly.from_base(f, dr.k)
    coeffs = [c.index for c in f.dual_coefficients(dr)]
    pts = np.arange(dr.order)
    acc = np.zeros(dr.order, dtype=np.int64)
    at, mt = dr.add_table, dr.mul_table
    for c in reversed(coeffs):
        acc = at[mt[acc, pts], c]
    return acc


def null_on_dual_exhaustive(f, dr: DualRing) -> bool:
    return not naive_dual_table(f, dr).any()


def perm_on_dual_exhaustive(f, dr: DualRing) -> bool:
    return np.unique(naive_dual_table(f, dr)).size == dr.order


def perm_on_base_exhaustive(f: Poly) -> bool:
    q = f.ring.order
    return len({horner_base(f, a) for a in range(q)}) == q
