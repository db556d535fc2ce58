"""Row spans and kernels of matrices over finite chain rings (Z/p^n and GF(q)).

Every ideal of a chain ring is principal and the ideals are totally ordered,
so a pivot with the largest principal ideal divides every other entry of the
remaining submatrix. Elimination then yields a triangular system whose span
has order ``prod |pivot * R|`` and whose left kernel is generated by
``ann(pivot)`` multiples of the transformed basis vectors.

All arithmetic goes through the ring's add/mul tables, so the same code serves
Z/p^n and GF(p^e).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import PreconditionError
from .rings import FiniteRing


def _ideal_sizes(ring: FiniteRing) -> np.ndarray:
    mt = ring.mul_table
    return np.array([np.unique(mt[a]).size for a in range(ring.order)])


@dataclass
class LinearSystem:
    """Rows are generator vectors over ``ring``; the span is their R-submodule."""

    ring: FiniteRing
    matrix: np.ndarray

    def __post_init__(self):
        if not self.ring.is_local:
            raise PreconditionError("linear algebra needs a chain ring; split direct sums first")
        self.matrix = np.asarray(self.matrix, dtype=np.int64).reshape(len(self.matrix), -1)

    def _eliminate(self, track: bool):
        ring = self.ring
        at, mt, nt = ring.add_table, ring.mul_table, ring.neg_table
        sizes = _ideal_sizes(ring)
        T = self.matrix.copy()
        rows, cols = T.shape
        U = np.zeros((rows, rows), dtype=np.int64)
        U[np.arange(rows), np.arange(rows)] = ring.one
        free_rows = list(range(rows))
        free_cols = list(range(cols))
        pivots = []
        while free_rows and free_cols:
            sub = T[np.ix_(free_rows, free_cols)]
            score = sizes[sub]
            r, c = np.unravel_index(np.argmax(score), score.shape)
            if score[r, c] == 1:  # only zeros left
                break
            p, j = free_rows[r], free_cols[c]
            a = T[p, j]
            # quotient lookup: quot[b] * a == b for every b in the ideal (a)
            quot = np.full(ring.order, -1, dtype=np.int64)
            quot[mt[::-1, a]] = np.arange(ring.order)[::-1]
            for other in free_rows:
                if other == p or T[other, j] == 0:
                    continue
                c_r = quot[T[other, j]]
                T[other] = at[T[other], nt[mt[c_r, T[p]]]]
                if track:
                    U[other] = at[U[other], nt[mt[c_r, U[p]]]]
            pivots.append((p, int(a)))
            free_rows.remove(p)
            free_cols.remove(j)
        return T, U, pivots, free_rows

    def span_order(self) -> int:
        """Number of elements in the R-span of the rows."""
        sizes = _ideal_sizes(self.ring)
        _, _, pivots, _ = self._eliminate(track=False)
        return reduce(lambda acc, pa: acc * int(sizes[pa[1]]), pivots, 1)

    def kernel_generators(self) -> np.ndarray:
        """Generators of ``{x : x @ matrix = 0}`` as rows over the ring."""
        ring = self.ring
        mt = ring.mul_table
        sizes = _ideal_sizes(ring)
        _, U, pivots, zero_rows = self._eliminate(track=True)
        gens = [U[r] for r in zero_rows]
        for p, a in pivots:
            ann = np.nonzero(mt[:, a] == 0)[0]
            t = ann[np.argmax(sizes[ann])]
            if t:
                gens.append(mt[t, U[p]])
        if not gens:
            return np.zeros((0, self.matrix.shape[0]), dtype=np.int64)
        return np.array(gens, dtype=np.int64)
