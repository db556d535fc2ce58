"""Exhaustive enumeration of coefficient spaces and value-table images.

Coefficient vectors of degree < n over a ring of order q are numbered
``0 .. q**n - 1`` (mixed radix, constant term least significant). The range
is cut into fixed-size contiguous chunks; chunks may be processed by a thread
pool but results are always merged in chunk order, so the output does not
depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from .errors import BudgetExceeded

DEFAULT_BUDGET = 1 << 24
CHUNK = 1 << 14


def check_budget(count: int, budget: int, what: str):
    if budget is not None and count > budget:
        raise BudgetExceeded(f"{what}: {count} candidates exceed budget {budget}")


def coefficient_block(q: int, n: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, n), dtype=np.int64)
    for j in range(n):
        out[:, j] = idx % q
        idx = idx // q
    return out


def map_chunks(q: int, n: int, fn: Callable[[np.ndarray], object], *, workers: int = 1,
               budget: int = DEFAULT_BUDGET, chunk: int = CHUNK, what: str = "enumeration") -> list:
    """Apply ``fn`` to every chunk of the coefficient space; results in chunk order."""
    total = q ** n
    check_budget(total, budget, what)
    bounds = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]

    def run(b):
        return fn(coefficient_block(q, n, *b))

    if workers <= 1 or len(bounds) == 1:
        return [run(b) for b in bounds]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, bounds))


def unique_rows(a: np.ndarray, radix: int) -> np.ndarray:
    """Sorted unique rows of a non-negative integer matrix with entries < radix."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    if a.shape[0] == 0:
        return a
    width = a.shape[1]
    if width * max(radix - 1, 1).bit_length() <= 62:
        code = np.zeros(a.shape[0], dtype=np.int64)
        for j in range(width):
            code = code * radix + a[:, j]
        _, first = np.unique(code, return_index=True)
        return a[first]
    return np.unique(a, axis=0)


def power_tables(mul_table: np.ndarray, one: int, n: int) -> np.ndarray:
    """Rows j = 0..n-1: value of x**j at every element of the ring given by ``mul_table``."""
    order = mul_table.shape[0]
    pts = np.arange(order)
    out = np.empty((n, order), dtype=np.int64)
    if n:
        out[0] = one
    for j in range(1, n):
        out[j] = mul_table[out[j - 1], pts]
    return out


def evaluate_block(add_table, mul_table, coeffs: np.ndarray, powers: np.ndarray) -> np.ndarray:
    """Value tables of every coefficient row: ``sum_j c_j * x^j`` at every point."""
    vals = np.zeros((coeffs.shape[0], powers.shape[1]), dtype=np.int64)
    for j in range(coeffs.shape[1]):
        vals = add_table[vals, mul_table[coeffs[:, j, None], powers[j][None, :]]]
    return vals


def derivative_block(ring, coeffs: np.ndarray) -> np.ndarray:
    """Coefficient rows of the formal derivatives (same width, top slot zero)."""
    out = np.zeros_like(coeffs)
    for j in range(1, coeffs.shape[1]):
        out[:, j - 1] = ring.mul_table[ring.from_int(j), coeffs[:, j]]
    return out


def sum_image(add_table: np.ndarray, contributions: list, radix: int,
              budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """All distinct sums ``c_0 + c_1 + ...`` with ``c_j`` drawn from ``contributions[j]``.

    Each contribution set is an array of rows; addition is columnwise through
    ``add_table``. Intermediate sets are deduplicated, so the cost tracks the
    size of the image rather than the number of coefficient vectors.
    """
    width = contributions[0].shape[1]
    current = np.zeros((1, width), dtype=np.int64)
    for contrib in contributions:
        check_budget(current.shape[0] * contrib.shape[0], budget, "sum image")
        summed = add_table[current[:, None, :], contrib[None, :, :]].reshape(-1, width)
        current = unique_rows(summed, radix)
    return current
