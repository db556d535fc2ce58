import numpy as np
import pytest

from dualpoly.enumeration import (coefficient_block, derivative_block, evaluate_block, map_chunks, power_tables,
                                  sum_image, unique_rows)
from dualpoly.errors import BudgetExceeded
from dualpoly.poly import Poly


def test_coefficient_block_order():
    block = coefficient_block(3, 2, 0, 9)
    assert block.tolist()[:4] == [[0, 0], [1, 0], [2, 0], [0, 1]]
    assert len({tuple(r) for r in block.tolist()}) == 9


def test_map_chunks_order_and_budget():
    out = map_chunks(2, 10, lambda C: C[:, 0].sum(), workers=3, chunk=100)
    assert len(out) == 11 and sum(out) == 512
    with pytest.raises(BudgetExceeded):
        map_chunks(4, 20, len, budget=1000)


def test_unique_rows_wide_and_narrow():
    rng = np.random.default_rng(0)
    a = rng.integers(0, 3, (500, 4))
    assert (unique_rows(a, 3) == np.unique(a, axis=0)).all()
    wide = rng.integers(0, 1000, (200, 10))  # too wide to pack into int64
    wide = np.concatenate([wide, wide[:50]])
    assert unique_rows(wide, 1000).shape[0] == 200


def test_evaluate_and_derivative_blocks(ring):
    Z9 = ring("Z/9")
    rng = np.random.default_rng(3)
    C = rng.integers(0, 9, (20, 6))
    powers = power_tables(Z9.mul_table, Z9.one, 6)
    vals = evaluate_block(Z9.add_table, Z9.mul_table, C, powers)
    ders = derivative_block(Z9, C)
    for row, v, d in zip(C, vals, ders):
        f = Poly(Z9, row)
        assert (f.values() == v).all()
        assert Poly(Z9, d) == f.derivative()


def test_sum_image(ring):
    F2 = ring("F_2")
    contrib = [np.array([[0, 0], [1, 1]]), np.array([[0, 0], [0, 1]])]
    assert sum_image(F2.add_table, contrib, 2).tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
    with pytest.raises(BudgetExceeded):
        sum_image(F2.add_table, contrib, 2, budget=1)
