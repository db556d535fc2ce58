import numpy as np
import pytest

from dualpoly.errors import PreconditionError, RingMismatchError
from dualpoly.null_ideals import null_coefficients
from dualpoly.oracles import perm_on_base_exhaustive, perm_on_dual_exhaustive
from dualpoly.permutations import (check_witness, construct_pair_field, interpolate, is_perm, is_perm_directsum,
                                   is_perm_dual_nonfield, is_perm_local, is_perm_on_base, is_perm_on_dual)
from dualpoly.poly import DualPoly, FunctionTable, Poly, derivative, induce, parse_poly


def test_base_examples(ring):
    assert is_perm_on_base(Poly.x(ring("Z/4")))
    v = is_perm_on_base(parse_poly("x^2", ring("F_3")))
    assert not v and v.witness.collision == (1, 2)
    assert is_perm_on_base(parse_poly("x^3", ring("F_2")))


def test_local(ring):
    Z4 = ring("Z/4")
    for text in ["x^3", "x+2x^2", "x^2", "3x+1", "x^3+2x"]:
        f = parse_poly(text, Z4)
        v = is_perm_local(f)
        assert v.is_permutation == perm_on_base_exhaustive(f)
        assert check_witness(f, v)
    assert not is_perm_local(parse_poly("x^3", Z4))
    assert is_perm_local(parse_poly("x+2x^2", Z4))
    assert is_perm_local(Poly.x(ring("Z/9")))
    with pytest.raises(PreconditionError):
        is_perm_local(Poly.x(ring("F_3")))


def test_directsum(ring):
    R = ring("Z/4 (+) Z/9")
    assert is_perm_directsum(Poly.x(R))
    assert is_perm_directsum(Poly(R, [R.from_int(2), R.one]))
    sq = Poly(R, [0, R.from_components((1, 0)), R.from_components((0, 1))])  # x in Z_4 slot, x^2 in Z_9 slot
    v = is_perm_directsum(sq)
    assert not v and v.criterion_path.startswith("directsum[1]")
    assert check_witness(sq, v)
    assert not perm_on_base_exhaustive(sq)


def test_dual_examples(dual):
    F3a = dual("F_3")
    f = DualPoly.from_base(parse_poly("x^3", F3a.base), 1)
    v = is_perm_on_dual(f)
    assert not v and v.witness.kind == "nonunit_derivative" and v.witness.point == 0
    assert check_witness(f, v, F3a)
    F2 = dual("F_2").base
    h = parse_poly("x^2+x", F2)
    assert is_perm_on_dual(DualPoly.from_base(Poly.x(F2) + h * h, 1))
    Z4 = dual("Z/4").base
    assert is_perm_on_dual(DualPoly(Poly.x(Z4), (parse_poly("3x^3+x+2", Z4),)))


def test_nonfield(dual, ring):
    Z4 = ring("Z/4")
    for text in ["x+2x^2", "3x+1", "x^3"]:
        f = parse_poly(text, Z4)
        v = is_perm_dual_nonfield(f, dual("Z/4"))
        assert v.is_permutation == perm_on_base_exhaustive(f)
        assert v.is_permutation == perm_on_dual_exhaustive(f, dual("Z/4"))
    for row in null_coefficients(Z4, 8)[:64]:
        f = Poly.x(Z4) + Poly(Z4, row)
        assert is_perm_dual_nonfield(f, dual("Z/4"))
    with pytest.raises(PreconditionError):
        is_perm_dual_nonfield(Poly.x(ring("F_2")), dual("F_2"))
    with pytest.raises(PreconditionError):
        is_perm_dual_nonfield(Poly.x(ring("F_2 (+) Z/4")), dual("F_2 (+) Z/4"))


def test_dispatch(ring, dual):
    assert is_perm(Poly.x(ring("Z/4 (+) Z/9"))).criterion_path == "directsum"
    assert is_perm(Poly.x(ring("F_3"))).criterion_path == "exhaustive"
    assert is_perm(Poly.x(ring("Z/4")), dual("Z/4")).criterion_path == "f0-permutes+unit-derivative"
    with pytest.raises(RingMismatchError):
        is_perm_on_dual(DualPoly.from_base(Poly.x(ring("Z/4")), 2), dual("Z/4"))


def test_witness_collisions_dual(dual):
    dr = dual("Z/4", 2)
    rng = np.random.default_rng(5)
    for _ in range(200):
        parts = [Poly(dr.base, rng.integers(0, 4, 5)) for _ in range(3)]
        f = DualPoly(parts[0], tuple(parts[1:]))
        v = is_perm_on_dual(f)
        if not v:
            assert check_witness(f, v, dr)


def test_interpolate(ring):
    F4 = ring("F_4:x^2+x+1")
    vals = [3, 0, 2, 2]
    f = interpolate(F4, vals)
    assert f.degree < 4 and induce(f, F4).tolist() == vals


def test_pair_examples(ring):
    F2 = ring("F_2")
    f = construct_pair_field(FunctionTable(F2, [0, 1]), FunctionTable(F2, [1, 1]))
    assert f.degree < 4
    assert induce(f, F2).tolist() == [0, 1] and induce(derivative(f), F2).tolist() == [1, 1]
    F3 = ring("F_3")
    f = construct_pair_field(FunctionTable(F3, [0, 1, 2]), FunctionTable(F3, [2, 2, 2]))
    assert induce(f, F3).tolist() == [0, 1, 2] and induce(derivative(f), F3).tolist() == [2, 2, 2]
    with pytest.raises(PreconditionError):
        construct_pair_field(FunctionTable(ring("Z/4"), [0, 1, 2, 3]), FunctionTable(ring("Z/4"), [0] * 4))


def test_pair_all_F3(ring):
    import itertools
    F3 = ring("F_3")
    for F in itertools.product(range(3), repeat=3):
        G = (F[2], F[0], F[1])
        f = construct_pair_field(FunctionTable(F3, F), FunctionTable(F3, G))
        assert f.degree < 6
        assert tuple(induce(f, F3).tolist()) == F and tuple(induce(derivative(f), F3).tolist()) == G
