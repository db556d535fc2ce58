import numpy as np
import pytest

from dualpoly.errors import NotAUnitError, NotLocalError, RingSpecError
from dualpoly.rings import (DirectSum, GaloisField, ZModPrimePower, build_ring, is_irreducible_mod_p,
                            is_suitable, local_structure, parse_ring_spec)

SPECS = ["Z/2", "Z/4", "Z/8", "Z/9", "Z/27", "F_3", "F_4:x^2+x+1", "F_9:x^2+1", "Z/4 (+) Z/9",
         "F_2 (+) Z/4"]


@pytest.mark.parametrize("text, spec", [
    ("Z/4", ZModPrimePower(2, 2)),
    ("F_3", GaloisField(3, 1, (0, 1))),
    ("F_4:x^2+x+1", GaloisField(2, 2, (1, 1, 1))),
    ("F_9:x^2+1", GaloisField(3, 2, (1, 0, 1))),
    ("Z/4 (+) Z/9", DirectSum((ZModPrimePower(2, 2), ZModPrimePower(3, 2)))),
])
def test_parse_spec(text, spec):
    assert parse_ring_spec(text) == spec
    assert str(spec) == text


@pytest.mark.parametrize("bad", ["Z/6", "Z/1", "F_4", "F_4:x^2+1", "F_6:x+1", "Q", "Z/4 (+)", ""])
def test_parse_spec_rejects(bad):
    with pytest.raises(RingSpecError):
        parse_ring_spec(bad)


def test_irreducibility():
    assert is_irreducible_mod_p((1, 1, 1), 2)
    assert not is_irreducible_mod_p((1, 0, 1), 2)  # (x+1)^2
    assert is_irreducible_mod_p((1, 0, 1), 3)


@pytest.mark.parametrize("spec", SPECS)
def test_ring_axioms(ring, spec):
    R = ring(spec)
    a, m = R.add_table, R.mul_table
    idx = np.arange(R.order)
    assert (a == a.T).all() and (m == m.T).all()
    assert (a[0] == idx).all() and (m[R.one] == idx).all()
    assert (a[idx, R.neg_table] == 0).all()
    # associativity and distributivity on a sample of triples
    rng = np.random.default_rng(0)
    x, y, z = rng.integers(0, R.order, (3, 500))
    assert (a[a[x, y], z] == a[x, a[y, z]]).all()
    assert (m[m[x, y], z] == m[x, m[y, z]]).all()
    assert (m[x, a[y, z]] == a[m[x, y], m[x, z]]).all()


def test_orders(ring):
    assert ring("Z/4").order == 4
    gf4 = ring("F_4:x^2+x+1")
    assert gf4.order == 4 and gf4.is_field
    ds = ring("Z/4 (+) Z/9")
    assert ds.order == 36 and not ds.is_local


def test_units(ring):
    Z4 = ring("Z/4")
    three = Z4.element(3)
    assert three.is_unit() and three.inverse() == 3
    assert not Z4.element(2).is_unit()
    with pytest.raises(NotAUnitError):
        Z4.element(2).inverse()


def test_direct_sum_units(ring):
    R = ring("Z/4 (+) Z/9")
    # (1,3): 3 is nilpotent mod 9
    with pytest.raises(NotAUnitError):
        R.element((1, 3)).inverse()
    inv = R.element((1, 2)).inverse()
    assert R.components(inv.index) == (1, 5)
    Z4, Z9 = R.summands
    for u in R.units:
        c = R.components(u)
        assert R.components(R.inverse(u)) == (Z4.inverse(c[0]), Z9.inverse(c[1]))


def test_field_units(ring):
    for spec in ["F_3", "F_4:x^2+x+1", "F_9:x^2+1"]:
        R = ring(spec)
        assert len(R.units) == R.order - 1


def test_local_structure(ring):
    ls = local_structure(ring("Z/4"))
    assert ls.maximal_ideal == frozenset({0, 2}) and ls.nilpotency == 2
    ls = local_structure(ring("F_4:x^2+x+1"))
    assert ls.maximal_ideal == frozenset({0}) and ls.nilpotency == 1
    ls = local_structure(ring("Z/27"))
    assert ls.nilpotency == 3 and ls.residue_order == 3
    with pytest.raises(NotLocalError):
        local_structure(ring("Z/4 (+) Z/9"))


def test_suitable(ring, dual):
    assert is_suitable(ring("Z/4"))
    assert is_suitable(dual("F_2"))
    assert not is_suitable(dual("Z/4"))
    assert is_suitable(dual("F_3", 2))
    with pytest.raises(NotLocalError):
        is_suitable(ring("Z/4 (+) Z/9"))


def test_literals(ring):
    F9 = ring("F_9:x^2+1")
    i = F9.parse_element("[0,1]")
    assert F9.mul(i, i) == F9.from_int(2)  # i^2 = -1
    assert F9.format_element(i) == "[0,1]"
    R = ring("Z/4 (+) Z/9")
    assert R.format_element(R.parse_element("(3,7)")) == "(3,7)"


def test_characteristic(ring):
    assert ring("Z/4 (+) Z/9").characteristic == 36
    assert ring("F_9:x^2+1").characteristic == 3


def test_order_limit():
    with pytest.raises(RingSpecError):
        build_ring("Z/4096")
