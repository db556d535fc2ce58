"""Acceptance criteria, one line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` (or ``python tests/test_acceptance.py``)
to see the PASS/FAIL lines. All tolerances are exact.
"""

import hashlib
import itertools
import json
import sys
import time

import numpy as np
import pytest

from dualpoly.counting import (count, count_functions_enum, count_functions_formula, count_perms_enum,
                               count_perms_formula, derivative_image_of_null, dual_function_tables, field_stab_by_derivative_image,
                               index_N, index_Nprime, index_via_linear, null_quotient_index, polynomial_tables,
                               stab_order, stab_orders)
from dualpoly.dual import DualRing
from dualpoly.null_ideals import (canonical_monic_null_base, canonical_monic_null_dual, is_null_on_dual,
                                  null_coefficients)
from dualpoly.oracles import horner_dual, naive_dual_table
from dualpoly.permutations import construct_pair_field, is_perm_on_dual
from dualpoly.poly import DualPoly, FunctionTable, Poly, decompose, derivative, eval_dualpoly, induce
from dualpoly.rings import build_ring

GF4 = "F_4:x^2+x+1"
RINGS = {}


def R(spec):
    if spec not in RINGS:
        RINGS[spec] = build_ring(spec)
    return RINGS[spec]


def line(n, ok, detail, seconds, expected):
    status = "PASS" if ok else "FAIL"
    return f"[{status}] criterion {n:>2}: {detail} ({seconds:.2f}s, expected < {expected})"


# -- criteria ------------------------------------------------------------------

def criterion_1():
    cases = [("F_2", 1, 8), ("F_2", 2, 32), ("F_3", 1, 1296)]
    got = [(s, k, count_perms_enum(R(s), k), count_perms_formula(R(s), k)) for s, k, _ in cases]
    ok = all(e == f == want for (_, _, e, f), (_, _, want) in zip(got, cases))
    return ok, "field perms " + ", ".join(f"{s}[{k}]={e}/{f}" for s, k, e, f in got), "1 s"


def criterion_2():
    cases = [("F_2", 1, 64), ("F_2", 2, 256), ("F_3", 1, 19683)]
    got = [(s, k, count_functions_enum(R(s), k), count_functions_formula(R(s), k)) for s, k, _ in cases]
    naive = count_functions_enum(R("F_3"), 1, "naive")
    ok = all(e == f == want for (_, _, e, f), (_, _, want) in zip(got, cases)) and naive == 19683
    return ok, "field functions " + ", ".join(f"{s}[{k}]={e}/{f}" for s, k, e, f in got) + \
        f", F_3 naive image={naive}", "10 s"


def criterion_3():
    f2, f3 = stab_order(R("F_2"), 1).order, stab_order(R("F_3"), 1).order
    f4_image = field_stab_by_derivative_image(R(GF4))
    f4_enum = stab_order(R(GF4), 1).order
    indep = {s: stab_orders(R(s), 2) for s in ("F_2", "F_3")}
    ok = (f2, f3, f4_image, f4_enum) == (1, 8, 81, 81) and \
        indep == {"F_2": {1: 1, 2: 1}, "F_3": {1: 8, 2: 8}}
    return ok, (f"|Stab| F_2={f2} F_3={f3} F_4={f4_image} (derivative image), {f4_enum} (x+h tables); "
                f"k=1,2: {indep}"), "30 s"


def criterion_4():
    Z4 = R("Z/4")
    tables = polynomial_tables(Z4, 8, strategy="exhaustive")  # degree < 8: no bound on degree needed
    F = tables.shape[0]
    P = int(sum(len(set(t)) == 4 for t in tables.tolist()))
    stab = stab_order(Z4, 1).order
    nn = null_quotient_index(Z4, method="enumeration")
    dr = DualRing(Z4, 1)
    image = dual_function_tables(dr)
    F_dual = image.shape[0]
    P_dual = int(sum(len(set(t)) == dr.order for t in image.tolist()))
    ok = (F, P, stab) == (64, 8, 4) and P_dual == F * P * stab == 2048 and F_dual == nn * F ** 2 == 16384
    return ok, (f"|F(Z4)|={F} |P(Z4)|={P} |Stab|={stab} [N:N']={nn}; |P(Z4[a])|={P_dual} = {F * P * stab}; "
                f"|F(Z4[a])|={F_dual} = {nn * F ** 2}"), "2 min"


def criterion_5():
    parts, ok = [], True
    for spec in ("F_2", "F_3", "Z/4", "Z/9"):
        ring = R(spec)
        lhs = index_via_linear(ring, True)
        n_idx = index_via_linear(ring, False)
        quot = derivative_image_of_null(ring)
        good = lhs == n_idx * quot
        if spec != "Z/9":
            enum = (index_Nprime(ring, strategy="exhaustive"), index_N(ring, strategy="exhaustive"),
                    null_quotient_index(ring, method="enumeration"))
            good &= enum == (lhs, n_idx, quot)
        ok &= good
        parts.append(f"{spec}: {lhs}={n_idx}*{quot}")
    return ok, "[R[x]:N'] = [R[x]:N][N:N'] " + "; ".join(parts), "1 min"


def _random_poly(rng, ring, deg):
    return Poly(ring, rng.integers(0, ring.order, deg + 1))


def _biased_dual(rng, dr, pool_np, pool_n):
    """A DualPoly that is null on dr about half the time, with perturbations otherwise."""
    base = dr.base
    hd, hb = canonical_monic_null_dual(base), canonical_monic_null_base(base)
    f0 = Poly(base, pool_np[rng.integers(len(pool_np))]) + _random_poly(rng, base, 3) * hd
    parts = [Poly(base, pool_n[rng.integers(len(pool_n))]) + _random_poly(rng, base, 3) * hb
             for _ in range(dr.k)]
    if rng.random() < 0.5:
        slot = rng.integers(dr.k + 1)
        bump = _random_poly(rng, base, 2 * base.order)
        if slot == 0:
            f0 = f0 + bump
        else:
            parts[slot - 1] = parts[slot - 1] + bump
    return DualPoly(f0, tuple(parts))


def _perm_candidate(rng, dr):
    base = dr.base
    q = base.order
    mode = rng.integers(3)
    if mode == 0:
        f0 = _random_poly(rng, base, 2 * q + 2)
    elif mode == 1:  # translate of x plus a null polynomial: permutes R
        f0 = Poly(base, [int(rng.integers(q)), base.one]) + _random_poly(rng, base, 2) * \
            canonical_monic_null_base(base)
    else:
        f0 = Poly(base, [int(rng.integers(q)), int(rng.integers(q)), int(rng.integers(q))])
    parts = tuple(_random_poly(rng, base, q) for _ in range(dr.k))
    return DualPoly(f0, parts)


def _check_case(f, dr):
    table = naive_dual_table(f, dr)
    null_ok = is_null_on_dual(f) == (not table.any())
    perm_ok = is_perm_on_dual(f, dr).is_permutation == (np.unique(table).size == dr.order)
    return null_ok and perm_ok, int(not table.any()), int(np.unique(table).size == dr.order)


def criterion_6(samples=10_000):
    mismatches, details = 0, []
    dr = DualRing(R("F_2"), 1)
    F2 = dr.base
    n_cases = 0
    for c0 in itertools.product(range(2), repeat=4):
        for c1 in itertools.product(range(2), repeat=4):
            f = DualPoly(Poly(F2, c0), (Poly(F2, c1),))
            mismatches += not _check_case(f, dr)[0]
            n_cases += 1
    details.append(f"F_2[a] exhaustive {n_cases}")
    rng = np.random.default_rng(2024)
    for spec, k in (("Z/4", 1), ("F_3", 1), ("Z/4", 2)):
        dr = DualRing(R(spec), k)
        q = dr.base.order
        pool_np = null_coefficients(dr.base, 2 * q, primed=True)
        pool_n = null_coefficients(dr.base, q)
        nulls = perms = 0
        for i in range(samples):
            f = _biased_dual(rng, dr, pool_np, pool_n) if i % 2 == 0 else _perm_candidate(rng, dr)
            ok, is_null, is_perm = _check_case(f, dr)
            mismatches += not ok
            nulls += is_null
            perms += is_perm
        details.append(f"{dr} {samples} random ({nulls} null, {perms} perm)")
    return mismatches == 0, f"{mismatches} mismatches; " + ", ".join(details), "2 min"


def criterion_7():
    parts, ok = [], True
    for spec in ("F_2", "F_3"):
        q = R(spec).order
        nn = null_quotient_index(R(spec), method="enumeration")
        st = stab_order(R(spec), 1).order
        ok &= nn == q ** q and st == (q - 1) ** q
        if q == 3:
            ok &= nn != st
        parts.append(f"{spec}: [N:N']={nn} |Stab|={st}")
    return ok, "; ".join(parts) + " (differ on F_3)", "10 s"


def criterion_8():
    F2 = R("F_2")
    realized = 0
    for F in itertools.product(range(2), repeat=2):
        for G in itertools.product(range(2), repeat=2):
            f = construct_pair_field(FunctionTable(F2, F), FunctionTable(F2, G))
            realized += (f.degree < 4 and tuple(induce(f, F2).tolist()) == F
                         and tuple(induce(derivative(f), F2).tolist()) == G)
    return realized == 16, f"{realized}/16 pairs realized with deg f < 4", "1 s"


def criterion_9(samples=100_000):
    mismatches, checked = 0, 0
    for k in (1, 2):
        dr = DualRing(R("F_2"), k)
        points = [dr.from_index(i) for i in range(dr.order)]
        for coeffs in itertools.product(range(dr.order), repeat=4):  # degree < 2|R| = 4
            f = decompose([dr.from_index(c) for c in coeffs])
            fast = induce(f, dr).values
            for x in points:
                naive = horner_dual(f, x)
                mismatches += eval_dualpoly(f, x) != naive or fast[x.index] != naive.index
                checked += 1
    rng = np.random.default_rng(99)
    dr = DualRing(R("Z/4"), 1)
    per_poly = 10
    for _ in range(samples // per_poly):
        coeffs = rng.integers(0, dr.order, 8)  # degree < 8 over Z_4[a]
        f = decompose([dr.from_index(int(c)) for c in coeffs])
        pts = rng.integers(0, dr.order, per_poly)
        fast = induce(f, dr).values[pts]
        naive = np.zeros(per_poly, dtype=np.int64)
        for c in coeffs[::-1]:  # Horner with the dual ring's own tables
            naive = dr.add_table[dr.mul_table[naive, pts], c]
        mismatches += int((fast != naive).sum())
        checked += per_poly
    for _ in range(2000):  # scalar spot checks of the formula against scalar Horner
        f = decompose([dr.from_index(int(c)) for c in rng.integers(0, dr.order, 8)])
        x = dr.from_index(int(rng.integers(dr.order)))
        mismatches += eval_dualpoly(f, x) != horner_dual(f, x)
        checked += 1
    return mismatches == 0, f"{mismatches} mismatches in {checked} (poly, point) pairs", "1 min"


def _enumeration_reports(workers):
    reports = []
    for spec, k in (("F_2", 1), ("F_3", 1), ("Z/4", 1), (GF4, 1)):
        for quantity in ("functions", "perms", "stab"):
            reports.append(count(R(spec), k, quantity, "enum", workers=workers).to_dict(timings=False))
    Z4 = R("Z/4")
    reports.append(null_coefficients(Z4, 8, workers=workers).tolist())
    reports.append(polynomial_tables(R(GF4), 8, primed=True, strategy="exhaustive", workers=workers).tolist())
    reports.append(stab_order(R(GF4), 1, strategy="exhaustive", workers=workers).order)
    return json.dumps(reports, sort_keys=True).encode()


def criterion_10():
    one, four = _enumeration_reports(1), _enumeration_reports(4)
    digest = hashlib.sha256(one).hexdigest()[:12]
    return one == four, f"1-worker vs 4-worker reports byte-identical ({len(one)} bytes, sha256 {digest})", "1 min"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10]


def run_criterion(n):
    t = time.perf_counter()
    ok, detail, expected = CRITERIA[n - 1]()
    return ok, line(n, ok, detail, time.perf_counter() - t, expected)


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, text = run_criterion(n)
    with capsys.disabled():
        print("\n" + text)
    assert ok, text


if __name__ == "__main__":
    results = [run_criterion(n) for n in range(1, 11)]
    for _, text in results:
        print(text)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
