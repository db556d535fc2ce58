"""Counting polynomial functions, permutations and the stabilizer on R[a1..ak].

Two independent families of routines are provided for each quantity:

* ``*_enum``: brute force over equivalence-class representatives, or over the
  full image of the evaluation map on R[a1..ak] (``method="naive"``).
* ``*_formula``: closed forms for fields, otherwise the index assembly
  ``|F| = [R[x]:N'] [R[x]:N]^k`` and ``|P| = |F(R)|^k |P(R)| |Stab|`` with the
  indices taken from chain-ring linear algebra.

Representatives are bounded by the monic null polynomials
``prod (x-r)`` (degree |R|, null on R) and ``prod (x-r)^2`` (degree 2|R|,
null on every R[a1..ak]); the set sizes below are therefore exact.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import reduce
from typing import Optional

import numpy as np

from .dual import DualRing
from .enumeration import (DEFAULT_BUDGET, check_budget, derivative_block, evaluate_block, map_chunks,
                          power_tables, sum_image, unique_rows)
from .errors import BudgetExceeded, PreconditionError
from .linear import LinearSystem
from .null_ideals import null_coefficients
from .rings import FiniteRing

METHODS = ("enumeration", "field_formula", "index_formula")
EXHAUSTIVE_LIMIT = 1 << 20  # above this many coefficient vectors, "auto" prefers the image strategy


@dataclass(frozen=True)
class StabResult:
    order: int
    method: str
    derivative_image_size: Optional[int] = None


@dataclass
class CountReport:
    ring: str
    k: int
    quantity: str
    formula_value: Optional[int] = None
    oracle_value: Optional[int] = None
    seconds: dict = field(default_factory=dict)
    note: str = ""
    skipped: Optional[str] = None

    @property
    def match(self) -> Optional[bool]:
        if self.formula_value is None or self.oracle_value is None:
            return None
        return self.formula_value == self.oracle_value

    def to_dict(self, timings: bool = True) -> dict:
        d = {
            "ring": self.ring,
            "k": self.k,
            "quantity": self.quantity,
            "formula": None if self.formula_value is None else str(self.formula_value),
            "enum": None if self.oracle_value is None else str(self.oracle_value),
            "match": self.match,
        }
        if self.skipped:
            d["enum"] = f"skipped:{self.skipped}"
        if self.note:
            d["note"] = self.note
        if timings:
            d["seconds"] = {k: round(v, 6) for k, v in self.seconds.items()}
        return d


def _components(ring: FiniteRing):
    return ring.summands or (ring,)


def _product(values):
    return reduce(lambda a, b: a * b, values, 1)


# -- table images over R -----------------------------------------------------

def _pair_rows(ring: FiniteRing, coeffs: np.ndarray, powers: np.ndarray) -> np.ndarray:
    at, mt = ring.add_table, ring.mul_table
    vals = evaluate_block(at, mt, coeffs, powers)
    ders = evaluate_block(at, mt, derivative_block(ring, coeffs), powers)
    return np.concatenate([vals, ders], axis=1)


def _monomial_contributions(ring: FiniteRing, n: int, primed: bool) -> list:
    """Per degree j: every ``c * x^j`` table (and ``c * j x^(j-1)`` when primed)."""
    q = ring.order
    mt = ring.mul_table
    powers = power_tables(mt, ring.one, n)
    coeff = np.arange(q)
    out = []
    for j in range(n):
        vals = mt[coeff[:, None], powers[j][None, :]]
        if primed:
            if j:
                dj = ring.mul_table[ring.from_int(j), coeff]
                der = mt[dj[:, None], powers[j - 1][None, :]]
            else:
                der = np.zeros_like(vals)
            vals = np.concatenate([vals, der], axis=1)
        out.append(vals)
    return out


def polynomial_tables(ring: FiniteRing, n: int, *, primed: bool = False, strategy: str = "auto",
                      workers: int = 1, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Distinct tables ``[f]`` (or pairs ``([f],[f'])``) over every f of degree < n.

    ``exhaustive`` evaluates all q**n coefficient vectors in chunks;
    ``image`` accumulates the additive image degree by degree. ``auto``
    picks exhaustive when it fits the budget.
    """
    q = ring.order
    if strategy == "auto":
        strategy = "exhaustive" if q ** n <= min(budget, EXHAUSTIVE_LIMIT) else "image"
    if strategy == "image":
        # partial sums are tables of lower-degree polynomials, so every intermediate
        # set lies inside the final image; its size bounds the work up front
        bound = _product(_monomial_system(c, n, primed).span_order() for c in _components(ring))
        check_budget(bound * q, budget, f"table image of degree < {n} over {ring}")
        return sum_image(ring.add_table, _monomial_contributions(ring, n, primed), q, budget)
    powers = power_tables(ring.mul_table, ring.one, n)

    def chunk(C):
        rows = _pair_rows(ring, C, powers) if primed else \
            evaluate_block(ring.add_table, ring.mul_table, C, powers)
        return unique_rows(rows, q)

    parts = map_chunks(q, n, chunk, workers=workers, budget=budget,
                       what=f"polynomials of degree < {n} over {ring}")
    return unique_rows(np.concatenate(parts), q)


def index_N(ring: FiniteRing, **kw) -> int:
    """``[R[x]:N]`` = number of polynomial functions on R (degree < |R| suffices)."""
    return _product(polynomial_tables(c, c.order, **kw).shape[0] for c in _components(ring))


def index_Nprime(ring: FiniteRing, **kw) -> int:
    """``[R[x]:N']`` = number of pairs ``([f],[f'])`` (degree < 2|R| suffices)."""
    return _product(polynomial_tables(c, 2 * c.order, primed=True, **kw).shape[0]
                    for c in _components(ring))


def _monomial_system(ring: FiniteRing, n: int, primed: bool) -> LinearSystem:
    rows = [c[ring.one] for c in _monomial_contributions(ring, n, primed)]
    return LinearSystem(ring, np.array(rows))


def index_via_linear(ring: FiniteRing, primed: bool) -> int:
    """Order of the span of monomial tables (pairs when ``primed``), per summand."""
    total = 1
    for c in _components(ring):
        n = 2 * c.order if primed else c.order
        total *= _monomial_system(c, n, primed).span_order()
    return total


def bounded_null_sizes(ring: FiniteRing, n: int, *, method: str = "auto",
                       workers: int = 1, budget: int = DEFAULT_BUDGET):
    """``(|N_n|, |N'_n|)`` by explicit filtering or as kernel sizes ``q^n / |image|``."""
    sizes_N, sizes_Np = [], []
    for c in _components(ring):
        q = c.order
        use_enum = method == "enumeration" or (method == "auto" and q ** n <= min(budget, EXHAUSTIVE_LIMIT))
        if use_enum:
            sizes_N.append(null_coefficients(c, n, workers=workers, budget=budget).shape[0])
            sizes_Np.append(null_coefficients(c, n, primed=True, workers=workers, budget=budget).shape[0])
        else:
            sizes_N.append(q ** n // _monomial_system(c, n, False).span_order())
            sizes_Np.append(q ** n // _monomial_system(c, n, True).span_order())
    return _product(sizes_N), _product(sizes_Np)


def null_quotient_index(ring: FiniteRing, **kw) -> int:
    """``[N:N'] = |N_n| / |N'_n|`` with n = 2|R|."""
    if ring.summands:
        return _product(null_quotient_index(c, **kw) for c in ring.summands)
    nN, nNp = bounded_null_sizes(ring, 2 * ring.order, **kw)
    if nN % nNp:
        raise ArithmeticError("N'_n does not divide N_n")
    return nN // nNp


def derivative_image_of_null(ring: FiniteRing) -> int:
    """``|{[h'] : h in N}|`` from kernel generators of the degree < 2|R| evaluation map."""
    total = 1
    for c in _components(ring):
        n = 2 * c.order
        system = _monomial_system(c, n, False)
        gens = system.kernel_generators()
        if gens.shape[0] == 0:
            continue
        powers = power_tables(c.mul_table, c.one, n)
        ders = evaluate_block(c.add_table, c.mul_table, derivative_block(c, gens), powers)
        total *= LinearSystem(c, ders).span_order()
    return total


# -- functions on R[a1..ak] ----------------------------------------------------

def dual_power_tables(dr: DualRing, n: int) -> np.ndarray:
    """``x^j`` on every element of R[a..], by repeated multiplication in the dual ring."""
    return power_tables(dr.mul_table, dr.one, n)


def dual_function_tables(dr: DualRing, *, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Every polynomial function on R[a..] as a table, from dual-ring arithmetic alone.

    Coefficients range over all of R[a..] and degrees below 2|R|.
    """
    n = 2 * dr.base.order
    powers = dual_power_tables(dr, n)
    coeff = np.arange(dr.order)
    contributions = [dr.mul_table[coeff[:, None], powers[j][None, :]] for j in range(n)]
    return sum_image(dr.add_table, contributions, dr.order, budget)


def count_functions_enum(ring: FiniteRing, k: int, method: str = "classes", *,
                         strategy: str = "auto", workers: int = 1, budget: int = DEFAULT_BUDGET) -> int:
    """Distinct polynomial functions on R[a1..ak].

    ``classes``: distinct ``([f0],[f0'])`` times distinct ``[f_i]`` to the k.
    ``naive``: size of the full image of the evaluation map on R[a1..ak].
    """
    if method == "naive":
        return dual_function_tables(DualRing(ring, k), budget=budget).shape[0]
    kw = dict(strategy=strategy, workers=workers, budget=budget)
    return index_Nprime(ring, **kw) * index_N(ring, **kw) ** k


def count_functions_formula(ring: FiniteRing, k: int) -> int:
    if ring.is_field:
        q = ring.order
        return q ** ((k + 2) * q)
    return index_via_linear(ring, primed=True) * index_via_linear(ring, primed=False) ** k


# -- permutations and the stabilizer -------------------------------------------

def _bijective_rows(rows: np.ndarray) -> np.ndarray:
    s = np.sort(rows, axis=1)
    return (np.diff(s, axis=1) != 0).all(axis=1)


def count_perms_base(ring: FiniteRing, **kw) -> int:
    """``|P(R)|`` by exhaustive search over the polynomial functions of R."""
    total = 1
    for c in _components(ring):
        tables = polynomial_tables(c, c.order, **kw)
        total *= int(_bijective_rows(tables).sum())
    return total


def unit_pairs_count(ring: FiniteRing, **kw) -> int:
    """B: pairs ``([f],[f'])`` with [f] bijective and [f'] unit-valued."""
    total = 1
    for c in _components(ring):
        q = c.order
        pairs = polynomial_tables(c, 2 * q, primed=True, **kw)
        ok = _bijective_rows(pairs[:, :q]) & c.unit_mask[pairs[:, q:]].all(axis=1)
        total *= int(ok.sum())
    return total


def count_perms_enum(ring: FiniteRing, k: int, method: str = "classes", *,
                     strategy: str = "auto", workers: int = 1, budget: int = DEFAULT_BUDGET) -> int:
    if method == "naive":
        tables = dual_function_tables(DualRing(ring, k), budget=budget)
        return int(_bijective_rows(tables).sum())
    kw = dict(strategy=strategy, workers=workers, budget=budget)
    return unit_pairs_count(ring, **kw) * index_N(ring, **kw) ** k


def _nonfield_sum(ring: FiniteRing) -> bool:
    return not any(c.is_field for c in _components(ring))


def _stab_tables(dr: DualRing, ders: np.ndarray) -> np.ndarray:
    """Tables of ``x + h`` on R[a..] for null h with the given derivative tables."""
    base = dr.base
    q = base.order
    c = dr.coordinates
    one_plus = base.add_table[base.one, ders]  # (x + h)' = 1 + h'
    out = np.broadcast_to(c[:, 0], (ders.shape[0], dr.order)).copy()
    for i in range(1, dr.k + 1):
        out += base.mul_table[c[None, :, i], one_plus[:, c[:, 0]]] * q ** i
    return out


def stab_order(ring: FiniteRing, k: int, method: str = "enumeration", *, strategy: str = "auto",
               workers: int = 1, budget: int = DEFAULT_BUDGET) -> StabResult:
    """Order of the pointwise stabilizer of R in the permutation group of R[a1..ak]."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    q = ring.order
    if method == "field_formula":
        if not ring.is_field:
            raise PreconditionError(f"field_formula needs a field, got {ring}")
        return StabResult((q - 1) ** q, method)
    if method == "index_formula":
        if not _nonfield_sum(ring):
            raise PreconditionError(f"index_formula needs a sum of non-field local rings, got {ring}")
        return StabResult(null_quotient_index(ring, workers=workers, budget=budget), method)

    dr = DualRing(ring, k)
    n = 2 * q
    if strategy == "auto":
        strategy = "exhaustive" if q ** n <= min(budget, EXHAUSTIVE_LIMIT) else "image"
    if strategy == "exhaustive":
        h = null_coefficients(ring, n, workers=workers, budget=budget)
        powers = power_tables(ring.mul_table, ring.one, n)
        ders = evaluate_block(ring.add_table, ring.mul_table, derivative_block(ring, h), powers)
    else:
        pairs = polynomial_tables(ring, n, primed=True, strategy="image", budget=budget)
        ders = pairs[~pairs[:, :q].any(axis=1), q:]
    ders = unique_rows(ders, q)
    tables = unique_rows(_stab_tables(dr, ders), dr.order)
    order = int(_bijective_rows(tables).sum())
    return StabResult(order, method, derivative_image_size=int(ders.shape[0]))


def field_stab_by_derivative_image(ring: FiniteRing, *, workers: int = 1,
                                   budget: int = DEFAULT_BUDGET) -> int:
    """``|{[h'] : h in N, h'(a) != -1 for all a}|`` over degree < 2q representatives."""
    if not ring.is_field:
        raise PreconditionError(f"{ring} is not a field")
    n = 2 * ring.order
    h = null_coefficients(ring, n, workers=workers, budget=budget)
    powers = power_tables(ring.mul_table, ring.one, n)
    ders = unique_rows(evaluate_block(ring.add_table, ring.mul_table, derivative_block(ring, h), powers),
                       ring.order)
    minus_one = ring.neg(ring.one)
    return int((ders != minus_one).all(axis=1).sum())


def stab_orders(ring: FiniteRing, k_max: int, **kw) -> dict:
    return {k: stab_order(ring, k, "enumeration", **kw).order for k in range(1, k_max + 1)}


def stab_independence_check(ring: FiniteRing, k_max: int, **kw) -> bool:
    """The stabilizer order is the same for every k in 1..k_max."""
    return len(set(stab_orders(ring, k_max, **kw).values())) == 1


def count_perms_formula(ring: FiniteRing, k: int, *, parts: bool = False, **kw):
    """``q!(q-1)^q q^(kq)`` on fields, else ``|F(R)|^k |P(R)| |Stab|``.

    With ``parts`` the constituents are returned as a dict, including
    ``B = |P(R)| * |Stab|``.
    """
    q = ring.order
    if ring.is_field:
        value = math.factorial(q) * (q - 1) ** q * q ** (k * q)
        if not parts:
            return value
        return {"value": value, "F_R": q ** q, "P_R": math.factorial(q), "stab": (q - 1) ** q,
                "B": math.factorial(q) * (q - 1) ** q}
    f_r = index_via_linear(ring, primed=False)
    p_r = count_perms_base(ring, **kw)
    method = "index_formula" if _nonfield_sum(ring) else "enumeration"
    stab = stab_order(ring, k, method, **kw).order
    value = f_r ** k * p_r * stab
    if not parts:
        return value
    return {"value": value, "F_R": f_r, "P_R": p_r, "stab": stab, "B": p_r * stab}


# -- reports -------------------------------------------------------------------

def _timed(fn, *args, **kw):
    t = time.perf_counter()
    v = fn(*args, **kw)
    return v, time.perf_counter() - t


def count(ring: FiniteRing, k: int, quantity: str, method: str = "both", *,
          workers: int = 1, budget: int = DEFAULT_BUDGET) -> CountReport:
    """One quantity (``functions``, ``perms`` or ``stab``) by formula, enumeration or both."""
    rep = CountReport(str(ring.spec), k, quantity)
    kw = dict(workers=workers, budget=budget)
    want_formula = method in ("formula", "both")
    want_enum = method in ("enum", "both")
    if quantity == "functions":
        f_formula = lambda: count_functions_formula(ring, k)
        f_enum = lambda: count_functions_enum(ring, k, **kw)
    elif quantity == "perms":
        f_formula = lambda: count_perms_formula(ring, k, **kw)
        f_enum = lambda: count_perms_enum(ring, k, **kw)
    elif quantity == "stab":
        if ring.is_field:
            f_formula = lambda: stab_order(ring, k, "field_formula").order
        elif _nonfield_sum(ring):
            f_formula = lambda: stab_order(ring, k, "index_formula", **kw).order
        else:
            f_formula = None
            rep.note = "no closed form for mixed field/non-field sums"
        f_enum = lambda: stab_order(ring, k, "enumeration", **kw).order
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    if want_formula and f_formula is not None:
        try:
            rep.formula_value, rep.seconds["formula"] = _timed(f_formula)
        except BudgetExceeded:
            rep.note = (rep.note + "; " if rep.note else "") + "formula constituents exceed budget"
    if want_enum:
        try:
            rep.oracle_value, rep.seconds["enum"] = _timed(f_enum)
        except BudgetExceeded:
            rep.skipped = "budget"
    return rep


def verify_identities(ring: FiniteRing, k: int, *, workers: int = 1,
                      budget: int = DEFAULT_BUDGET) -> list:
    """Check the index identity and the counting formulas against enumeration.

    Mismatches are reported in the returned list, never raised.
    """
    kw = dict(workers=workers, budget=budget)
    spec = str(ring.spec)
    reports = []

    # (a) [R[x]:N'] = [R[x]:N] [N:N']
    rep = CountReport(spec, k, "index_identity")
    try:
        (lhs, rep.seconds["formula"]) = _timed(index_via_linear, ring, True)
        (rhs, rep.seconds["enum"]) = _timed(
            lambda: index_via_linear(ring, False) * derivative_image_of_null(ring))
        rep.formula_value, rep.oracle_value = lhs, rhs
        rep.note = "[R[x]:N'] vs [R[x]:N]*[N:N'] (kernel route)"
    except BudgetExceeded:
        rep.skipped = "budget"
    reports.append(rep)

    for quantity in ("functions", "perms"):
        reports.append(count(ring, k, quantity, **kw))

    if ring.is_field:
        q = ring.order
        rep = CountReport(spec, k, "field_index_vs_stab")
        try:
            nq, t1 = _timed(null_quotient_index, ring, **kw)
            st, t2 = _timed(lambda: stab_order(ring, k, "enumeration", **kw).order)
            rep.formula_value = q ** q
            rep.oracle_value = nq
            rep.seconds = {"formula": t1, "enum": t2}
            rep.note = (f"[N:N']={nq} (expected q^q={q ** q}); |Stab|={st} (expected (q-1)^q="
                        f"{(q - 1) ** q}); differ={nq != st}; the (q-1)! reading of |Stab| disagrees "
                        f"for q>=3")
            if st != (q - 1) ** q or nq == st:
                rep.oracle_value = -1  # force a mismatch
        except BudgetExceeded:
            rep.skipped = "budget"
        reports.append(rep)
    elif _nonfield_sum(ring):
        rep = CountReport(spec, k, "stab_equals_index")
        try:
            rep.formula_value, rep.seconds["formula"] = _timed(null_quotient_index, ring, **kw)
            rep.oracle_value, rep.seconds["enum"] = _timed(
                lambda: stab_order(ring, k, "enumeration", **kw).order)
        except BudgetExceeded:
            rep.skipped = "budget"
        reports.append(rep)
    return reports
