"""Permutation-polynomial tests on R and on R[a1..ak].

Every negative verdict carries a witness that can be re-checked by direct
evaluation: either a collision ``x != y`` with ``f(x) == f(y)``, or a point
``a`` where ``f0'(a)`` is not a unit (in which case a collision is attached as
well).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .dual import DualElement, DualRing
from .errors import PreconditionError, RingMismatchError
from .poly import DualPoly, FunctionTable, Poly, derivative, eval_base, induce
from .rings import FiniteRing, local_structure


@dataclass(frozen=True)
class Witness:
    kind: str  # "collision" or "nonunit_derivative"
    collision: tuple  # (x, y): ints on R, DualElements on R[a..]
    point: Optional[int] = None  # base element a with f0'(a) a non-unit

    def to_dict(self, fmt=str):
        d = {"kind": self.kind, "collision": [fmt(c) for c in self.collision]}
        if self.point is not None:
            d["point"] = self.point
        return d


@dataclass(frozen=True)
class PermVerdict:
    is_permutation: bool
    criterion_path: str
    witness: Optional[Witness] = field(default=None)

    def __bool__(self):
        return self.is_permutation


def first_collision(values: np.ndarray):
    """Smallest ``y`` (then smallest ``x < y``) with ``values[x] == values[y]``."""
    seen = {}
    for y, v in enumerate(values.tolist()):
        if v in seen:
            return seen[v], y
        seen[v] = y
    return None


def _base_verdict(values, path) -> PermVerdict:
    hit = first_collision(values)
    if hit is None:
        return PermVerdict(True, path)
    return PermVerdict(False, path, Witness("collision", hit))


def is_perm_on_base(f: Poly) -> PermVerdict:
    """Exhaustive bijectivity of the value table on R."""
    return _base_verdict(f.values(), "exhaustive")


def is_perm_local(f: Poly, ring: FiniteRing = None) -> PermVerdict:
    """Residue-field permutation plus ``f'(a)`` outside M, for local R with M != 0."""
    ring = ring or f.ring
    if ring != f.ring:
        raise RingMismatchError(f"{f.ring} vs {ring}")
    if not ring.is_local:
        raise PreconditionError(f"{ring} is not local")
    ls = local_structure(ring)
    if ls.is_field:
        raise PreconditionError("maximal ideal is zero; use exhaustive field test")
    residue = np.asarray(ls.residue_map)
    vals = f.values()
    reps = np.unique(residue, return_index=True)[1]
    images = residue[vals[reps]]
    ok = np.unique(images).size == ls.residue_order
    if ok:
        d = derivative(f).values()
        ok = not np.isin(d, list(ls.maximal_ideal)).any()
    path = "residue+derivative"
    if ok:
        return PermVerdict(True, path)
    return PermVerdict(False, path, Witness("collision", first_collision(vals)))


def _component_poly(f: Poly, ring: FiniteRing, slot: int) -> Poly:
    comp = ring.summands[slot]
    return Poly(comp, [ring.components(c)[slot] for c in f.coeffs])


def is_perm_directsum(f: Poly, ring: FiniteRing = None) -> PermVerdict:
    """Test each summand projection; the sum permutes iff every projection does."""
    ring = ring or f.ring
    if not ring.summands:
        raise PreconditionError(f"{ring} is not a direct sum")
    for slot, comp in enumerate(ring.summands):
        g = _component_poly(f, ring, slot)
        v = is_perm_on_base(g) if comp.is_field else is_perm_local(g)
        if not v:
            x, y = v.witness.collision
            lift = [0] * len(ring.summands)
            a = list(lift); a[slot] = x
            b = list(lift); b[slot] = y
            return PermVerdict(False, f"directsum[{slot}]:{v.criterion_path}",
                               Witness("collision", (ring.from_components(a), ring.from_components(b))))
    return PermVerdict(True, "directsum")


def is_perm(f, dr: DualRing = None) -> PermVerdict:
    """Structural test: on R[a..] when ``dr`` is given or f is a DualPoly, else on R."""
    if dr is not None or isinstance(f, DualPoly):
        return is_perm_on_dual(f, dr)
    return _base_criterion(f)


def _base_criterion(f: Poly) -> PermVerdict:
    ring = f.ring
    if ring.summands:
        return is_perm_directsum(f)
    if ring.is_field:
        return is_perm_on_base(f)
    return is_perm_local(f)


def _dual_collision(f: DualPoly, dr: DualRing, a: int, b: int, d0: np.ndarray):
    """Two distinct elements of R[a..] with the same image, given f0(a) == f0(b)."""
    base = dr.base
    at, mt, nt = base.add_table, base.mul_table, base.neg_table
    for u, v in ((a, b), (b, a)):
        if base.is_unit(int(d0[u])):
            inv = base.inverse(int(d0[u]))
            coords = tuple(int(mt[at[eval_base(p, v), nt[eval_base(p, u)]], inv]) for p in f.parts)
            return DualElement(dr, (u,) + coords), dr.embed(v)
    return None


def _nonunit_collision(dr: DualRing, a: int, d: int):
    base = dr.base
    ann = np.nonzero(base.mul_table[:, d] == 0)[0]
    b = int(ann[ann != 0][0])
    return dr.embed(a), DualElement(dr, (a,) + (b,) * dr.k)


def _as_dual(f, dr: DualRing = None):
    if isinstance(f, Poly):
        if dr is None:
            raise ValueError("pass the DualRing when testing a base polynomial")
        f = DualPoly.from_base(f, dr.k)
    dr = dr or DualRing(f.ring, f.k)
    if dr.base != f.ring or dr.k != f.k:
        raise RingMismatchError(f"{f.k}-part polynomial over {f.ring} tested on {dr}")
    return f, dr


def is_perm_on_dual(f, dr: DualRing = None) -> PermVerdict:
    """f0 permutes R and f0'(a) is a unit for every a in R."""
    f, dr = _as_dual(f, dr)
    base = dr.base
    t0 = f.f0.values()
    d0 = derivative(f.f0).values()
    hit = first_collision(t0)
    if hit is None:
        bad = np.nonzero(~base.unit_mask[d0])[0]
        if not bad.size:
            return PermVerdict(True, "f0-permutes+unit-derivative")
        a = int(bad[0])
        return PermVerdict(False, "f0-permutes+unit-derivative",
                           Witness("nonunit_derivative", _nonunit_collision(dr, a, int(d0[a])), a))
    pair = _dual_collision(f, dr, *hit, d0)
    if pair is not None:
        return PermVerdict(False, "f0-permutes+unit-derivative", Witness("collision", pair))
    a = hit[0]
    return PermVerdict(False, "f0-permutes+unit-derivative",
                       Witness("nonunit_derivative", _nonunit_collision(dr, a, int(d0[a])), a))


def is_perm_dual_nonfield(f, dr: DualRing = None) -> PermVerdict:
    """Over a sum of non-field local rings, f permutes R[a..] iff f0 permutes R.

    A single non-field local ring is accepted as a one-term sum.
    """
    f, dr = _as_dual(f, dr)
    base = dr.base
    for comp in (base.summands or (base,)):
        if comp.is_field:
            raise PreconditionError(f"summand {comp} is a field")
    v = _base_criterion(f.f0)
    if v:
        return PermVerdict(True, "nonfield:" + v.criterion_path)
    d0 = derivative(f.f0).values()
    x, y = v.witness.collision
    pair = _dual_collision(f, dr, x, y, d0)
    if pair is None:
        return PermVerdict(False, "nonfield:" + v.criterion_path,
                           Witness("nonunit_derivative", _nonunit_collision(dr, x, int(d0[x])), x))
    return PermVerdict(False, "nonfield:" + v.criterion_path, Witness("collision", pair))


def check_witness(f, verdict: PermVerdict, dr: DualRing = None) -> bool:
    """Re-verify a negative verdict's witness by direct evaluation."""
    w = verdict.witness
    if w is None:
        return verdict.is_permutation
    x, y = w.collision
    if x == y:
        return False
    if dr is None:
        return eval_base(f, x) == eval_base(f, y)
    f, dr = _as_dual(f, dr)
    table = induce(f, dr)
    ok = table[x.index] == table[y.index]
    if w.point is not None:
        ok = ok and not dr.base.is_unit(eval_base(derivative(f.f0), w.point))
    return ok


def construct_pair_field(F: FunctionTable, G: FunctionTable) -> Poly:
    """Polynomial f over F_q with deg f < 2q, ``[f] = F`` and ``[f'] = G``.

    ``f = f0 + (f0' - f1)(x^q - x)`` where f0, f1 interpolate F, G with degree < q.
    """
    ring = F.domain
    if not isinstance(ring, FiniteRing) or not ring.is_field:
        raise PreconditionError("pair construction needs a finite field")
    if G.domain != ring:
        raise RingMismatchError("tables over different rings")
    f0 = interpolate(ring, F.values)
    f1 = interpolate(ring, G.values)
    q = ring.order
    vanish = Poly(ring, [0, ring.neg(ring.one)] + [0] * (q - 2) + [ring.one])  # x^q - x
    return f0 + (derivative(f0) - f1) * vanish


def interpolate(ring: FiniteRing, values) -> Poly:
    """Lagrange interpolation on a field: ``sum_a v(a) * (1 - (x - a)^(q-1))``."""
    q = ring.order
    out = Poly(ring)
    one = Poly.constant(ring, ring.one)
    for a in range(q):
        v = int(values[a])
        if v:
            lin = Poly(ring, (ring.neg(a), ring.one))
            out = out + (one - lin ** (q - 1)) * v
    return out
