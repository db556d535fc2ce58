"""Polynomials over R and over R[a1..ak], derivatives, evaluation and induced functions.

A polynomial over the dual ring is always held decomposed as
``f = f0 + f1*a1 + ... + fk*ak`` with ``f_i`` in R[x]; evaluation at
``a0 + sum a_i*alpha_i`` uses ``f0(a0) + sum (a_i*f0'(a0) + f_i(a0))*alpha_i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from . import _text
from .dual import DualElement, DualRing
from .errors import ParseError, RingMismatchError
from .rings import FiniteRing, RingElement

#: Degree of the zero polynomial.
DEG_ZERO = -math.inf


class Poly:
    """Dense polynomial over a FiniteRing; coefficients are element indices, low degree first."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: FiniteRing, coeffs: Sequence[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, ring):
        return cls(ring, (0, ring.one))

    @classmethod
    def constant(cls, ring, a: int):
        return cls(ring, (a,))

    @classmethod
    def from_ints(cls, ring, ints):
        return cls(ring, [ring.from_int(v) for v in ints])

    @classmethod
    def from_roots(cls, ring, roots, multiplicity: int = 1):
        """Monic ``prod (x - r)^multiplicity`` over the given roots."""
        f = cls(ring, (ring.one,))
        for r in roots:
            lin = cls(ring, (ring.neg(r), ring.one))
            for _ in range(multiplicity):
                f = f * lin
        return f

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, j: int) -> int:
        return self.coeffs[j] if j < len(self.coeffs) else 0

    def padded(self, n: int) -> tuple:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit {n} coefficients")
        return self.coeffs + (0,) * (n - len(self.coeffs))

    def _same(self, other: "Poly"):
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __eq__(self, other):
        return isinstance(other, Poly) and other.ring == self.ring and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.ring.spec, self.coeffs))

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, {self.ring})"

    def __str__(self):
        return format_poly(self)

    def __add__(self, other: "Poly") -> "Poly":
        self._same(other)
        at = self.ring.add_table
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ring, [at[self.coefficient(j), other.coefficient(j)] for j in range(n)])

    def __neg__(self):
        return Poly(self.ring, [self.ring.neg_table[c] for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(self.ring, [self.ring.mul_table[other, c] for c in self.coeffs])
        self._same(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.ring)
        at, mt = self.ring.add_table, self.ring.mul_table
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = at[out[i + j], mt[a, b]]
        return Poly(self.ring, out)

    def __pow__(self, e: int):
        r = Poly(self.ring, (self.ring.one,))
        for _ in range(e):
            r = r * self
        return r

    def derivative(self) -> "Poly":
        return derivative(self)

    def divmod_monic(self, divisor: "Poly"):
        """Quotient and remainder by a monic divisor."""
        self._same(divisor)
        if not divisor.coeffs or divisor.coeffs[-1] != self.ring.one:
            raise ValueError("divisor must be monic")
        at, mt, nt = self.ring.add_table, self.ring.mul_table, self.ring.neg_table
        rem = list(self.coeffs)
        d = len(divisor.coeffs) - 1
        quot = [0] * max(len(rem) - d, 0)
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if not c:
                continue
            quot[top - d] = c
            for j, b in enumerate(divisor.coeffs):
                rem[top - d + j] = at[rem[top - d + j], nt[mt[c, b]]]
        return Poly(self.ring, quot), Poly(self.ring, rem[:d])

    def __call__(self, a):
        return eval_base(self, a)

    def values(self, points=None) -> np.ndarray:
        """Vectorized Horner evaluation at ``points`` (default: every element)."""
        ring = self.ring
        pts = np.arange(ring.order) if points is None else np.asarray(points, dtype=np.int64)
        acc = np.zeros_like(pts)
        for c in reversed(self.coeffs):
            acc = ring.add_table[ring.mul_table[acc, pts], c]
        return acc


def derivative(f: Poly) -> Poly:
    ring = f.ring
    return Poly(ring, [ring.scale(j, c) for j, c in enumerate(f.coeffs) if j > 0])


def eval_base(f: Poly, a: Union[int, RingElement]):
    """Horner evaluation at a base-ring element; returns the same kind it was given."""
    ring = f.ring
    if isinstance(a, RingElement):
        if a.ring != ring:
            raise RingMismatchError(f"{a.ring} vs {ring}")
        return RingElement(ring, eval_base(f, a.index))
    acc = 0
    for c in reversed(f.coeffs):
        acc = ring.add_table[ring.mul_table[acc, a], c]
    return int(acc)


def eval_dual_fast(f: Poly, x: DualElement) -> DualElement:
    """``f(a0) + sum a_i * f'(a0) * alpha_i`` for f over the base ring."""
    dr = x.ring
    if dr.base != f.ring:
        raise RingMismatchError(f"polynomial over {f.ring} evaluated in {dr}")
    mt = dr.base.mul_table
    d = eval_base(derivative(f), x.a0)
    return DualElement(dr, (eval_base(f, x.a0),) + tuple(int(mt[a, d]) for a in x.parts))


@dataclass(frozen=True)
class DualPoly:
    f0: Poly
    parts: tuple  # (f1, ..., fk)

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("a DualPoly needs k >= 1 parts")
        for p in self.parts:
            if p.ring != self.f0.ring:
                raise RingMismatchError("all components must share a base ring")

    @property
    def ring(self) -> FiniteRing:
        return self.f0.ring

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def components(self) -> tuple:
        return (self.f0,) + self.parts

    @property
    def degree(self):
        return max(p.degree for p in self.components)

    @classmethod
    def from_base(cls, f: Poly, k: int) -> "DualPoly":
        return cls(f, (Poly(f.ring),) * k)

    def dual_coefficients(self, dr: DualRing = None) -> list:
        """Reassemble into a list of DualElement coefficients (low degree first)."""
        dr = dr or DualRing(self.ring, self.k)
        n = 0 if self.degree == DEG_ZERO else self.degree + 1
        return [DualElement(dr, tuple(p.coefficient(j) for p in self.components)) for j in range(n)]

    def __add__(self, other: "DualPoly"):
        return DualPoly(self.f0 + other.f0, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other: "DualPoly"):
        return DualPoly(self.f0 - other.f0, tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __str__(self):
        return format_poly(self)


def decompose(coefficients: Sequence[DualElement]) -> DualPoly:
    """Split a polynomial with dual-number coefficients into ``f0 + sum f_i * alpha_i``."""
    if not coefficients:
        raise ValueError("need at least one coefficient to know the ring")
    dr = coefficients[0].ring
    for c in coefficients:
        if c.ring != dr:
            raise RingMismatchError("coefficients from different rings")
    cols = list(zip(*(c.coords for c in coefficients)))
    return DualPoly(Poly(dr.base, cols[0]), tuple(Poly(dr.base, col) for col in cols[1:]))


def eval_dualpoly(f: DualPoly, x: DualElement) -> DualElement:
    dr = x.ring
    if dr.base != f.ring or dr.k != f.k:
        raise RingMismatchError(f"{f.k}-part polynomial over {f.ring} evaluated in {dr}")
    at, mt = dr.base.add_table, dr.base.mul_table
    a0 = x.a0
    d0 = eval_base(derivative(f.f0), a0)
    return DualElement(dr, (eval_base(f.f0, a0),) + tuple(
        int(at[mt[a, d0], eval_base(fi, a0)]) for a, fi in zip(x.parts, f.parts)))


@dataclass(frozen=True, eq=False)
class FunctionTable:
    """Values of a function on a finite domain, indexed by the canonical element index."""

    domain: object  # FiniteRing or DualRing
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64)
        if v.shape != (self.domain.order,):
            raise ValueError("table must have one value per domain element")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def key(self) -> bytes:
        return self.values.tobytes()

    def __eq__(self, other):
        return (isinstance(other, FunctionTable) and other.domain == self.domain
                and np.array_equal(other.values, self.values))

    def __hash__(self):
        return hash(self.key)

    def __getitem__(self, i):
        return int(self.values[i])

    def is_zero(self) -> bool:
        return not self.values.any()

    def is_bijective(self) -> bool:
        return np.unique(self.values).size == self.values.size

    def compose(self, inner: "FunctionTable") -> "FunctionTable":
        """``self o inner``."""
        return FunctionTable(self.domain, self.values[inner.values])

    def tolist(self):
        return [int(v) for v in self.values]


@dataclass(frozen=True)
class PairTable:
    """``([f], [f'])`` over R; hashable, so usable as a class key."""

    values: FunctionTable
    derivative: FunctionTable


def pair_table(f: Poly) -> PairTable:
    return PairTable(FunctionTable(f.ring, f.values()), FunctionTable(f.ring, derivative(f).values()))


def _dual_values(dr: DualRing, t0, d0, parts) -> np.ndarray:
    """Tables on R[a..] from base tables of f0, f0' and the f_i."""
    base = dr.base
    c = dr.coordinates
    q = base.order
    a0 = c[:, 0]
    out = t0[a0].copy()
    for i, ti in enumerate(parts, start=1):
        out += base.add_table[base.mul_table[c[:, i], d0[a0]], ti[a0]] * q ** i
    return out


def induce(f: Union[Poly, DualPoly], domain) -> FunctionTable:
    """Value table of ``f`` on ``domain`` (a FiniteRing or DualRing)."""
    if isinstance(domain, FiniteRing):
        if not isinstance(f, Poly):
            raise RingMismatchError("a dual polynomial cannot be induced on the base ring")
        if f.ring != domain:
            raise RingMismatchError(f"{f.ring} vs {domain}")
        return FunctionTable(domain, f.values())
    if isinstance(f, Poly):
        f = DualPoly.from_base(f, domain.k)
    if f.ring != domain.base or f.k != domain.k:
        raise RingMismatchError(f"{f.k}-part polynomial over {f.ring} induced on {domain}")
    t0 = f.f0.values()
    d0 = derivative(f.f0).values()
    return FunctionTable(domain, _dual_values(domain, t0, d0, [p.values() for p in f.parts]))


# -- text form -------------------------------------------------------------------

def parse_poly(text: str, ring) -> Union[Poly, DualPoly]:
    """Parse ``c*x^e`` terms. Over a DualRing, ``a<i>`` factors select the alpha_i part."""
    terms = _text.parse_terms(text, allow_alpha=isinstance(ring, DualRing))
    base = ring.base if isinstance(ring, DualRing) else ring
    k = ring.k if isinstance(ring, DualRing) else 0
    deg = max(t.exponent for t in terms)
    cols = [[0] * (deg + 1) for _ in range(k + 1)]
    for t in terms:
        if t.alpha > k:
            raise ParseError(f"a{t.alpha} used over {ring}")
        c = base.element_from_literal(t.coefficient, t.bracket, strict=True)
        if t.sign < 0:
            c = base.neg(c)
        col = cols[t.alpha]
        col[t.exponent] = base.add(col[t.exponent], c)
    if not k:
        return Poly(base, cols[0])
    return DualPoly(Poly(base, cols[0]), tuple(Poly(base, col) for col in cols[1:]))


def _format_part(f: Poly, alpha: int) -> list:
    ring = f.ring
    out = []
    for j in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[j]
        if not c:
            continue
        factors = []
        if c != ring.one or (j == 0 and not alpha):
            factors.append(ring.format_element(c))
        if alpha:
            factors.append(f"a{alpha}")
        if j:
            factors.append("x" if j == 1 else f"x^{j}")
        if len(factors) == 2 and not alpha and factors[0][0].isdigit():
            out.append(factors[0] + factors[1])  # 3x^2 style
        else:
            out.append("*".join(factors))
    return out


def format_poly(f: Union[Poly, DualPoly]) -> str:
    if isinstance(f, Poly):
        terms = _format_part(f, 0)
    else:
        terms = _format_part(f.f0, 0)
        for i, p in enumerate(f.parts, start=1):
            terms += _format_part(p, i)
    return "+".join(terms) or "0"
