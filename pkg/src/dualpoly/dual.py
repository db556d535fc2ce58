"""Dual numbers of k variables: R[a1..ak] with a_i * a_j = 0.

An element ``a0 + a1*a1 + ... + ak*ak`` is stored as the flat coordinate
tuple ``(a0, a1, ..., ak)`` of base-ring indices; its dense index is the
mixed-radix number ``a0 + a1*q + ... + ak*q**k`` with ``q = |R|``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from . import _text
from .errors import NotAUnitError, NotLocalError, ParseError, RingMismatchError, RingSpecError
from .rings import MAX_ORDER, FiniteRing, LocalStructure, build_ring, local_structure

MAX_ENUM_K = 4


class DualRing:
    def __init__(self, base: FiniteRing, k: int):
        if k < 1:
            raise RingSpecError("number of dual variables must be >= 1")
        self.base = base
        self.k = k
        self.order = base.order ** (k + 1)
        self.zero = 0
        self.one = base.one

    def __repr__(self):
        return f"DualRing({self.base.spec}, k={self.k})"

    def __str__(self):
        b = str(self.base)
        if "(+)" in b:
            b = f"({b})"
        return f"{b}[{self.k}]"

    def __eq__(self, other):
        return isinstance(other, DualRing) and other.base == self.base and other.k == self.k

    def __hash__(self):
        return hash((self.base.spec, self.k))

    # encoding
    def encode(self, coords: Sequence[int]) -> int:
        q = self.base.order
        return sum(int(c) * q ** i for i, c in enumerate(coords))

    def decode(self, index: int) -> tuple:
        q = self.base.order
        return tuple((index // q ** i) % q for i in range(self.k + 1))

    @cached_property
    def coordinates(self) -> np.ndarray:
        """Array of shape (order, k+1): coordinates of every element in index order."""
        if self.k > MAX_ENUM_K:
            raise RingSpecError(f"enumeration supports k <= {MAX_ENUM_K}")
        q = self.base.order
        idx = np.arange(self.order)
        return np.stack([(idx // q ** i) % q for i in range(self.k + 1)], axis=1)

    def base_index(self, a: int) -> int:
        """Index of the embedded base element (a, 0, ..., 0)."""
        return a

    # arithmetic on coordinate tuples
    def add_coords(self, x, y):
        at = self.base.add_table
        return tuple(int(at[a, b]) for a, b in zip(x, y))

    def mul_coords(self, x, y):
        at, mt = self.base.add_table, self.base.mul_table
        a0, b0 = x[0], y[0]
        return (int(mt[a0, b0]),) + tuple(
            int(at[mt[a0, bi], mt[b0, ai]]) for ai, bi in zip(x[1:], y[1:]))

    def _check(self, x: "DualElement"):
        if x.ring != self:
            raise RingMismatchError(f"element of {x.ring} used in {self}")

    # tables (dense, by index)
    @cached_property
    def add_table(self) -> np.ndarray:
        if self.order > MAX_ORDER:
            raise RingSpecError(f"table for {self} too large")
        c = self.coordinates
        q = self.base.order
        out = np.zeros((self.order, self.order), dtype=np.int64)
        for i in range(self.k + 1):
            out += self.base.add_table[c[:, None, i], c[None, :, i]] * q ** i
        out.setflags(write=False)
        return out

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self.order > MAX_ORDER:
            raise RingSpecError(f"table for {self} too large")
        c = self.coordinates
        q = self.base.order
        at, mt = self.base.add_table, self.base.mul_table
        a0 = c[:, None, 0]
        b0 = c[None, :, 0]
        out = mt[a0, b0].astype(np.int64)
        for i in range(1, self.k + 1):
            out = out + at[mt[a0, c[None, :, i]], mt[b0, c[:, None, i]]] * q ** i
        out.setflags(write=False)
        return out

    @cached_property
    def unit_mask(self) -> np.ndarray:
        return self.base.unit_mask[self.coordinates[:, 0]]

    # elements
    def element(self, value) -> "DualElement":
        if isinstance(value, str):
            return self.parse_element(value)
        if isinstance(value, int):
            return DualElement(self, (self.base.from_int(value),) + (0,) * self.k)
        coords = tuple(int(v) for v in value)
        if len(coords) != self.k + 1:
            raise ValueError(f"expected {self.k + 1} coordinates")
        return DualElement(self, coords)

    def from_index(self, index: int) -> "DualElement":
        return DualElement(self, self.decode(index))

    def embed(self, a: int) -> "DualElement":
        return DualElement(self, (a,) + (0,) * self.k)

    def format_coords(self, coords) -> str:
        fmt = self.base.format_element
        parts = []
        if coords[0] or not any(coords):
            parts.append(fmt(coords[0]))
        for i, c in enumerate(coords[1:], start=1):
            if c:
                parts.append(f"a{i}" if c == self.base.one else f"{fmt(c)}*a{i}")
        return "+".join(parts)

    def parse_element(self, text: str) -> "DualElement":
        """Parse ``1+2*a1+3*a2`` (base-ring literals as coefficients)."""
        terms = _text.parse_terms(text)
        coords = [0] * (self.k + 1)
        for t in terms:
            if t.exponent:
                raise ParseError("'x' is not allowed in a ring element")
            if t.alpha > self.k:
                raise ParseError(f"a{t.alpha} used in a ring with k={self.k}")
            c = self.base.element_from_literal(t.coefficient, t.bracket)
            if t.sign < 0:
                c = self.base.neg(c)
            coords[t.alpha] = self.base.add(coords[t.alpha], c)
        return DualElement(self, tuple(coords))


@dataclass(frozen=True)
class DualElement:
    ring: DualRing
    coords: tuple

    @property
    def a0(self) -> int:
        return self.coords[0]

    @property
    def parts(self) -> tuple:
        return self.coords[1:]

    @property
    def index(self) -> int:
        return self.ring.encode(self.coords)

    def __add__(self, other):
        return dual_add(self, _coerce(self.ring, other))

    __radd__ = __add__

    def __mul__(self, other):
        return dual_mul(self, _coerce(self.ring, other))

    __rmul__ = __mul__

    def __neg__(self):
        nt = self.ring.base.neg_table
        return DualElement(self.ring, tuple(int(nt[c]) for c in self.coords))

    def __sub__(self, other):
        return self + (-_coerce(self.ring, other))

    def __str__(self):
        return self.ring.format_coords(self.coords)

    def __repr__(self):
        return f"DualElement({self}, {self.ring})"

    def is_unit(self) -> bool:
        return dual_is_unit(self)

    def inverse(self) -> "DualElement":
        return dual_inverse(self)


def _coerce(ring: DualRing, value) -> DualElement:
    if isinstance(value, DualElement):
        return value
    if isinstance(value, int):
        return ring.element(value)
    raise TypeError(f"cannot combine {type(value).__name__} with DualElement")


def dual_add(x: DualElement, y: DualElement) -> DualElement:
    x.ring._check(y)
    return DualElement(x.ring, x.ring.add_coords(x.coords, y.coords))


def dual_mul(x: DualElement, y: DualElement) -> DualElement:
    x.ring._check(y)
    return DualElement(x.ring, x.ring.mul_coords(x.coords, y.coords))


def dual_is_unit(x: DualElement) -> bool:
    return x.ring.base.is_unit(x.a0)


def dual_inverse(x: DualElement) -> DualElement:
    """Closed form ``a0^-1 - sum a0^-2 * a_i * alpha_i``."""
    base = x.ring.base
    if not base.is_unit(x.a0):
        raise NotAUnitError(f"{x} is not a unit in {x.ring}")
    inv = base.inverse(x.a0)
    inv2 = base.mul(inv, inv)
    return DualElement(x.ring, (inv,) + tuple(base.neg(base.mul(inv2, a)) for a in x.parts))


def dual_local_structure(dr: DualRing) -> LocalStructure:
    """Maximal ideal {x : a0 in M} with nilpotency one more than the base ring's.

    Raises NotLocalError when the base ring is not local.
    """
    if not dr.base.is_local:
        raise NotLocalError(f"{dr} is not local")
    base_ls = local_structure(dr.base)
    c = dr.coordinates
    in_m = np.isin(c[:, 0], list(base_ls.maximal_ideal))
    residue = np.asarray(base_ls.residue_map)[c[:, 0]]
    return LocalStructure(
        maximal_ideal=frozenset(int(i) for i in np.nonzero(in_m)[0]),
        nilpotency=base_ls.nilpotency + 1,
        residue_map=tuple(int(r) for r in residue),
        residue_order=base_ls.residue_order,
    )


def enumerate_dual(dr: DualRing) -> Iterator[DualElement]:
    """All elements in index order (a0 varies fastest)."""
    if dr.k > MAX_ENUM_K:
        raise RingSpecError(f"enumeration supports k <= {MAX_ENUM_K}")
    for i in range(dr.order):
        yield dr.from_index(i)


_SUFFIX = re.compile(r"^(.*)\[(\d+)\]\s*$")


def parse_ring(text: str):
    """Parse a ring spec with an optional ``[k]`` dual-variable suffix.

    ``Z/4`` gives a FiniteRing; ``Z/4[2]`` gives Z/4[a1, a2]. A direct sum
    with a suffix must be parenthesized: ``(Z/4 (+) Z/9)[1]``.
    """
    t = text.strip()
    m = _SUFFIX.match(t)
    if not m:
        return build_ring(t)
    inner = m.group(1).strip()
    if "(+)" in inner:
        if not (inner.startswith("(") and inner.endswith(")")):
            raise RingSpecError(f"ambiguous spec {text!r}: parenthesize the direct sum before [k]")
        inner = inner[1:-1]
    return DualRing(build_ring(inner), int(m.group(2)))
