"""Finite commutative rings: Z/p^n, GF(p^e) and direct sums of these.

Elements are dense indices ``0 .. order-1`` so that value tables are flat
integer arrays:

* ``Z/p^n``: the residue itself.
* ``GF(p^e)``: the base-``p`` digits of the representative polynomial,
  ``index = d0 + d1*p + ... + d_{e-1}*p^(e-1)``.
* direct sum: mixed radix with the first summand least significant.

Addition and multiplication tables are materialized once per ring.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Sequence, Union

import numpy as np

from . import _text
from .errors import NotAUnitError, NotLocalError, ParseError, RingMismatchError, RingSpecError

MAX_ORDER = 2048


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_power(m: int):
    """Return ``(p, n)`` with ``m == p**n`` or None."""
    if m < 2:
        return None
    p = 2
    while p * p <= m and m % p:
        p += 1
    if m % p:
        p = m
    n = 0
    while m % p == 0:
        m //= p
        n += 1
    return (p, n) if m == 1 else None


# -- polynomial helpers over Z/p, coefficient lists low -> high ---------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod_p(a, b, p):
    """Remainder of a by monic b over Z/p."""
    a = [x % p for x in a]
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(a[:db])


def is_irreducible_mod_p(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    e = len(modulus) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _polymod_p(modulus, list(low) + [1], p):
                return False
    return True


# -- specs ---------------------------------------------------------------------

def _format_int_poly(coeffs) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


@dataclass(frozen=True)
class ZModPrimePower:
    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingSpecError(f"{self.p} is not prime")
        if self.n < 1:
            raise RingSpecError("exponent must be >= 1")

    @property
    def order(self):
        return self.p ** self.n

    def __str__(self):
        return f"Z/{self.p ** self.n}"


@dataclass(frozen=True)
class GaloisField:
    p: int
    e: int
    modulus: tuple  # low -> high, monic of degree e

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingSpecError(f"{self.p} is not prime")
        if self.e < 1:
            raise RingSpecError("extension degree must be >= 1")
        mod = tuple(int(c) % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != self.e + 1 or mod[-1] != 1:
            raise RingSpecError(f"modulus must be monic of degree {self.e}")
        if not is_irreducible_mod_p(mod, self.p):
            raise RingSpecError(f"modulus {_format_int_poly(mod)} is reducible over Z/{self.p}")

    @property
    def order(self):
        return self.p ** self.e

    def __str__(self):
        if self.e == 1:
            return f"F_{self.p}"
        return f"F_{self.order}:{_format_int_poly(self.modulus)}"


@dataclass(frozen=True)
class DirectSum:
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if len(self.summands) < 2:
            raise RingSpecError("a direct sum needs at least two summands")
        for s in self.summands:
            if isinstance(s, DirectSum):
                raise RingSpecError("nested direct sums are not supported")
            if not isinstance(s, (ZModPrimePower, GaloisField)):
                raise RingSpecError(f"unsupported summand {s!r}")

    @property
    def order(self):
        return reduce(lambda a, s: a * s.order, self.summands, 1)

    def __str__(self):
        return " (+) ".join(str(s) for s in self.summands)


RingSpec = Union[ZModPrimePower, GaloisField, DirectSum]


def prime_field(p: int) -> GaloisField:
    return GaloisField(p, 1, (0, 1))


_Z_RE = re.compile(r"^Z/(\d+)$")
_F_RE = re.compile(r"^F_(\d+)(?::(.*))?$")


def _parse_local(text: str) -> RingSpec:
    t = text.strip()
    m = _Z_RE.match(t)
    if m:
        pp = _prime_power(int(m.group(1)))
        if pp is None:
            raise RingSpecError(
                f"Z/{m.group(1)} is not a prime power; write it as a direct sum, e.g. 'Z/4 (+) Z/9'")
        return ZModPrimePower(*pp)
    m = _F_RE.match(t)
    if m:
        pp = _prime_power(int(m.group(1)))
        if pp is None:
            raise RingSpecError(f"no field with {m.group(1)} elements")
        p, e = pp
        if m.group(2) is None:
            if e > 1:
                raise RingSpecError(f"F_{m.group(1)} needs an explicit modulus, e.g. 'F_9:x^2+1'")
            return prime_field(p)
        try:
            terms = _text.parse_terms(m.group(2), allow_alpha=False)
        except ParseError as exc:
            raise RingSpecError(f"bad modulus: {exc}") from exc
        deg = max(tm.exponent for tm in terms)
        coeffs = [0] * (deg + 1)
        for tm in terms:
            if tm.bracket:
                raise RingSpecError("modulus coefficients must be integers")
            coeffs[tm.exponent] += tm.sign * tm.coefficient
        if deg != e:
            raise RingSpecError(f"modulus degree {deg} does not match F_{m.group(1)} (need {e})")
        return GaloisField(p, e, tuple(coeffs))
    raise RingSpecError(f"cannot parse ring spec {text!r}")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``Z/4``, ``F_9:x^2+1``, ``F_3`` or ``Z/4 (+) Z/9``."""
    parts = text.split("(+)")
    if len(parts) == 1:
        return _parse_local(parts[0])
    return DirectSum(tuple(_parse_local(s) for s in parts))


# -- realized rings ------------------------------------------------------------

@dataclass(frozen=True)
class LocalStructure:
    maximal_ideal: frozenset
    nilpotency: int
    residue_map: tuple  # element index -> residue class id (0 .. residue_order-1)
    residue_order: int

    @property
    def is_field(self):
        return len(self.maximal_ideal) == 1


class FiniteRing:
    """Exact arithmetic on a finite commutative ring described by a RingSpec."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.order = spec.order
        if self.order > MAX_ORDER:
            raise RingSpecError(f"ring order {self.order} exceeds supported maximum {MAX_ORDER}")
        self.zero = 0
        if isinstance(spec, DirectSum):
            self.summands = tuple(FiniteRing(s) for s in spec.summands)
            strides = [1]
            for s in self.summands[:-1]:
                strides.append(strides[-1] * s.order)
            self._strides = tuple(strides)
        else:
            self.summands = ()
        self.add_table, self.mul_table = self._build_tables()
        self.one = self.from_int(1)
        self.neg_table = np.argmin(self.add_table, axis=1).astype(np.int64)
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self.neg_table.setflags(write=False)

    # construction
    def _build_tables(self):
        q = self.order
        idx = np.arange(q)
        spec = self.spec
        if isinstance(spec, ZModPrimePower):
            add = (idx[:, None] + idx[None, :]) % q
            mul = (idx[:, None] * idx[None, :]) % q
        elif isinstance(spec, GaloisField):
            p, e = spec.p, spec.e
            digits = np.stack([(idx // p ** i) % p for i in range(e)], axis=1)
            weights = p ** np.arange(e)
            add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
            prod = np.zeros((q, q, 2 * e - 1), dtype=np.int64)
            for i in range(e):
                for j in range(e):
                    prod[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
            prod %= p
            mod = np.array(spec.modulus)
            for top in range(2 * e - 2, e - 1, -1):
                c = prod[:, :, top].copy()
                prod[:, :, top - e:top + 1] -= c[:, :, None] * mod[None, None, :]
                prod %= p
            mul = prod[:, :, :e] @ weights
        else:
            comps = [(idx // st) % s.order for st, s in zip(self._strides, self.summands)]
            add = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            for st, s, c in zip(self._strides, self.summands, comps):
                add += s.add_table[c[:, None], c[None, :]] * st
                mul += s.mul_table[c[:, None], c[None, :]] * st
        return np.ascontiguousarray(add, dtype=np.int64), np.ascontiguousarray(mul, dtype=np.int64)

    # identity / display
    def __repr__(self):
        return f"FiniteRing({self.spec})"

    def __str__(self):
        return str(self.spec)

    def __eq__(self, other):
        return isinstance(other, FiniteRing) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __getstate__(self):
        return {"spec": self.spec}

    def __setstate__(self, state):
        self.__init__(state["spec"])

    # elementwise arithmetic on indices
    def add(self, a, b):
        return int(self.add_table[a, b])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under the canonical map Z -> R."""
        spec = self.spec
        if isinstance(spec, ZModPrimePower):
            return n % spec.order
        if isinstance(spec, GaloisField):
            return n % spec.p
        return sum(s.from_int(n) * st for s, st in zip(self.summands, self._strides))

    def scale(self, n: int, a: int) -> int:
        return self.mul(self.from_int(n), a)

    def power(self, a: int, e: int) -> int:
        r = self.one
        for _ in range(e):
            r = self.mul(r, a)
        return r

    # units
    @cached_property
    def unit_mask(self) -> np.ndarray:
        return (self.mul_table == self.one).any(axis=1)

    @cached_property
    def inverse_table(self) -> np.ndarray:
        inv = np.full(self.order, -1, dtype=np.int64)
        rows, cols = np.nonzero(self.mul_table == self.one)
        inv[rows] = cols
        return inv

    @cached_property
    def units(self) -> tuple:
        return tuple(int(i) for i in np.nonzero(self.unit_mask)[0])

    def is_unit(self, a: int) -> bool:
        return bool(self.unit_mask[a])

    def inverse(self, a: int) -> int:
        b = int(self.inverse_table[a])
        if b < 0:
            raise NotAUnitError(f"{self.format_element(a)} is not a unit in {self}")
        return b

    @property
    def is_local(self) -> bool:
        return not isinstance(self.spec, DirectSum)

    @property
    def is_field(self) -> bool:
        return isinstance(self.spec, GaloisField) or (
            isinstance(self.spec, ZModPrimePower) and self.spec.n == 1)

    # components
    def components(self, a: int) -> tuple:
        if not self.summands:
            return (a,)
        return tuple((a // st) % s.order for st, s in zip(self._strides, self.summands))

    def from_components(self, comps: Sequence[int]) -> int:
        if not self.summands:
            (a,) = comps
            return a
        return sum(c * st for c, st in zip(comps, self._strides))

    # literals
    def format_element(self, a: int) -> str:
        spec = self.spec
        if isinstance(spec, ZModPrimePower) or (isinstance(spec, GaloisField) and spec.e == 1):
            return str(a)
        if isinstance(spec, GaloisField):
            return "[" + ",".join(str((a // spec.p ** i) % spec.p) for i in range(spec.e)) + "]"
        return "(" + ",".join(s.format_element(c) for s, c in zip(self.summands, self.components(a))) + ")"

    @property
    def characteristic(self) -> int:
        spec = self.spec
        if isinstance(spec, ZModPrimePower):
            return spec.order
        if isinstance(spec, GaloisField):
            return spec.p
        return reduce(math.lcm, (s.characteristic for s in self.summands))

    def element_from_literal(self, value, bracket: str = "", strict: bool = False) -> int:
        """Map a parsed literal (int, GF digit list, or direct-sum tuple) to an index.

        With ``strict`` set, integers outside ``0 .. characteristic-1`` are
        rejected instead of reduced.
        """
        spec = self.spec
        if not bracket:
            if strict and not 0 <= value < self.characteristic:
                raise ParseError(f"coefficient {value} out of ring {self}")
            return self.from_int(value)
        if bracket == "[":
            if not isinstance(spec, GaloisField):
                raise ParseError(f"digit-vector literal used over {self}")
            if len(value) > spec.e:
                raise ParseError(f"too many digits for {self}")
            if strict and any(not 0 <= d < spec.p for d in value):
                raise ParseError(f"digit out of range in {list(value)} for {self}")
            return sum((d % spec.p) * spec.p ** i for i, d in enumerate(value))
        if not isinstance(spec, DirectSum) or len(value) != len(self.summands):
            raise ParseError(f"tuple literal {value} does not fit {self}")
        return self.from_components(
            [s.element_from_literal(v, "", strict) for s, v in zip(self.summands, value)])

    def parse_element(self, text: str) -> int:
        t = text.strip()
        if t.startswith("[") or t.startswith("("):
            close = "]" if t[0] == "[" else ")"
            if not t.endswith(close):
                raise ParseError(f"unterminated literal {t!r}")
            try:
                vals = tuple(int(v) for v in t[1:-1].split(","))
            except ValueError as exc:
                raise ParseError(f"bad literal {t!r}") from exc
            return self.element_from_literal(vals, t[0])
        try:
            return self.from_int(int(t))
        except ValueError as exc:
            raise ParseError(f"bad ring element {t!r}") from exc

    def element(self, value) -> "RingElement":
        if isinstance(value, str):
            return RingElement(self, self.parse_element(value))
        if isinstance(value, tuple):
            return RingElement(self, self.element_from_literal(value, "(" if self.summands else "["))
        return RingElement(self, self.from_int(value))

    def elements(self):
        return range(self.order)


@dataclass(frozen=True)
class RingElement:
    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.order:
            raise ValueError("index out of range")

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other.index
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return RingElement(self.ring, self.ring.add(self.index, o))

    __radd__ = __add__

    def __mul__(self, other):
        o = self._other(other)
        return RingElement(self.ring, self.ring.mul(self.index, o))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.index))

    def __sub__(self, other):
        return self + (-RingElement(self.ring, self._other(other)))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.index == self.ring.from_int(other)
        return isinstance(other, RingElement) and other.ring == self.ring and other.index == self.index

    def __hash__(self):
        return hash((self.ring.spec, self.index))

    def __repr__(self):
        return f"{self.ring.format_element(self.index)} in {self.ring}"

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.index)

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring.inverse(self.index))


def build_ring(spec: Union[RingSpec, str]) -> FiniteRing:
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    return FiniteRing(spec)


def is_unit(a: RingElement) -> bool:
    return a.is_unit()


def inverse(a: RingElement) -> RingElement:
    return a.inverse()


# -- table-based structure (works for anything exposing order/add/mul tables) --

def additive_closure(generators, add_table: np.ndarray) -> np.ndarray:
    """Boolean mask of the additive subgroup generated by ``generators``."""
    order = add_table.shape[0]
    mask = np.zeros(order, dtype=bool)
    mask[0] = True
    gens = np.unique(np.asarray(list(generators), dtype=np.int64))
    frontier = np.array([0])
    while frontier.size:
        new = np.unique(add_table[frontier[:, None], gens[None, :]].ravel()) if gens.size else np.array([], int)
        new = new[~mask[new]]
        mask[new] = True
        frontier = new
    return mask


def ideal_powers(ring) -> list:
    """Masks of M^0 = R, M^1 = M, M^2, ... down to and including the zero ideal.

    Products are formed as literal set products followed by additive closure.
    Raises NotLocalError when the non-units are not closed under addition.
    """
    m_mask = ~np.asarray(ring.unit_mask)
    m = np.nonzero(m_mask)[0]
    if not m_mask[ring.add_table[m[:, None], m[None, :]]].all():
        raise NotLocalError(f"{ring} is not local")
    powers = [np.ones(ring.order, dtype=bool), m_mask]
    while powers[-1].sum() > 1:
        prev = np.nonzero(powers[-1])[0]
        prods = ring.mul_table[prev[:, None], m[None, :]].ravel()
        nxt = additive_closure(prods, ring.add_table)
        if (nxt == powers[-1]).all():
            raise NotLocalError(f"maximal ideal of {ring} is not nilpotent")
        powers.append(nxt)
    return powers


def local_structure(ring) -> LocalStructure:
    """Maximal ideal, nilpotency and residue map of a finite local ring.

    Raises NotLocalError for non-local rings (e.g. direct sums).
    """
    powers = ideal_powers(ring)
    m = np.nonzero(powers[1])[0]
    nilpotency = len(powers) - 1
    coset_min = ring.add_table[:, m].min(axis=1)
    _, residue = np.unique(coset_min, return_inverse=True)
    return LocalStructure(
        maximal_ideal=frozenset(int(i) for i in m),
        nilpotency=nilpotency,
        residue_map=tuple(int(r) for r in residue),
        residue_order=int(residue.max()) + 1,
    )


def is_suitable(ring) -> bool:
    """Decide suitability of a finite local ring by checking the definition directly.

    For all a, b and every l: ab in M^l must imply a in M^i, b in M^j with
    i + j >= min(L, l). Levels ``i``/``j`` are taken maximal, which is the
    only choice that matters because the powers form a descending chain.
    """
    powers = ideal_powers(ring)
    L = len(powers) - 1
    level = np.zeros(ring.order, dtype=np.int64)
    for i, mask in enumerate(powers):
        level[mask] = i
    lev_sum = level[:, None] + level[None, :]
    products = ring.mul_table
    for l in range(L + 1):
        premise = powers[l][products]
        if (premise & (lev_sum < min(L, l))).any():
            return False
    return True
