"""Euclidean Clifford algebra Cl(n) and the module Q[params][x] (x) Cl(n).

Basis blades e_S are bitmasks (bit i-1 <-> e_i).  Module elements are stored
as one flat dict from a packed integer key (mask, x-exponents,
parameter-exponents) to an exact rational, so that multiplying by a
parameter monomial is integer addition on keys.
"""
from __future__ import annotations

from typing import Mapping

from .exactring import EXP_BITS, ParamPoly, Ring, StructureError, XPoly, _graded_key, as_rational, mpq

__all__ = [
    "clifford_sign",
    "mask_of",
    "indices_of",
    "mask_order",
    "CliffordElement",
    "cl_mul",
    "CliffordPoly",
    "z_i",
    "w_ij",
]


def clifford_sign(s: int, t: int) -> int:
    """Sign of e_S e_T relative to e_{S xor T} for e_i^2 = +1."""
    swaps = 0
    s >>= 1
    while s:
        swaps += bin(s & t).count("1")
        s >>= 1
    return -1 if swaps & 1 else 1


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_order(n: int) -> list[int]:
    """Blades ordered scalar first, then by grade, then lexicographically."""
    return sorted(range(1 << n), key=lambda m: (bin(m).count("1"), indices_of(m)))


def _blade_name(mask: int) -> str:
    return "*".join(f"e{i}" for i in indices_of(mask))


class CliffordElement:
    """Element of Cl(n) with coefficients in Q[params]."""

    __slots__ = ("n", "params", "terms")

    def __init__(self, n: int, params: tuple[str, ...] = (), terms: Mapping[int, object] | None = None):
        self.n = n
        self.params = tuple(params)
        clean = {}
        for m, c in (terms or {}).items():
            if not 0 <= m < (1 << n):
                raise StructureError(f"blade mask {m} out of range for n={n}")
            if not isinstance(c, ParamPoly):
                c = ParamPoly.const(self.params, c)
            if c:
                clean[m] = c
        self.terms = clean

    @classmethod
    def blade(cls, n: int, indices, params=(), coeff=1) -> "CliffordElement":
        """The ordered product e_{i1} e_{i2} ... (indices need not be sorted)."""
        m = 0
        sign = 1
        for i in indices:
            if not 1 <= i <= n:
                raise IndexError(f"Clifford generator e{i} outside 1..{n}")
            b = 1 << (i - 1)
            sign *= clifford_sign(m, b)
            m ^= b
        return cls(n, params, {m: ParamPoly.const(tuple(params), sign) * coeff})

    @classmethod
    def e(cls, n: int, i: int, params=()) -> "CliffordElement":
        return cls.blade(n, [i], params)

    @classmethod
    def scalar(cls, n: int, value=1, params=()) -> "CliffordElement":
        return cls(n, params, {0: value})

    def _coerce(self, other) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            if other.n != self.n or other.params != self.params:
                raise StructureError("Clifford elements over different algebras")
            return other
        return CliffordElement.scalar(self.n, other, self.params)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (StructureError, TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.params, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return CliffordElement(self.n, self.params, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.n, self.params, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return cl_mul(self, other)
        return CliffordElement(self.n, self.params, {m: c * other for m, c in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in mask_order(self.n):
            if m in self.terms:
                c = str(self.terms[m])
                if m == 0:
                    parts.append(c)
                else:
                    parts.append(f"({c})*{_blade_name(m)}" if c != "1" else _blade_name(m))
        return " + ".join(parts)

    __repr__ = __str__


def cl_mul(u: CliffordElement, v: CliffordElement) -> CliffordElement:
    if u.n != v.n or u.params != v.params:
        raise StructureError("Clifford elements over different algebras")
    out: dict = {}
    for s, c in u.terms.items():
        for t, d in v.terms.items():
            m = s ^ t
            w = c * d if clifford_sign(s, t) == 1 else -(c * d)
            out[m] = out[m] + w if m in out else w
    return CliffordElement(u.n, u.params, out)


class CliffordPoly:
    """Element of Q[params][x_1..x_n] (x) Cl(n); scalar polynomials have mask 0 only."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[int, object] | None = None):
        self.ring = ring
        self.terms = {k: as_rational(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "CliffordPoly":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    # -- construction ---------------------------------------------------
    @classmethod
    def from_xpoly(cls, p: XPoly, mask: int = 0) -> "CliffordPoly":
        ring = p.ring
        out = {}
        for e, c in p.terms.items():
            base = ring.pack(mask, e)
            for pe, q in c.terms.items():
                out[base + ring.pack_params(pe)] = q
        return cls._raw(ring, out)

    @classmethod
    def from_components(cls, ring: Ring, components: Mapping[int, XPoly]) -> "CliffordPoly":
        out = cls._raw(ring, {})
        for m, p in components.items():
            if p.ring != ring:
                raise StructureError("component ring mismatch")
            out = out + cls.from_xpoly(p, m)
        return out

    @classmethod
    def from_clifford(cls, ring: Ring, u: CliffordElement) -> "CliffordPoly":
        if u.n != ring.nvars or u.params != ring.params:
            raise StructureError("Clifford element does not match ring")
        one = (0,) * ring.nvars
        return cls.from_components(ring, {m: XPoly(ring, {one: c}) for m, c in u.terms.items()})

    @classmethod
    def basis(cls, ring: Ring, mask: int, xexp) -> "CliffordPoly":
        return cls._raw(ring, {ring.pack(mask, xexp): mpq(1)})

    @classmethod
    def zero(cls, ring: Ring) -> "CliffordPoly":
        return cls._raw(ring, {})

    # -- views ----------------------------------------------------------
    def components(self) -> dict[int, XPoly]:
        ring = self.ring
        grouped: dict[int, dict] = {}
        for k, q in self.terms.items():
            m, xe, pc = ring.unpack(k)
            grouped.setdefault(m, {}).setdefault(xe, {})[ring.unpack_params(pc)] = q
        return {
            m: XPoly._raw(ring, {xe: ParamPoly._raw(ring.params, pt) for xe, pt in comp.items()})
            for m, comp in grouped.items()
        }

    def coefficient(self, mask: int, xexp) -> ParamPoly:
        comp = self.components().get(mask)
        if comp is None:
            return self.ring.const(0)
        return comp.terms.get(tuple(xexp), self.ring.const(0))

    def is_scalar(self) -> bool:
        return all(self.ring.unpack(k)[0] == 0 for k in self.terms)

    def to_xpoly(self) -> XPoly:
        comps = self.components()
        if any(m for m in comps):
            raise ValueError("element has non-scalar Clifford components")
        return comps.get(0, self.ring.zero())

    def degree(self) -> int:
        return max((sum(self.ring.unpack(k)[1]) for k in self.terms), default=-1)

    def sorted_terms(self):
        """(mask, xexp, ParamPoly) triples in canonical print order."""
        rank = {m: r for r, m in enumerate(mask_order(self.ring.nvars))}
        items = []
        for m, p in self.components().items():
            for xe, c in p.terms.items():
                items.append((m, xe, c))
        items.sort(key=lambda t: (_graded_key(t[1]), rank[t[0]]))
        return items

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "CliffordPoly":
        if isinstance(other, CliffordPoly):
            if other.ring != self.ring:
                raise StructureError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, XPoly):
            if other.ring != self.ring:
                raise StructureError("ring mismatch")
            return CliffordPoly.from_xpoly(other)
        if isinstance(other, CliffordElement):
            return CliffordPoly.from_clifford(self.ring, other)
        if isinstance(other, ParamPoly):
            return CliffordPoly.from_xpoly(XPoly(self.ring, {(0,) * self.ring.nvars: other}))
        return CliffordPoly.from_xpoly(self.ring.one().scale(other))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (StructureError, TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return CliffordPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordPoly._raw(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "CliffordPoly":
        return CliffordPoly._raw(self.ring, scale_raw(self.ring, self.terms, c))

    def __mul__(self, other):
        if isinstance(other, (CliffordPoly, XPoly, CliffordElement)):
            return CliffordPoly._raw(self.ring, _module_product(self.ring, self.terms, self._coerce(other).terms))
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, (XPoly, CliffordElement)):
            return self._coerce(other) * self
        return self.scale(other)

    def left_mul(self, u) -> "CliffordPoly":
        return self._coerce(u) * self

    def substitute(self, assignment) -> "CliffordPoly":
        return CliffordPoly.from_components(
            self.ring, {m: XPoly(self.ring, {e: c.substitute(assignment) for e, c in p.terms.items()})
                        for m, p in self.components().items()}
        )

    def __str__(self):
        from .textform import format_clifford_poly

        return format_clifford_poly(self)

    def __repr__(self):
        return f"CliffordPoly({str(self)!r})"


def packed_param_terms(ring: Ring, c) -> list[tuple[int, mpq]]:
    """A scalar coefficient as (packed parameter code, rational) pairs."""
    if isinstance(c, ParamPoly):
        if c.params != ring.params:
            raise StructureError(f"coefficient params {c.params} differ from ring {ring.params}")
        return [(ring.pack_params(e), q) for e, q in c.terms.items()]
    q = as_rational(c)
    return [(0, q)] if q else []


def scale_raw(ring: Ring, terms: dict, c) -> dict:
    pterms = packed_param_terms(ring, c)
    if len(pterms) == 1 and pterms[0][0] == 0:
        q0 = pterms[0][1]
        return {k: v * q0 for k, v in terms.items()}
    out: dict = {}
    get = out.get
    for pk, q in pterms:
        for k, v in terms.items():
            kk = k + pk
            w = get(kk)
            out[kk] = v * q if w is None else w + v * q
    return {k: v for k, v in out.items() if v}


def _module_product(ring: Ring, left: dict, right: dict) -> dict:
    # x's and parameters commute; Clifford parts multiply in order
    out: dict = {}
    get = out.get
    shift = ring.pshift + EXP_BITS * ring.nvars
    low = (1 << shift) - 1
    for k1, c1 in left.items():
        m1 = k1 >> shift
        r1 = k1 & low
        for k2, c2 in right.items():
            m2 = k2 >> shift
            kk = ((m1 ^ m2) << shift) | (r1 + (k2 & low))
            w = c1 * c2 if clifford_sign(m1, m2) == 1 else -(c1 * c2)
            v = get(kk)
            out[kk] = w if v is None else v + w
    return {k: v for k, v in out.items() if v}


def z_i(ring: Ring, i: int):
    """The operator f -> e_i (R_i f)."""
    from .hyperoct import reflection
    from .opcalc import GroupAction, Multiply

    if not 1 <= i <= ring.nvars:
        raise IndexError(f"index {i} outside 1..{ring.nvars}")
    e = CliffordElement.e(ring.nvars, i, ring.params)
    return (Multiply(ring, e) * GroupAction(ring, reflection(ring.nvars, i))).named(f"Z_{i}")


def w_ij(ring: Ring, i: int, j: int):
    """((e_i - e_j) pi_ij + (e_i + e_j) R_i R_j pi_ij) / 2."""
    from .hyperoct import reflection, transposition
    from .opcalc import GroupAction, Multiply

    n = ring.nvars
    if i == j:
        raise IndexError("w_ij needs distinct indices")
    ei = CliffordElement.e(n, i, ring.params)
    ej = CliffordElement.e(n, j, ring.params)
    pi = transposition(n, i, j)
    rr_pi = reflection(n, i) * reflection(n, j) * pi
    half = mpq(1, 2)
    op = Multiply(ring, (ei - ej) * half) * GroupAction(ring, pi) + Multiply(ring, (ei + ej) * half) * GroupAction(ring, rr_pi)
    return op.named(f"W_{i}{j}")
