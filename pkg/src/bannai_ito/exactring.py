"""Exact arithmetic: parameter polynomials, x-polynomials, linear divided differences.

Coefficients live in Q[params] (never a fraction field).  Rationals are
``gmpy2.mpq``; there is no floating point anywhere in this package.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Mapping

from gmpy2 import mpq

__all__ = [
    "mpq",
    "Ring",
    "ParamPoly",
    "XPoly",
    "StructureError",
    "ExactnessError",
    "divide_exact",
    "substitute_params",
    "as_rational",
]

# Bit widths used to pack exponent vectors into one integer key.  Exponents
# must stay below 2**EXP_BITS; realistic workloads stay under 20.
EXP_BITS = 8
_EXP_LIMIT = 1 << EXP_BITS


class StructureError(ValueError):
    """Operands do not share a variable count or parameter list."""


class ExactnessError(ArithmeticError):
    """A division that was required to be exact left a nonzero remainder."""


def as_rational(value) -> mpq:
    if isinstance(value, str):
        return mpq(Fraction(value))
    return mpq(value)


def _graded_key(exps: tuple[int, ...]):
    # ascending total degree, then lexicographically *descending* exponents,
    # so x1 precedes x2 precedes x3 within a degree
    return (sum(exps), tuple(-e for e in exps))


class ParamPoly:
    """Polynomial in the declared parameters with exact rational coefficients."""

    __slots__ = ("params", "terms", "_hash")

    def __init__(self, params: tuple[str, ...], terms: Mapping[tuple[int, ...], object] | None = None):
        self.params = tuple(params)
        clean = {}
        if terms:
            m = len(self.params)
            for exps, c in terms.items():
                if len(exps) != m:
                    raise StructureError(f"exponent vector {exps} does not match params {self.params}")
                c = as_rational(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, params, terms):
        obj = cls.__new__(cls)
        obj.params = params
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, params, value=1) -> "ParamPoly":
        return cls(params, {(0,) * len(params): value})

    @classmethod
    def gen(cls, params, name: str) -> "ParamPoly":
        params = tuple(params)
        if name not in params:
            raise StructureError(f"unknown parameter {name!r}; declared {params}")
        exps = tuple(1 if p == name else 0 for p in params)
        return cls(params, {exps: 1})

    def _coerce(self, other) -> "ParamPoly":
        if isinstance(other, ParamPoly):
            if other.params != self.params:
                raise StructureError(f"parameter lists differ: {self.params} vs {other.params}")
            return other
        return ParamPoly.const(self.params, other)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> mpq:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get((0,) * len(self.params), mpq(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.params == other.params and self.terms == other.terms
        if isinstance(other, (int, Fraction, type(mpq(0)))):
            return self.terms == ParamPoly.const(self.params, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.params, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return ParamPoly._raw(self.params, out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw(self.params, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ParamPoly):
            c0 = as_rational(other)
            if not c0:
                return ParamPoly._raw(self.params, {})
            return ParamPoly._raw(self.params, {e: c * c0 for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return ParamPoly._raw(self.params, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomial")
        out = ParamPoly.const(self.params, 1)
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, assignment: Mapping[str, object]) -> "ParamPoly":
        for name in assignment:
            if name not in self.params:
                raise StructureError(f"unknown parameter {name!r}")
        idx = {i: as_rational(assignment[p]) for i, p in enumerate(self.params) if p in assignment}
        out: dict = {}
        for e, c in self.terms.items():
            for i, v in idx.items():
                c = c * v ** e[i]
            if not c:
                continue
            e2 = tuple(0 if i in idx else x for i, x in enumerate(e))
            out[e2] = out.get(e2, 0) + c
        return ParamPoly(self.params, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _graded_key(t[0]))

    def __repr__(self):
        return f"ParamPoly({str(self)!r})"

    def __str__(self):
        from .textform import format_param_poly

        return format_param_poly(self)


@dataclass(frozen=True)
class Ring:
    """Variable count and parameter list shared by every polynomial of a computation.

    Also owns the packing of (clifford mask, x-exponents, parameter exponents)
    into a single integer, which is how module elements are stored.
    """

    nvars: int
    params: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if self.nvars < 1:
            raise StructureError("need at least one variable")
        if len(set(self.params)) != len(self.params):
            raise StructureError(f"duplicate parameter names in {self.params}")

    # -- packing --------------------------------------------------------
    @property
    def pshift(self) -> int:
        return EXP_BITS * len(self.params)

    @property
    def pmask(self) -> int:
        return (1 << self.pshift) - 1

    def pack_params(self, exps: Iterable[int]) -> int:
        code = 0
        for e in exps:
            if not 0 <= e < _EXP_LIMIT:
                raise OverflowError(f"parameter exponent {e} out of packable range")
            code = (code << EXP_BITS) | e
        return code

    def unpack_params(self, code: int) -> tuple[int, ...]:
        m = len(self.params)
        out = [0] * m
        for i in range(m - 1, -1, -1):
            out[i] = code & (_EXP_LIMIT - 1)
            code >>= EXP_BITS
        return tuple(out)

    def pack(self, mask: int, xexp: Iterable[int], pcode: int = 0) -> int:
        code = mask
        for e in xexp:
            if not 0 <= e < _EXP_LIMIT:
                raise OverflowError(f"x exponent {e} out of packable range")
            code = (code << EXP_BITS) | e
        return (code << self.pshift) | pcode

    def unpack(self, key: int) -> tuple[int, tuple[int, ...], int]:
        pcode = key & self.pmask
        code = key >> self.pshift
        n = self.nvars
        xs = [0] * n
        for i in range(n - 1, -1, -1):
            xs[i] = code & (_EXP_LIMIT - 1)
            code >>= EXP_BITS
        return code, tuple(xs), pcode

    # -- constructors ---------------------------------------------------
    def param(self, name: str) -> ParamPoly:
        return ParamPoly.gen(self.params, name)

    def const(self, value=1) -> ParamPoly:
        return ParamPoly.const(self.params, value)

    def x(self, i: int) -> "XPoly":
        """The coordinate x_i (1-based)."""
        if not 1 <= i <= self.nvars:
            raise IndexError(f"variable index {i} outside 1..{self.nvars}")
        e = [0] * self.nvars
        e[i - 1] = 1
        return XPoly(self, {tuple(e): self.const(1)})

    def one(self) -> "XPoly":
        return XPoly(self, {(0,) * self.nvars: self.const(1)})

    def zero(self) -> "XPoly":
        return XPoly(self, {})

    def monomial(self, exps, coeff=1) -> "XPoly":
        c = coeff if isinstance(coeff, ParamPoly) else self.const(coeff)
        return XPoly(self, {tuple(exps): c})

    def monomials(self, degree: int):
        """Exponent vectors of total degree ``degree`` in graded-lex order."""
        n = self.nvars
        out = [e for e in _cartesian(range(degree + 1), repeat=n) if sum(e) == degree]
        out.sort(key=_graded_key)
        return out


class XPoly:
    """Polynomial in x_1..x_n with coefficients in Q[params]."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, ...], ParamPoly] | None = None):
        self.ring = ring
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != ring.nvars:
                raise StructureError(f"exponent vector {e} has wrong length for n={ring.nvars}")
            if not isinstance(c, ParamPoly):
                c = ring.const(c)
            elif c.params != ring.params:
                raise StructureError(f"coefficient params {c.params} differ from ring {ring.params}")
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    def _check(self, other: "XPoly"):
        if other.ring != self.ring:
            raise StructureError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other) -> "XPoly":
        if isinstance(other, XPoly):
            self._check(other)
            return other
        if isinstance(other, ParamPoly):
            return XPoly(self.ring, {(0,) * self.ring.nvars: other})
        return XPoly(self.ring, {(0,) * self.ring.nvars: self.ring.const(other)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return XPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "XPoly":
        if not isinstance(c, ParamPoly):
            c = self.ring.const(c)
        if not c:
            return self.ring.zero()
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if w:
                out[e] = w
        return XPoly._raw(self.ring, out)

    def __mul__(self, other):
        if isinstance(other, (ParamPoly, int, Fraction, type(mpq(0)))):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return XPoly._raw(self.ring, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, i: int, k: int = 1) -> "XPoly":
        """Multiply by x_i**k (1-based ``i``)."""
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i - 1] += k
            out[tuple(e2)] = c
        return XPoly._raw(self.ring, out)

    def partial(self, i: int) -> "XPoly":
        out = {}
        for e, c in self.terms.items():
            p = e[i - 1]
            if p:
                e2 = list(e)
                e2[i - 1] = p - 1
                out[tuple(e2)] = c * p
        return XPoly._raw(self.ring, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _graded_key(t[0]))

    def __repr__(self):
        return f"XPoly({str(self)!r})"

    def __str__(self):
        from .textform import format_xpoly

        return format_xpoly(self)


def _linear_divisor_shape(d: XPoly):
    """Classify ``d`` as ('x', i) or ('xx', i, j, s) meaning x_i - s*x_j."""
    terms = d.terms
    one = d.ring.const(1)
    n = d.ring.nvars

    def unit(e):
        if sum(e) != 1:
            return None
        return e.index(1)

    if len(terms) == 1:
        (e, c), = terms.items()
        i = unit(e)
        if i is not None and c == one:
            return ("x", i)
    elif len(terms) == 2:
        items = sorted(terms.items(), key=lambda t: _graded_key(t[0]))
        (e1, c1), (e2, c2) = items
        if c1 != one:
            (e1, c1), (e2, c2) = (e2, c2), (e1, c1)
        i, j = unit(e1), unit(e2)
        if i is not None and j is not None and c1 == one and (c2 == one or c2 == -one):
            s = -1 if c2 == one else 1   # x_i + x_j == x_i - (-1) x_j
            return ("xx", i, j, s)
    raise ValueError(
        f"divisor {d} is not one of x_i, x_i - x_j, x_i + x_j (n={n})"
    )


def divide_exact(p: XPoly, d: XPoly) -> XPoly:
    """Exact quotient of ``p`` by a linear divisor x_i, x_i - x_j or x_i + x_j.

    Raises ExactnessError when the remainder is nonzero; a nonzero remainder
    always means the caller built a wrong numerator.
    """
    p._check(d)
    shape = _linear_divisor_shape(d)
    ring = p.ring
    if shape[0] == "x":
        i = shape[1]
        out = {}
        for e, c in p.terms.items():
            if e[i] == 0:
                raise ExactnessError(f"{p} is not divisible by {d}")
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c
        return XPoly._raw(ring, out)

    _, i, j, s = shape
    # synthetic division in x_i by (x_i - s x_j): coefficients c_k of x_i^k
    by_power: dict[int, dict] = {}
    for e, c in p.terms.items():
        rest = e[:i] + (0,) + e[i + 1:]
        by_power.setdefault(e[i], {})[rest] = c
    if not by_power:
        return ring.zero()
    top = max(by_power)
    quotient: dict = {}
    carry: dict = {}  # q_k as a dict over exponent vectors with x_i^0
    for k in range(top, 0, -1):
        # q_{k-1} = c_k + s x_j q_k
        q = dict(by_power.get(k, {}))
        for e, c in carry.items():
            e2 = list(e)
            e2[j] += 1
            e2 = tuple(e2)
            v = q.get(e2)
            add = c if s == 1 else -c
            v = add if v is None else v + add
            if v:
                q[e2] = v
            else:
                q.pop(e2, None)
        for e, c in q.items():
            e2 = list(e)
            e2[i] = k - 1
            quotient[tuple(e2)] = c
        carry = q
    # remainder c_0 + s x_j q_0
    rem = dict(by_power.get(0, {}))
    for e, c in carry.items():
        e2 = list(e)
        e2[j] += 1
        e2 = tuple(e2)
        add = c if s == 1 else -c
        v = rem.get(e2)
        v = add if v is None else v + add
        if v:
            rem[e2] = v
        else:
            rem.pop(e2, None)
    if rem:
        raise ExactnessError(f"{p} is not divisible by {d}")
    return XPoly._raw(ring, quotient)


def substitute_params(p, assignment: Mapping[str, object]):
    """Partially evaluate parameters; unassigned parameters stay symbolic.

    Accepts ParamPoly, XPoly or CliffordPoly.
    """
    if isinstance(p, ParamPoly):
        return p.substitute(assignment)
    if isinstance(p, XPoly):
        return XPoly(p.ring, {e: c.substitute(assignment) for e, c in p.terms.items()})
    if hasattr(p, "substitute"):
        return p.substitute(assignment)
    raise TypeError(f"cannot substitute into {type(p).__name__}")
