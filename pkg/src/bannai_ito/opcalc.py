"""Lazy operator calculus on the module Q[params][x] (x) Cl(n).

Operators are linear maps defined by their images of basis elements
x^a e_T.  Images are memoised per operator, so composite expressions
evaluate as sparse linear algebra over already-computed images.  Equality
of two operators is certified extensionally on all basis elements up to a
degree bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .clifford import (
    CliffordElement,
    CliffordPoly,
    _module_product,
    mask_order,
    packed_param_terms,
)
from .exactring import ParamPoly, Ring, StructureError, XPoly, mpq
from .hyperoct import GroupAlgebraElement, SignedPerm

__all__ = [
    "Operator",
    "Identity",
    "Zero",
    "BasisMap",
    "Multiply",
    "GroupAction",
    "Partial",
    "LinearCombination",
    "Composition",
    "combine",
    "commutator",
    "anticommutator",
    "apply",
    "basis_keys",
    "EqualityCertificate",
    "operators_equal",
    "is_zero_operator",
]


def _accumulate(acc: dict, img: dict, shift: int, coeff) -> None:
    get = acc.get
    for k2, c2 in img.items():
        kk = k2 + shift
        v = get(kk)
        acc[kk] = coeff * c2 if v is None else v + coeff * c2


def _prune(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if v}


class Operator:
    """A linear operator on the module, evaluated lazily with memoised images."""

    def __init__(self, ring: Ring, label: str | None = None):
        self.ring = ring
        self.label = label
        self._cache: dict[int, dict] = {}

    # subclasses compute the raw image of a basis key (parameter part zero)
    def _image(self, key: int) -> dict:
        raise NotImplementedError

    def image(self, key: int) -> dict:
        cache = self._cache
        img = cache.get(key)
        if img is None:
            img = cache[key] = self._image(key)
        return img

    def apply_raw(self, vec: dict) -> dict:
        pmask = self.ring.pmask
        acc: dict = {}
        for k, c in vec.items():
            p = k & pmask
            _accumulate(acc, self.image(k - p), p, c)
        return _prune(acc)

    def __call__(self, f) -> CliffordPoly:
        f = _as_module_element(self.ring, f)
        return CliffordPoly._raw(self.ring, self.apply_raw(f.terms))

    def clear_cache(self) -> None:
        self._cache.clear()

    def named(self, label: str) -> "Operator":
        self.label = label
        return self

    # -- algebra ----------------------------------------------------------
    def _check(self, other: "Operator"):
        if other.ring != self.ring:
            raise StructureError(f"operators over different rings: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Operator):
            other = Identity(self.ring) * other
        self._check(other)
        return LinearCombination(self.ring, [(self.ring.const(1), self), (self.ring.const(1), other)])

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return LinearCombination(self.ring, [(self.ring.const(-1), self)])

    def __sub__(self, other):
        if not isinstance(other, Operator):
            other = Identity(self.ring) * other
        self._check(other)
        return LinearCombination(self.ring, [(self.ring.const(1), self), (self.ring.const(-1), other)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Operator):
            self._check(other)
            return Composition(self.ring, self, other)
        c = other if isinstance(other, ParamPoly) else self.ring.const(other)
        return LinearCombination(self.ring, [(c, self)])

    def __rmul__(self, other):
        c = other if isinstance(other, ParamPoly) else self.ring.const(other)
        return LinearCombination(self.ring, [(c, self)])

    def __truediv__(self, other):
        return self * (mpq(1) / mpq(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative operator powers are not supported")
        if k == 0:
            return Identity(self.ring)
        out = self
        for _ in range(k - 1):
            out = Composition(self.ring, out, self)
        return out

    def __repr__(self):
        return f"<{type(self).__name__} {self.label or ''}>".replace(" >", ">")


def _as_module_element(ring: Ring, f) -> CliffordPoly:
    if isinstance(f, CliffordPoly):
        if f.ring != ring:
            raise StructureError(f"ring mismatch: {f.ring} vs {ring}")
        return f
    if isinstance(f, XPoly):
        if f.ring != ring:
            raise StructureError(f"ring mismatch: {f.ring} vs {ring}")
        return CliffordPoly.from_xpoly(f)
    if isinstance(f, CliffordElement):
        return CliffordPoly.from_clifford(ring, f)
    raise TypeError(f"cannot apply an operator to {type(f).__name__}")


class Identity(Operator):
    def __init__(self, ring: Ring, label: str = "1"):
        super().__init__(ring, label)

    def _image(self, key):
        return {key: mpq(1)}

    def apply_raw(self, vec):
        return dict(vec)


class Zero(Operator):
    def __init__(self, ring: Ring, label: str = "0"):
        super().__init__(ring, label)

    def _image(self, key):
        return {}

    def apply_raw(self, vec):
        return {}


class BasisMap(Operator):
    """Primitive defined by a function (mask, xexp) -> CliffordPoly."""

    def __init__(self, ring: Ring, fn: Callable[[int, tuple], CliffordPoly], label: str | None = None):
        super().__init__(ring, label)
        self.fn = fn

    def _image(self, key):
        mask, xexp, _ = self.ring.unpack(key)
        out = self.fn(mask, xexp)
        if isinstance(out, XPoly):
            out = CliffordPoly.from_xpoly(out, mask)
        return out.terms


class Multiply(Operator):
    """Left multiplication by a polynomial, a Clifford element, or their product."""

    def __init__(self, ring: Ring, factor, label: str | None = None):
        super().__init__(ring, label or str(factor))
        self.factor = _as_module_element(ring, factor)

    def _image(self, key):
        return _module_product(self.ring, self.factor.terms, {key: mpq(1)})


class GroupAction(Operator):
    """Action of a signed permutation or a group-algebra element on the x part."""

    def __init__(self, ring: Ring, element, label: str | None = None):
        if isinstance(element, SignedPerm):
            element = GroupAlgebraElement.of(element, ring.params)
        if element.n != ring.nvars:
            raise StructureError("group element size does not match ring")
        if element.params != ring.params:
            element = element.with_params(ring.params)
        super().__init__(ring, label or str(element))
        self.element = element
        self._packed = [(g, packed_param_terms(ring, c)) for g, c in element.terms.items()]

    def _image(self, key):
        ring = self.ring
        mask, xexp, _ = ring.unpack(key)
        acc: dict = {}
        for g, pterms in self._packed:
            s, e2 = g.act_monomial(xexp)
            base = ring.pack(mask, e2)
            for pk, q in pterms:
                kk = base + pk
                acc[kk] = acc.get(kk, 0) + (q if s == 1 else -q)
        return _prune(acc)


class Partial(Operator):
    def __init__(self, ring: Ring, i: int):
        if not 1 <= i <= ring.nvars:
            raise IndexError(f"derivative index {i} outside 1..{ring.nvars}")
        super().__init__(ring, f"d_{i}")
        self.i = i

    def _image(self, key):
        ring = self.ring
        mask, xexp, _ = ring.unpack(key)
        p = xexp[self.i - 1]
        if not p:
            return {}
        e2 = list(xexp)
        e2[self.i - 1] -= 1
        return {ring.pack(mask, e2): mpq(p)}


class LinearCombination(Operator):
    """sum_k c_k * op_k with c_k in Q[params]."""

    def __init__(self, ring: Ring, terms, label: str | None = None):
        super().__init__(ring, label)
        flat: list[tuple[ParamPoly, Operator]] = []
        for c, op in terms:
            if not isinstance(c, ParamPoly):
                c = ring.const(c)
            if not c:
                continue
            if op.ring != ring:
                raise StructureError("operators over different rings")
            if isinstance(op, LinearCombination) and op.label is None:
                flat.extend((c * c2, op2) for c2, op2 in op.terms)
            elif not isinstance(op, Zero):
                flat.append((c, op))
        self.terms = flat
        self._packed = [(packed_param_terms(ring, c), op) for c, op in flat]

    def _image(self, key):
        acc: dict = {}
        for pterms, op in self._packed:
            img = op.image(key)
            for pk, q in pterms:
                _accumulate(acc, img, pk, q)
        return _prune(acc)


class Composition(Operator):
    """left * right: ``right`` acts first."""

    def __init__(self, ring: Ring, left: Operator, right: Operator, label: str | None = None):
        super().__init__(ring, label)
        self.left = left
        self.right = right

    def _image(self, key):
        return self.left.apply_raw(self.right.image(key))


def commutator(x: Operator, y: Operator) -> Operator:
    return x * y - y * x


def anticommutator(x: Operator, y: Operator) -> Operator:
    return x * y + y * x


def combine(kind: str, *ops, coeff=None) -> Operator:
    """Functional form of the combinators: sum, scale, compose, commutator, anticommutator."""
    if kind == "sum":
        out = ops[0]
        for op in ops[1:]:
            out = out + op
        return out
    if kind == "scale":
        (op,) = ops
        return op * coeff
    if kind == "compose":
        out = ops[0]
        for op in ops[1:]:
            out = out * op
        return out
    if kind == "commutator":
        return commutator(*ops)
    if kind == "anticommutator":
        return anticommutator(*ops)
    raise ValueError(f"unknown combinator {kind!r}")


def apply(op: Operator, f) -> CliffordPoly:
    return op(f)


def basis_keys(ring: Ring, degree: int, clifford: bool = False) -> Iterator[int]:
    """Basis keys of total degree <= ``degree``: graded-lex, scalar blade first."""
    masks = mask_order(ring.nvars) if clifford else [0]
    for d in range(degree + 1):
        for xexp in ring.monomials(d):
            for m in masks:
                yield ring.pack(m, xexp)


@dataclass
class EqualityCertificate:
    degree_bound: int
    status: str  # "equal" or "counterexample"
    checked: int
    witness: CliffordPoly | None = None
    lhs_image: CliffordPoly | None = None
    rhs_image: CliffordPoly | None = None
    extra: dict = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.status == "equal"

    def recheck(self, lhs: Operator, rhs: Operator) -> bool:
        """True when a counterexample still separates the two operators."""
        if self.witness is None:
            return False
        return lhs(self.witness) != rhs(self.witness)

    def to_dict(self) -> dict:
        d = {"degree_bound": self.degree_bound, "status": self.status, "checked": self.checked}
        if self.witness is not None:
            d["witness"] = {
                "basis": str(self.witness),
                "lhs": str(self.lhs_image),
                "rhs": str(self.rhs_image),
            }
        return d


def operators_equal(lhs: Operator, rhs: Operator, degree: int, clifford: bool = False) -> EqualityCertificate:
    """Compare images on every basis element of degree <= ``degree``.

    Returns the first separating basis element in basis order, if any.
    """
    if degree < 0:
        raise ValueError("degree bound must be >= 0")
    lhs._check(rhs)
    ring = lhs.ring
    checked = 0
    for key in basis_keys(ring, degree, clifford):
        checked += 1
        a = lhs.image(key)
        b = rhs.image(key)
        if a != b:
            return EqualityCertificate(
                degree, "counterexample", checked,
                witness=CliffordPoly._raw(ring, {key: mpq(1)}),
                lhs_image=CliffordPoly._raw(ring, a),
                rhs_image=CliffordPoly._raw(ring, b),
            )
    return EqualityCertificate(degree, "equal", checked)


def is_zero_operator(op: Operator, degree: int, clifford: bool = False) -> EqualityCertificate:
    return operators_equal(op, Zero(op.ring), degree, clifford)

