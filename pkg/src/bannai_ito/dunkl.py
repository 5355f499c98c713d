"""Dunkl operators of type B_n and Z_2^n, their commutator fields and angular momenta."""
from __future__ import annotations

from dataclasses import dataclass

from .exactring import ParamPoly, Ring, StructureError, XPoly, divide_exact, mpq
from .hyperoct import GroupAlgebraElement, identity, reflection, transposition
from .opcalc import BasisMap, GroupAction, Multiply, Operator, Partial, anticommutator

__all__ = [
    "DunklKind",
    "dunkl_apply",
    "dunkl",
    "s_ij_element",
    "s_ij",
    "m_ij",
    "euler",
    "euler_explicit",
]


@dataclass(frozen=True)
class DunklKind:
    """Which reflection group and which coupling constants.

    ``family`` is "B" (couplings ``a``, ``b``) or "Z2" (one coupling per axis).
    Couplings are ParamPoly values, so they may be symbols or specialised numbers.
    """

    family: str
    couplings: tuple[ParamPoly, ...]

    def __post_init__(self):
        if self.family not in ("B", "Z2"):
            raise ValueError(f"unknown Dunkl family {self.family!r}")
        if self.family == "B" and len(self.couplings) != 2:
            raise ValueError("type B needs exactly two couplings (a, b)")

    @classmethod
    def type_b(cls, a: ParamPoly, b: ParamPoly) -> "DunklKind":
        return cls("B", (a, b))

    @classmethod
    def z2(cls, *mus: ParamPoly) -> "DunklKind":
        return cls("Z2", tuple(mus))

    @property
    def a(self) -> ParamPoly:
        return self.couplings[0] if self.family == "B" else self.couplings[0] * 0

    def reflection_coupling(self, i: int) -> ParamPoly:
        """Coefficient of the sign-change divided difference along axis i."""
        return self.couplings[1] if self.family == "B" else self.couplings[i - 1]

    def check(self, ring: Ring):
        for c in self.couplings:
            if c.params != ring.params:
                raise StructureError(f"coupling params {c.params} differ from ring {ring.params}")
        if self.family == "Z2" and len(self.couplings) != ring.nvars:
            raise StructureError("Z2 kind needs one coupling per variable")


def dunkl_apply(i: int, kind: DunklKind, f: XPoly) -> XPoly:
    """D_i f = d_i f + b (1-R_i)f / x_i + a sum_{j!=i} [(1-pi_ij)f/(x_i-x_j) + (1-R_iR_jpi_ij)f/(x_i+x_j)]."""
    ring = f.ring
    n = ring.nvars
    if not 1 <= i <= n:
        raise IndexError(f"Dunkl index {i} outside 1..{n}")
    kind.check(ring)
    xi = ring.x(i)
    out = f.partial(i)
    b = kind.reflection_coupling(i)
    if b:
        Ri = GroupAlgebraElement.of(reflection(n, i), ring.params)
        out = out + divide_exact(f - Ri.act(f), xi).scale(b)
    a = kind.a
    if a:
        acc = ring.zero()
        for j in range(1, n + 1):
            if j == i:
                continue
            xj = ring.x(j)
            pij = transposition(n, i, j)
            swap = GroupAlgebraElement.of(pij, ring.params)
            flip = GroupAlgebraElement.of(reflection(n, i) * reflection(n, j) * pij, ring.params)
            acc = acc + divide_exact(f - swap.act(f), xi - xj)
            acc = acc + divide_exact(f - flip.act(f), xi + xj)
        out = out + acc.scale(a)
    return out


class _Dunkl(BasisMap):
    def __init__(self, ring: Ring, i: int, kind: DunklKind):
        kind.check(ring)
        if not 1 <= i <= ring.nvars:
            raise IndexError(f"Dunkl index {i} outside 1..{ring.nvars}")
        self.i = i
        self.kind = kind

        def fn(mask, xexp):
            return dunkl_apply(i, kind, ring.monomial(xexp))

        super().__init__(ring, fn, f"D_{i}")


def dunkl(ring: Ring, i: int, kind: DunklKind) -> Operator:
    """The Dunkl operator D_i as an operator acting componentwise on the module."""
    return _Dunkl(ring, i, kind)


def s_ij_element(n: int, i: int, j: int, kind: DunklKind, params: tuple[str, ...]) -> GroupAlgebraElement:
    """Closed form of [D_i, x_j] as a group-algebra element."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices ({i}, {j}) outside 1..{n}")
    one = GroupAlgebraElement.one(n, params)
    R = lambda k: GroupAlgebraElement.of(reflection(n, k), params)  # noqa: E731
    if kind.family == "Z2":
        if i != j:
            return GroupAlgebraElement.zero(n, params)
        return one + R(i) * (kind.couplings[i - 1] * 2)
    a, b = kind.couplings
    if i == j:
        out = one + R(i) * (b * 2)
        for k in range(1, n + 1):
            if k != i:
                pik = GroupAlgebraElement.of(transposition(n, i, k), params)
                out = out + (one + R(i) * R(k)) * pik * a
        return out
    pij = GroupAlgebraElement.of(transposition(n, i, j), params)
    return (one - R(i) * R(j)) * pij * (-a)


def s_ij(ring: Ring, i: int, j: int, kind: DunklKind) -> Operator:
    el = s_ij_element(ring.nvars, i, j, kind, ring.params)
    return GroupAction(ring, el, f"S_{i}{j}")


def m_ij(ring: Ring, i: int, j: int, kind: DunklKind, D=None) -> Operator:
    """Dunkl angular momentum x_i D_j - x_j D_i."""
    if i == j:
        raise IndexError("m_ij needs distinct indices")
    if D is None:
        D = {k: dunkl(ring, k, kind) for k in (i, j)}
    xi = Multiply(ring, ring.x(i))
    xj = Multiply(ring, ring.x(j))
    return (xi * D[j] - xj * D[i]).named(f"M_{i}{j}")


def euler(ring: Ring, kind: DunklKind, D=None) -> Operator:
    """Half the sum of anticommutators {x_i, D_i}."""
    n = ring.nvars
    if D is None:
        D = {k: dunkl(ring, k, kind) for k in range(1, n + 1)}
    total = None
    for k in range(1, n + 1):
        term = anticommutator(Multiply(ring, ring.x(k)), D[k])
        total = term if total is None else total + term
    return (total * mpq(1, 2)).named("A_0")


def euler_explicit(ring: Ring, kind: DunklKind) -> Operator:
    """sum x_i d_i plus the constant n(a(n-1) + b + 1/2) for type B (n*1/2 + sum mu_i for Z2)."""
    n = ring.nvars
    total = None
    for k in range(1, n + 1):
        term = Multiply(ring, ring.x(k)) * Partial(ring, k)
        total = term if total is None else total + term
    if kind.family == "B":
        a, b = kind.couplings
        const = (a * (n - 1) + b + mpq(1, 2)) * n
    else:
        const = ring.const(mpq(n, 2))
        for mu in kind.couplings:
            const = const + mu
    return (total + GroupAction(ring, identity(n)) * const).named("A_0(explicit)")
