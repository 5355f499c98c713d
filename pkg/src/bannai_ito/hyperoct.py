"""Signed permutations, the group algebra of B_n, and their action on polynomials.

A signed permutation ``g`` acts on Q[x_1..x_n] as the ring automorphism
x_i -> s_i * x_{perm(i)}.  Products compose right to left: ``(g*h).act(f)``
equals ``g.act(h.act(f))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .exactring import ParamPoly, StructureError, XPoly, mpq

__all__ = [
    "SignedPerm",
    "GroupAlgebraElement",
    "act",
    "reflection",
    "transposition",
    "identity",
    "ga_mul",
    "group_closure",
    "q_ij",
    "jucys_murphy",
]


@dataclass(frozen=True)
class SignedPerm:
    """x_i -> (-1)^(bit i of ``signs``) * x_{perm[i]}, indices 0-based internally."""

    perm: tuple[int, ...]
    signs: int = 0

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{n - 1}")
        if not 0 <= self.signs < (1 << n):
            raise ValueError("sign mask out of range")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def code(self) -> int:
        """Canonical integer encoding (perm digits base n, then sign bits)."""
        c = 0
        for p in self.perm:
            c = c * self.n + p
        return (c << self.n) | self.signs

    def sign(self, i: int) -> int:
        return -1 if (self.signs >> i) & 1 else 1

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        if not isinstance(other, SignedPerm):
            return NotImplemented
        if other.n != self.n:
            raise StructureError("signed permutations of different sizes")
        # (g h)(x_i) = g(s^h_i x_{h(i)}) = s^h_i s^g_{h(i)} x_{g(h(i))}
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = 0
        for i in range(self.n):
            bit = ((other.signs >> i) ^ (self.signs >> other.perm[i])) & 1
            signs |= bit << i
        return SignedPerm(perm, signs)

    def inverse(self) -> "SignedPerm":
        n = self.n
        perm = [0] * n
        signs = 0
        for i, p in enumerate(self.perm):
            perm[p] = i
            if (self.signs >> i) & 1:
                signs |= 1 << p
        return SignedPerm(tuple(perm), signs)

    def is_identity(self) -> bool:
        return self.signs == 0 and self.perm == tuple(range(self.n))

    def act_monomial(self, exps: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        """Image of x^exps as (sign, exponent vector)."""
        out = [0] * self.n
        sign = 1
        for i, e in enumerate(exps):
            if e:
                out[self.perm[i]] = e
                if (self.signs >> i) & 1 and e & 1:
                    sign = -sign
        return sign, tuple(out)

    def word(self) -> list[str]:
        """Generator word (R_i, pi_ij, 1-based) whose product equals this element."""
        n = self.n
        flips = sorted(self.perm[i] for i in range(n) if (self.signs >> i) & 1)
        word = [f"R{k + 1}" for k in flips]
        p = SignedPerm(self.perm, 0)
        for i in range(n):
            t = p.perm[i]
            if t != i:
                sw = transposition(n, i + 1, t + 1)
                word.append(f"pi{min(i, t) + 1}{max(i, t) + 1}")
                p = sw * p
        return word

    def __str__(self):
        w = self.word()
        return "*".join(w) if w else "1"


def identity(n: int) -> SignedPerm:
    return SignedPerm(tuple(range(n)), 0)


def reflection(n: int, i: int) -> SignedPerm:
    """R_i: x_i -> -x_i (1-based)."""
    if not 1 <= i <= n:
        raise IndexError(f"reflection index {i} outside 1..{n}")
    return SignedPerm(tuple(range(n)), 1 << (i - 1))


def transposition(n: int, i: int, j: int) -> SignedPerm:
    """pi_ij: swaps x_i and x_j (1-based)."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise IndexError(f"bad transposition indices ({i}, {j}) for n={n}")
    p = list(range(n))
    p[i - 1], p[j - 1] = j - 1, i - 1
    return SignedPerm(tuple(p), 0)


def act(g: SignedPerm, f: XPoly) -> XPoly:
    if g.n != f.ring.nvars:
        raise StructureError(f"group element on {g.n} letters acting on n={f.ring.nvars}")
    out = {}
    for e, c in f.terms.items():
        s, e2 = g.act_monomial(e)
        out[e2] = c if s == 1 else -c
    return XPoly._raw(f.ring, out)


class GroupAlgebraElement:
    """Finite Q[params]-linear combination of signed permutations."""

    __slots__ = ("n", "params", "terms")

    def __init__(self, n: int, params: tuple[str, ...], terms: Mapping[SignedPerm, object] | None = None):
        self.n = n
        self.params = tuple(params)
        clean = {}
        for g, c in (terms or {}).items():
            if g.n != n:
                raise StructureError("group element size mismatch")
            if not isinstance(c, ParamPoly):
                c = ParamPoly.const(self.params, c)
            elif c.params != self.params:
                raise StructureError("parameter list mismatch")
            if c:
                clean[g] = clean[g] + c if g in clean else c
                if not clean[g]:
                    del clean[g]
        self.terms = clean

    @classmethod
    def of(cls, g: SignedPerm, params=(), coeff=1) -> "GroupAlgebraElement":
        return cls(g.n, params, {g: coeff})

    @classmethod
    def one(cls, n: int, params=()) -> "GroupAlgebraElement":
        return cls.of(identity(n), params)

    @classmethod
    def zero(cls, n: int, params=()) -> "GroupAlgebraElement":
        return cls(n, params, {})

    def _coerce(self, other) -> "GroupAlgebraElement":
        if isinstance(other, GroupAlgebraElement):
            if other.n != self.n or other.params != self.params:
                raise StructureError("group algebra elements over different rings")
            return other
        if isinstance(other, SignedPerm):
            return GroupAlgebraElement.of(other, self.params)
        return GroupAlgebraElement(self.n, self.params, {identity(self.n): other})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (StructureError, TypeError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.params, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            v = out[g] + c if g in out else c
            if v:
                out[g] = v
            else:
                out.pop(g, None)
        return GroupAlgebraElement(self.n, self.params, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgebraElement(self.n, self.params, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (GroupAlgebraElement, SignedPerm)):
            return ga_mul(self, self._coerce(other))
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(self.params, other)
        return GroupAlgebraElement(self.n, self.params, {g: c * other for g, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, SignedPerm):
            return ga_mul(self._coerce(other), self)
        return self * other

    def commutator(self, other) -> "GroupAlgebraElement":
        other = self._coerce(other)
        return self * other - other * self

    def anticommutator(self, other) -> "GroupAlgebraElement":
        other = self._coerce(other)
        return self * other + other * self

    def act(self, f: XPoly) -> XPoly:
        out = f.ring.zero()
        for g, c in self.terms.items():
            out = out + act(g, f).scale(c)
        return out

    def with_params(self, params: tuple[str, ...]) -> "GroupAlgebraElement":
        """Re-declare constant-coefficient elements over another parameter list."""
        out = {}
        for g, c in self.terms.items():
            if not c.is_constant():
                raise StructureError("only constant coefficients can change parameter list")
            out[g] = ParamPoly.const(params, c.constant_value())
        return GroupAlgebraElement(self.n, params, out)

    def __str__(self):
        from .textform import format_group_element

        return format_group_element(self)

    def __repr__(self):
        return f"GroupAlgebraElement({str(self)!r})"


def ga_mul(u: GroupAlgebraElement, v: GroupAlgebraElement) -> GroupAlgebraElement:
    if u.n != v.n or u.params != v.params:
        raise StructureError("group algebra elements over different rings")
    out: dict = {}
    for g, c in u.terms.items():
        for h, d in v.terms.items():
            k = g * h
            w = c * d
            out[k] = out[k] + w if k in out else w
    return GroupAlgebraElement(u.n, u.params, out)


def group_closure(generators: list[SignedPerm]) -> set[SignedPerm]:
    """All products of the generators (breadth-first)."""
    if not generators:
        return set()
    n = generators[0].n
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def _elem(n, params, *words_and_coeffs):
    """Build sum(coeff * product(word)) from (coeff, [SignedPerm, ...]) pairs."""
    total = GroupAlgebraElement.zero(n, params)
    for coeff, word in words_and_coeffs:
        g = identity(n)
        for w in word:
            g = g * w
        total = total + GroupAlgebraElement.of(g, params, coeff)
    return total


def q_ij(i: int, j: int, n: int = 3, params: tuple[str, ...] = ()) -> GroupAlgebraElement:
    """The B_3 involutions Q_12, Q_13, Q_23 (symmetric in the two indices)."""
    if n != 3:
        raise ValueError("Q_ij is only defined for B_3")
    pair = tuple(sorted((i, j)))
    if pair not in {(1, 2), (1, 3), (2, 3)}:
        raise IndexError(f"Q_ij needs two distinct indices in 1..3, got ({i}, {j})")
    R = {k: reflection(3, k) for k in (1, 2, 3)}
    half = mpq(1, 2)
    if pair == (1, 2):
        p = transposition(3, 1, 2)
        return _elem(3, params, (half, [p]), (half, [R[1], p]), (half, [R[2], p]), (-half, [R[1], R[2], p]))
    if pair == (2, 3):
        p = transposition(3, 2, 3)
        return _elem(3, params, (half, [p]), (half, [R[2], p]), (half, [R[3], p]), (-half, [R[2], R[3], p]))
    p = transposition(3, 1, 3)
    return _elem(
        3, params,
        (half, [R[1], p]), (half, [R[2], p]), (half, [R[3], p]), (-half, [R[1], R[2], R[3], p]),
    )


def jucys_murphy(n: int = 3, params: tuple[str, ...] = ()) -> list[GroupAlgebraElement]:
    """[R_1, R_2, R_3, m_2, m_3] for B_3."""
    if n != 3:
        raise ValueError("Jucys-Murphy elements are provided for B_3 only")
    R = {k: reflection(3, k) for k in (1, 2, 3)}
    pi = {(1, 2): transposition(3, 1, 2), (1, 3): transposition(3, 1, 3), (2, 3): transposition(3, 2, 3)}
    refl = [GroupAlgebraElement.of(R[k], params) for k in (1, 2, 3)]
    m2 = _elem(3, params, (1, [pi[1, 2]]), (1, [R[1], R[2], pi[1, 2]]))
    m3 = _elem(
        3, params,
        (1, [pi[1, 3]]), (1, [R[1], R[3], pi[1, 3]]),
        (1, [pi[2, 3]]), (1, [R[2], R[3], pi[2, 3]]),
    )
    return refl + [m2, m3]

