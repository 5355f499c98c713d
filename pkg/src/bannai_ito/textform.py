"""Canonical text form for polynomials and operator expressions.

Printing: terms joined by ``+``/``-`` with no spaces, monomials like
``3/2*a^2*x1*x3^2*e1*e2``; a coefficient with several parameter terms is
parenthesised, e.g. ``(1+4*a+2*b)*x1``.  Parsing accepts that form back, plus
parentheses, ``^`` powers, ``[X,Y]`` commutators and ``{X,Y}`` anticommutators.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .exactring import ParamPoly, Ring, XPoly, mpq

__all__ = [
    "ParseError",
    "format_param_poly",
    "format_xpoly",
    "format_clifford_poly",
    "format_group_element",
    "parse_poly",
    "parse_operator",
]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


# -- printing ---------------------------------------------------------------

def _monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _term(c: mpq, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _join(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def format_param_poly(p: ParamPoly) -> str:
    return _join([_term(c, _monomial(p.params, e)) for e, c in p.sorted_terms()])


def _with_coefficient(c: ParamPoly, mono: str) -> str:
    if len(c.terms) == 1:
        (pe, q), = c.terms.items()
        pm = _monomial(c.params, pe)
        full = "*".join(s for s in (pm, mono) if s)
        return _term(q, full)
    body = f"({format_param_poly(c)})"
    return f"{body}*{mono}" if mono else body


def format_xpoly(p: XPoly) -> str:
    names = [f"x{i}" for i in range(1, p.ring.nvars + 1)]
    return _join([_with_coefficient(c, _monomial(names, e)) for e, c in p.sorted_terms()])


def format_clifford_poly(v) -> str:
    from .clifford import indices_of

    names = [f"x{i}" for i in range(1, v.ring.nvars + 1)]
    terms = []
    for mask, xe, c in v.sorted_terms():
        mono = "*".join(s for s in (_monomial(names, xe), "*".join(f"e{i}" for i in indices_of(mask))) if s)
        terms.append(_with_coefficient(c, mono))
    return _join(terms)


def format_group_element(u) -> str:
    items = sorted(u.terms.items(), key=lambda t: (len(t[0].word()), t[0].word()))
    return _join([_with_coefficient(c, "" if g.is_identity() else str(g)) for g, c in items])


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


@dataclass
class _Tok:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1):
            out.append(_Tok("num", m.group(1), m.start(1)))
        elif m.group(2):
            out.append(_Tok("name", m.group(2), m.start(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()[]{},":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            out.append(_Tok("op", ch, m.start(3)))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, sem):
        self.toks = _tokenize(text)
        self.i = 0
        self.sem = sem

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self, text=None) -> _Tok:
        t = self.tok
        if text is not None and t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.pos)
        self.i += 1
        return t

    def parse(self):
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        v = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return v

    def expr(self):
        v = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.take().text
            w = self.term()
            v = self.sem.add(v, w) if op == "+" else self.sem.sub(v, w)
        return v

    def term(self):
        v = self.unary()
        while self.tok.kind == "op" and self.tok.text in ("*", "/"):
            t = self.take()
            w = self.unary()
            v = self.sem.mul(v, w) if t.text == "*" else self.sem.div(v, w, t.pos)
        return v

    def unary(self):
        if self.tok.kind == "op" and self.tok.text in ("+", "-"):
            op = self.take().text
            v = self.unary()
            return self.sem.neg(v) if op == "-" else v
        return self.power()

    def power(self):
        v = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.take()
            t = self.tok
            if t.kind != "num":
                raise ParseError("exponent must be a non-negative integer", t.pos)
            self.take()
            v = self.sem.pow(v, int(t.text))
        return v

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return self.sem.number(int(t.text))
        if t.kind == "name":
            self.take()
            return self.sem.name(t.text, t.pos)
        if t.text == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if t.text in ("[", "{"):
            close = "]" if t.text == "[" else "}"
            self.take()
            x = self.expr()
            self.take(",")
            y = self.expr()
            self.take(close)
            return self.sem.commutator(x, y) if close == "]" else self.sem.anticommutator(x, y)
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)


_INDEXED = re.compile(r"^([xe])_?(\d+)$")


class _PolySemantics:
    def __init__(self, ring: Ring):
        self.ring = ring

    def _const(self, value):
        from .clifford import CliffordPoly

        return CliffordPoly.from_xpoly(self.ring.one().scale(value))

    def number(self, k):
        return self._const(k)

    def name(self, text, pos):
        from .clifford import CliffordElement, CliffordPoly

        ring = self.ring
        m = _INDEXED.match(text)
        if m:
            i = int(m.group(2))
            if not 1 <= i <= ring.nvars:
                raise ParseError(f"index {i} of {text!r} outside 1..{ring.nvars}", pos)
            if m.group(1) == "x":
                return CliffordPoly.from_xpoly(ring.x(i))
            return CliffordPoly.from_clifford(ring, CliffordElement.e(ring.nvars, i, ring.params))
        if text in ring.params:
            return self._const(ring.param(text))
        raise ParseError(f"unknown symbol {text!r}", pos)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def div(self, x, y, pos):
        q = _rational_value(y, pos)
        return x.scale(mpq(1) / q)

    def pow(self, x, k):
        out = self._const(1)
        for _ in range(k):
            out = out * x
        return out

    def commutator(self, x, y):
        return x * y - y * x

    def anticommutator(self, x, y):
        return x * y + y * x


def _rational_value(v, pos) -> mpq:
    from .clifford import CliffordPoly

    if isinstance(v, CliffordPoly):
        if not v.terms:
            raise ParseError("division by zero", pos)
        if len(v.terms) == 1:
            (k, q), = v.terms.items()
            if k == 0:
                return q
    elif isinstance(v, ParamPoly) and v.is_constant() and v:
        return v.constant_value()
    raise ParseError("can only divide by a nonzero rational constant", pos)


def parse_poly(text: str, ring: Ring):
    """Parse the text form into a CliffordPoly (mask 0 only for ordinary polynomials)."""
    return _Parser(text, _PolySemantics(ring)).parse()


class _OpSemantics:
    """Values are ParamPoly scalars or Operators; scalars stay scalars until needed."""

    def __init__(self, ring: Ring, resolve: Callable[[str], object]):
        self.ring = ring
        self.resolve = resolve

    def _is_scalar(self, v):
        return isinstance(v, ParamPoly)

    def _as_op(self, v):
        from .opcalc import Identity

        return Identity(self.ring) * v if self._is_scalar(v) else v

    def number(self, k):
        return self.ring.const(k)

    def name(self, text, pos):
        if text in self.ring.params:
            return self.ring.param(text)
        m = _INDEXED.match(text)
        try:
            if m:
                from .clifford import CliffordElement
                from .opcalc import Multiply

                i = int(m.group(2))
                if not 1 <= i <= self.ring.nvars:
                    raise ParseError(f"index {i} of {text!r} outside 1..{self.ring.nvars}", pos)
                if m.group(1) == "x":
                    return Multiply(self.ring, self.ring.x(i))
                return Multiply(self.ring, CliffordElement.e(self.ring.nvars, i, self.ring.params))
            return self.resolve(text)
        except (KeyError, IndexError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"unknown operator {text!r}", pos) from None

    def add(self, x, y):
        if self._is_scalar(x) and self._is_scalar(y):
            return x + y
        return self._as_op(x) + self._as_op(y)

    def sub(self, x, y):
        if self._is_scalar(x) and self._is_scalar(y):
            return x - y
        return self._as_op(x) - self._as_op(y)

    def neg(self, x):
        return -x

    def mul(self, x, y):
        if self._is_scalar(x):
            return x * y if self._is_scalar(y) else y * x
        return x * y

    def div(self, x, y, pos):
        q = _rational_value(y, pos) if self._is_scalar(y) else None
        if q is None:
            raise ParseError("can only divide by a nonzero rational constant", pos)
        return x * (mpq(1) / q)

    def pow(self, x, k):
        return x ** k

    def commutator(self, x, y):
        from .opcalc import commutator

        return commutator(self._as_op(x), self._as_op(y))

    def anticommutator(self, x, y):
        from .opcalc import anticommutator

        return anticommutator(self._as_op(x), self._as_op(y))


def parse_operator(text: str, ring: Ring, resolve: Callable[[str], object]):
    """Parse an operator expression; ``resolve`` maps names like ``C_12`` to Operators."""
    v = _Parser(text, _OpSemantics(ring, resolve)).parse()
    if isinstance(v, ParamPoly):
        from .opcalc import Identity

        v = Identity(ring) * v
    return v

