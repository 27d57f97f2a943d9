"""Parser and formatter for rational maps written in ``z``.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NUMBER 'i' | 'i' | 'z' | '(' expr ')'

Numbers are decimal or scientific; ``2i`` and ``2.5e-1i`` are imaginary
literals, so ``1-0.5i`` reads as a complex constant. Exponents are
nonnegative integers.
"""
from __future__ import annotations

import re

from .errors import InvalidMapError, ZeroDenominatorError
from .polynomial import ComplexPoly
from .rational import COPRIME_TOL, RationalMap


class MapSyntaxError(InvalidMapError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?P<imag>[ij](?![A-Za-z0-9_]))?"
    r"|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise MapSyntaxError(f"unexpected character {text[start]!r}", start, text)
        start = m.start(m.lastgroup) if m.lastgroup else pos
        if m.group("num") is not None:
            start = m.start("num")
            val = float(m.group("num"))
            out.append(("num", 1j * val if m.group("imag") else complex(val), start, m.group("num")))
        elif m.group("name") is not None:
            name = m.group("name")
            if name not in ("z", "i", "j"):
                raise MapSyntaxError(f"unknown name {name!r}", m.start("name"), text)
            out.append(("name", name, m.start("name"), name))
        else:
            out.append(("op", m.group("op"), m.start("op"), m.group("op")))
        pos = m.end()
    out.append(("end", None, len(text), ""))
    return out


class _Frac:
    """Unreduced pair of polynomials used while parsing."""

    __slots__ = ("num", "den")

    def __init__(self, num: ComplexPoly, den: ComplexPoly | None = None):
        self.num = num
        self.den = ComplexPoly([1]) if den is None else den

    def __add__(self, o):
        return _Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _Frac(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _Frac(self.num * o.num, self.den * o.den)

    def __neg__(self):
        return _Frac(-self.num, self.den)

    def __pow__(self, n):
        return _Frac(self.num**n, self.den**n)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = self.peek() if tok is None else tok
        raise MapSyntaxError(msg, tok[2], self.text)

    def parse(self) -> _Frac:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        val = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[3]!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            rhs = self.factor()
            if op[1] == "*":
                val = val * rhs
            else:
                if rhs.num.is_zero():
                    raise ZeroDenominatorError(f"division by zero at position {op[2]}")
                val = _Frac(val.num * rhs.den, val.den * rhs.num)
        return val

    def factor(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.factor()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num" or tok[1].imag != 0 or not re.fullmatch(r"\d+", tok[3]):
                self.fail("exponent must be a nonnegative integer", tok)
            base = base ** int(tok[3])
        return base

    def atom(self):
        tok = self.take()
        kind, val = tok[0], tok[1]
        if kind == "num":
            return _Frac(ComplexPoly([val]))
        if kind == "name":
            if val == "z":
                return _Frac(ComplexPoly([0, 1]))
            return _Frac(ComplexPoly([1j]))
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail(f"unexpected {tok[3] or 'end of input'!r}", tok)


def parse_map(text: str, coprime_tol: float = COPRIME_TOL) -> RationalMap:
    """Parse an expression in ``z`` into a reduced, canonical rational map."""
    frac = _Parser(text).parse()
    if frac.den.is_zero():
        raise ZeroDenominatorError("denominator is identically zero")
    return RationalMap(frac.num, frac.den, coprime_tol=coprime_tol)


def parse_complex(text: str) -> complex:
    """Parse a constant such as ``0.25``, ``-1e-3i`` or ``0.1+0.2i``."""
    frac = _Parser(text).parse()
    if frac.num.degree() > 0 or frac.den.degree() > 0:
        raise MapSyntaxError("expected a constant", 0, text)
    if frac.den.is_zero() or frac.den.coeffs[0] == 0:
        raise ZeroDenominatorError("division by zero")
    return complex(frac.num.coeffs[0] / frac.den.coeffs[0])


def format_complex(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        return repr(c.real)
    sign = "-" if c.imag < 0 or (c.imag == 0 and str(c.imag).startswith("-")) else "+"
    return f"({c.real!r}{sign}{abs(c.imag)!r}i)"


def format_poly(p: ComplexPoly) -> str:
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0 and p.degree() > 0:
            continue
        coeff = format_complex(c)
        if k == 0:
            terms.append(coeff)
        elif k == 1:
            terms.append(f"{coeff}*z")
        else:
            terms.append(f"{coeff}*z^{k}")
    return " + ".join(terms)


def format_map(R: RationalMap) -> str:
    """Text that :func:`parse_map` reads back to an identical map."""
    if R.is_polynomial() and R.denom.coeffs == (1 + 0j,):
        return format_poly(R.num)
    return f"({format_poly(R.num)})/({format_poly(R.denom)})"
