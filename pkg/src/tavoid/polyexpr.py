"""Factored polynomial expressions such as ``(t+3/5)^2*(t-7/15)``.

Grammar (whitespace ignored)::

    Expr   := Term ('*' Term)*
    Term   := Factor ('^' uint)?
    Factor := '(' 't' (('+'|'-') Rat)? ')' | 't' | Rat
    Rat    := '-'? uint ('/' uint)?
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Poly, format_rational

__all__ = ["PolyExpr", "PolySyntaxError", "parse_poly"]


class PolySyntaxError(ValueError):
    def __init__(self, msg: str, pos: int, text: str):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos


@dataclass(frozen=True)
class PolyExpr:
    """``leading * prod (t - root)^mult``; factors kept in source order."""

    leading: Fraction
    factors: tuple[tuple[Fraction, int], ...]
    source: str = ""

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def to_poly(self) -> Poly:
        p = Poly.const(self.leading)
        for r, m in self.factors:
            p = p * Poly.linear(r) ** m
        return p

    def roots(self) -> dict[Fraction, int]:
        out: dict[Fraction, int] = {}
        for r, m in self.factors:
            out[r] = out.get(r, 0) + m
        return out

    def __str__(self) -> str:
        parts = [] if self.leading == 1 and self.factors else [format_rational(self.leading)]
        for r, m in self.factors:
            if r == 0:
                f = "(t)"
            elif r > 0:
                f = f"(t-{format_rational(r)})"
            else:
                f = f"(t+{format_rational(-r)})"
            parts.append(f if m == 1 else f"{f}^{m}")
        return "*".join(parts)

    def structure(self) -> tuple:
        return (self.leading, self.factors)


_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:  # trailing whitespace
                break
            if m.group(1) is not None:
                self.toks.append(("num", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.toks.append(("sym", m.group(2), m.start(2)))
            pos = m.end()
        self.i = 0

    def err(self, msg: str):
        pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        raise PolySyntaxError(msg, pos, self.text)

    def peek(self, value: str | None = None, kind: str = "sym") -> bool:
        if self.i >= len(self.toks):
            return False
        k, v, _ = self.toks[self.i]
        return k == kind and (value is None or v == value)

    def take(self, value: str | None = None, kind: str = "sym") -> str:
        if not self.peek(value, kind):
            self.err(f"expected {value or kind}")
        v = self.toks[self.i][1]
        self.i += 1
        return v

    def uint(self) -> int:
        return int(self.take(kind="num"))

    def rat(self) -> Fraction:
        neg = False
        if self.peek("-"):
            self.take("-")
            neg = True
        num = self.uint()
        den = 1
        if self.peek("/"):
            self.take("/")
            den = self.uint()
            if den == 0:
                self.i -= 1
                self.err("zero denominator")
        r = Fraction(num, den)
        return -r if neg else r

    def factor(self):
        """Returns ``('root', r)`` or ``('const', c)``."""
        if self.peek("("):
            self.take("(")
            self.take("t")
            root = Fraction(0)
            if self.peek("+") or self.peek("-"):
                sign = self.take()
                r = self.rat()
                root = -r if sign == "+" else r
            self.take(")")
            return "root", root
        if self.peek("t"):
            self.take("t")
            return "root", Fraction(0)
        if self.peek(kind="num") or self.peek("-"):
            return "const", self.rat()
        self.err("expected a factor")

    def expr(self) -> tuple[Fraction, list]:
        leading = Fraction(1)
        factors = []
        while True:
            kind, val = self.factor()
            mult = 1
            if self.peek("^"):
                self.take("^")
                mult = self.uint()
            if kind == "root":
                if mult == 0:
                    continue
                factors.append((val, mult))
            else:
                leading *= val**mult
            if not self.peek("*"):
                break
            self.take("*")
        if self.i != len(self.toks):
            self.err("unexpected trailing input")
        return leading, factors


def parse_poly(text: str) -> PolyExpr:
    if not text.strip():
        raise PolySyntaxError("empty expression", 0, text)
    leading, factors = _Parser(text).expr()
    return PolyExpr(leading, tuple(factors), text)
