"""Reading and writing univariate integer polynomials.

Grammar (whitespace is ignored everywhere)::

    poly  := sign? term (("+" | "-") term)*
    term  := INT | INT "*"? mono | mono
    mono  := "x" ("^" INT)?

Repeated powers are summed.  A JSON array of integers (constant term first)
is accepted as well.
"""
from __future__ import annotations

import json

from .errors import PolySyntaxError
from .polys import IntPoly


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def offset(self) -> int:
        # byte offset, so multi-byte characters earlier in the input count correctly
        return len(self.text[: self.pos].encode("utf-8"))

    def fail(self, msg):
        raise PolySyntaxError(msg, self.offset())

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        digits = self.text[start:self.pos]
        if self.pos < len(self.text) and self.text[self.pos] in "./eE":
            self.fail("non-integer coefficient")
        return int(digits)


def _term(sc: _Scanner) -> tuple[int, int]:
    c = sc.peek()
    coeff = 1
    if c.isdigit():
        coeff = sc.integer()
        nxt = sc.peek()
        if nxt == "*":
            sc.pos += 1
            if sc.peek() != "x":
                sc.fail("expected 'x' after '*'")
        elif nxt != "x":
            return coeff, 0
    elif c != "x":
        sc.fail("expected a term" if c else "unexpected end of input")
    sc.pos += 1  # the 'x'
    power = 1
    if sc.peek() == "^":
        sc.pos += 1
        if sc.peek() in "+-":
            sc.fail("negative or signed exponent")
        power = sc.integer()
    return coeff, power


def parse_poly(s) -> IntPoly:
    """Parse a polynomial string (or a list / JSON array of coefficients) into an IntPoly."""
    if isinstance(s, (list, tuple)):
        return IntPoly([_check_int(a, i) for i, a in enumerate(s)])
    stripped = s.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PolySyntaxError(f"bad JSON array: {exc.msg}", exc.pos) from None
        if not isinstance(data, list):
            raise PolySyntaxError("expected a JSON array", 0)
        return IntPoly([_check_int(a, i) for i, a in enumerate(data)])

    sc = _Scanner(s)
    if not sc.peek():
        sc.fail("empty polynomial")
    coeffs: dict[int, int] = {}
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.peek() == "-" else 1
        sc.pos += 1
    while True:
        c, k = _term(sc)
        coeffs[k] = coeffs.get(k, 0) + sign * c
        nxt = sc.peek()
        if not nxt:
            break
        if nxt not in "+-":
            sc.fail(f"unexpected character {nxt!r}")
        sign = -1 if nxt == "-" else 1
        sc.pos += 1
    deg = max(coeffs)
    return IntPoly([coeffs.get(i, 0) for i in range(deg + 1)])


def _check_int(a, i) -> int:
    if isinstance(a, bool) or not isinstance(a, int):
        raise PolySyntaxError(f"coefficient {a!r} is not an integer", i)
    return a


def render_poly(p: IntPoly) -> str:
    """Canonical descending-power rendering, e.g. ``x^7 - 3x^6 + 1``."""
    coeffs = p.coeffs if isinstance(p, IntPoly) else IntPoly(p).coeffs
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
