"""Text syntax for paths and polynomials.

    e2*e1*e2 - e1*e2*e1 + 2/9 e2 - 2/9 e1
    a*b^3 - a*b^2 - a*b + a
    1(B)            identity at B ("1" alone if the quiver has one object)
    A|e2*e1 - A|1   tagged terms
"""
from __future__ import annotations

import re
from fractions import Fraction

from .algebra import PathPolynomial, zero
from .errors import PathGBError, PresentationSyntaxError, SemanticError
from .quiver import TAG_OBJECT, TAG_SUFFIX, Path, Quiver

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*/^|()]))")


class _Scanner:
    def __init__(self, text: str, line: int | None, col0: int):
        self.text = text
        self.line = line
        self.col0 = col0
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                self.error(f"unexpected character {text[pos:].lstrip()[0]!r}", pos + len(text[pos:]) - len(text[pos:].lstrip()))
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def error(self, msg: str, pos: int | None = None):
        col = None if pos is None else self.col0 + pos + 1
        raise PresentationSyntaxError(msg, self.line, col)

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else (None, None, len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            self.error(f"expected {op!r}", pos)


def _parse_path(sc: _Scanner, quiver: Quiver, default_base: str | None) -> Path:
    """monomial := [NAME '|'] (factor ('*' factor)* | '1' ['(' NAME ')'])"""
    arrows: list[str] = []
    start = sc.peek()[2]
    kind, val, pos = sc.peek()
    if kind == "name" and sc.peek(1)[0] == "op" and sc.peek(1)[1] == "|":
        sc.take()
        sc.take()
        arrows.append(val + TAG_SUFFIX)
        kind, val, pos = sc.peek()
    if kind == "num" and val == "1":
        sc.take()
        base = None
        if sc.peek()[:2] == ("op", "("):
            sc.take()
            k2, base, p2 = sc.take()
            if k2 != "name":
                sc.error("expected object name", p2)
            sc.expect_op(")")
        if arrows:
            try:
                return quiver.path(arrows)
            except PathGBError as e:
                sc.error(str(e), start)
        base = base or default_base
        if base is None:
            sc.error("identity needs an object, write 1(OBJ)", pos)
        if base not in quiver.objects:
            sc.error(f"unknown object {base!r}", pos)
        return Path(base, base, ())
    while True:
        kind, val, pos = sc.take()
        if kind != "name":
            sc.error("expected an arrow name", pos)
        power = 1
        if sc.peek()[:2] == ("op", "^"):
            sc.take()
            k2, v2, p2 = sc.take()
            if k2 != "num":
                sc.error("expected an exponent", p2)
            power = int(v2)
        arrows.extend([val] * power)
        if sc.peek()[:2] == ("op", "*") and sc.peek(1)[0] == "name":
            sc.take()
            continue
        break
    if not arrows:
        # a^0 with nothing else
        if default_base is None:
            sc.error("identity needs an object, write 1(OBJ)", start)
        return Path(default_base, default_base, ())
    try:
        return quiver.path(arrows)
    except PathGBError as e:
        sc.error(str(e), start)


def parse_polynomial(text: str, quiver: Quiver, src: str | None = None, tgt: str | None = None,
                     line: int | None = None, col0: int = 0) -> PathPolynomial:
    sc = _Scanner(text, line, col0)
    plain = [o for o in quiver.objects if o != TAG_OBJECT]
    default_base = src if src is not None and src == tgt else (plain[0] if len(plain) == 1 else None)
    terms: list[tuple[Path, Fraction, int]] = []
    if not sc.toks:
        sc.error("empty polynomial", 0)
    first = True
    while sc.peek()[0] is not None:
        kind, val, pos = sc.peek()
        sign = 1
        if kind == "op" and val in "+-":
            sc.take()
            sign = -1 if val == "-" else 1
        elif not first:
            sc.error("expected '+' or '-'", pos)
        first = False
        kind, val, pos = sc.peek()
        coef = Fraction(1)
        explicit = False
        if kind == "num" and not (val == "1" and sc.peek(1)[:2] == ("op", "(")):
            sc.take()
            coef = Fraction(int(val))
            explicit = True
            if sc.peek()[:2] == ("op", "/"):
                sc.take()
                k2, v2, p2 = sc.take()
                if k2 != "num" or int(v2) == 0:
                    sc.error("expected a nonzero denominator", p2)
                coef /= int(v2)
            if sc.peek()[:2] == ("op", "*"):
                sc.take()
        nxt = sc.peek()
        if explicit and (nxt[0] is None or (nxt[0] == "op" and nxt[1] in "+-")):
            if coef == 0:
                continue
            if default_base is None:
                sc.error("constant term needs an object, write k 1(OBJ)", pos)
            path = Path(default_base, default_base, ())
        else:
            path = _parse_path(sc, quiver, default_base)
        terms.append((path, sign * coef, pos))
    if not terms:
        if src is None or tgt is None:
            if default_base is None:
                sc.error("zero polynomial needs endpoints", 0)
            src = tgt = default_base
        return zero(src, tgt)
    s, t = (src, tgt) if src is not None else (terms[0][0].src, terms[0][0].tgt)
    for p, _, pos in terms:
        if (p.src, p.tgt) != (s, t):
            raise SemanticError(f"term {p} is {p.src} -> {p.tgt}, expected {s} -> {t}", line,
                                col0 + pos + 1)
    return PathPolynomial(s, t, [(p, k) for p, k, _ in terms])


def parse_path(text: str, quiver: Quiver) -> Path:
    f = parse_polynomial(text, quiver)
    if len(f) != 1 or next(iter(f))[1] != 1:
        raise PresentationSyntaxError(f"{text!r} is not a single path")
    return next(iter(f))[0]
