"""Exact K-linear combinations of parallel paths (arrows of the free K-category).

Coefficients are :class:`fractions.Fraction`. A polynomial always carries its
endpoints, so the zero polynomial of ``B1 -> B2`` differs from that of
``B2 -> B2``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import NotComposable, TypeMismatch, ZeroPolynomial
from .quiver import Path, PathOrder, compose, format_path

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]


def as_scalar(k: ScalarLike) -> Fraction:
    return k if isinstance(k, Fraction) else Fraction(k)


def format_scalar(k: Fraction) -> str:
    return str(k.numerator) if k.denominator == 1 else f"{k.numerator}/{k.denominator}"


class PathPolynomial:
    """``k1*m1 + ... + kn*mn`` with every ``mi`` a path ``src -> tgt``.

    Instances are treated as immutable; every operation returns a new one.
    """

    __slots__ = ("src", "tgt", "terms", "_hash")

    def __init__(self, src: str, tgt: str, terms: Mapping[Path, ScalarLike] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Path, Fraction] = {}
        for p, k in items:
            if p.src != src or p.tgt != tgt:
                raise TypeMismatch(f"term {p} is not a path {src} -> {tgt}")
            k = as_scalar(k)
            total = clean.get(p, 0) + k
            if total:
                clean[p] = total
            else:
                clean.pop(p, None)
        self.src = src
        self.tgt = tgt
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, src: str, tgt: str, terms: dict[Path, Fraction]) -> "PathPolynomial":
        # trusted constructor: terms already parallel with nonzero coefficients
        f = cls.__new__(cls)
        f.src, f.tgt, f.terms, f._hash = src, tgt, terms, None
        return f

    @classmethod
    def from_path(cls, p: Path, k: ScalarLike = 1) -> "PathPolynomial":
        k = as_scalar(k)
        return cls._raw(p.src, p.tgt, {p: k} if k else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Path, Fraction]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathPolynomial):
            return NotImplemented
        return self.src == other.src and self.tgt == other.tgt and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, frozenset(self.terms.items())))
        return self._hash

    def coefficient(self, p: Path) -> Fraction:
        return self.terms.get(p, Fraction(0))

    def sorted_terms(self, order: PathOrder) -> list[tuple[Path, Fraction]]:
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def degree(self) -> int:
        return max((len(p) for p in self.terms), default=-1)

    def __add__(self, other: "PathPolynomial") -> "PathPolynomial":
        return add(self, other)

    def __neg__(self) -> "PathPolynomial":
        return scalar_mul(-1, self)

    def __sub__(self, other: "PathPolynomial") -> "PathPolynomial":
        return add(self, scalar_mul(-1, other))

    def __mul__(self, other):
        if isinstance(other, PathPolynomial):
            return mul(self, other)
        if isinstance(other, Path):
            return mul(self, PathPolynomial.from_path(other))
        return scalar_mul(other, self)

    def __rmul__(self, other):
        if isinstance(other, Path):
            return mul(PathPolynomial.from_path(other), self)
        return scalar_mul(other, self)

    def __repr__(self) -> str:
        return f"PathPolynomial({self.src!r}, {self.tgt!r}, {format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


def zero(src: str, tgt: str) -> PathPolynomial:
    return PathPolynomial._raw(src, tgt, {})


def add(f: PathPolynomial, g: PathPolynomial) -> PathPolynomial:
    if (f.src, f.tgt) != (g.src, g.tgt):
        raise TypeMismatch(f"cannot add {f.src}->{f.tgt} and {g.src}->{g.tgt}")
    out = dict(f.terms)
    for p, k in g.terms.items():
        s = out.get(p, 0) + k
        if s:
            out[p] = s
        else:
            del out[p]
    return PathPolynomial._raw(f.src, f.tgt, out)


def scalar_mul(k: ScalarLike, f: PathPolynomial) -> PathPolynomial:
    k = as_scalar(k)
    if not k:
        return zero(f.src, f.tgt)
    return PathPolynomial._raw(f.src, f.tgt, {p: c * k for p, c in f.terms.items()})


def mul(f: PathPolynomial, g: PathPolynomial) -> PathPolynomial:
    if f.tgt != g.src:
        raise NotComposable(f"cannot multiply {f.src}->{f.tgt} by {g.src}->{g.tgt}")
    out: dict[Path, Fraction] = {}
    for p, a in f.terms.items():
        for q, b in g.terms.items():
            m = compose(p, q)
            s = out.get(m, 0) + a * b
            if s:
                out[m] = s
            else:
                del out[m]
    return PathPolynomial._raw(f.src, g.tgt, out)


def sandwich(u: Path, f: PathPolynomial, v: Path, k: ScalarLike = 1) -> PathPolynomial:
    """``k * u * f * v`` for paths ``u`` and ``v``."""
    if u.tgt != f.src or f.tgt != v.src:
        raise NotComposable(f"cannot form {u}*({f})*{v}")
    k = as_scalar(k)
    if not k:
        return zero(u.src, v.tgt)
    ua, va = u.arrows, v.arrows
    return PathPolynomial._raw(
        u.src, v.tgt, {Path(u.src, v.tgt, ua + p.arrows + va): c * k for p, c in f.terms.items()}
    )


def leading_term(f: PathPolynomial, order: PathOrder) -> tuple[Path, Fraction]:
    if not f.terms:
        raise ZeroPolynomial("the zero polynomial has no leading term")
    p = max(f.terms, key=order.key)
    return p, f.terms[p]


def monic(f: PathPolynomial, order: PathOrder) -> PathPolynomial:
    _, k = leading_term(f, order)
    return f if k == 1 else scalar_mul(1 / k, f)


def format_polynomial(f: PathPolynomial, order: PathOrder | None = None) -> str:
    """Canonical text: terms descending, ``2/9 e2``-style coefficients."""
    if not f.terms:
        return "0"
    if order is not None:
        items = f.sorted_terms(order)
    else:
        items = sorted(f.terms.items(), key=lambda t: (-len(t[0]), t[0].arrows))
    parts = []
    for i, (p, k) in enumerate(items):
        sign = "-" if k < 0 else "+"
        k = abs(k)
        body = format_path(p)
        if k != 1:
            body = f"{format_scalar(k)} {body}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
