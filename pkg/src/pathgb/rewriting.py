"""The reduction relation of a set of monic relations, and normal forms.

Deterministic strategy: always rewrite the greatest reducible term; among the
rules applying to it take the lowest index, and among that rule's occurrences
the leftmost one.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import PathPolynomial, format_polynomial, leading_term, monic, zero
from .errors import InternalLimit, NotComplete, QuiverError, TypeMismatch
from .quiver import Path, PathOrder, Quiver

MAX_REDUCTION_STEPS = 1_000_000


class Status(Enum):
    CANDIDATE = "candidate"
    COMPLETE = "complete"


@dataclass(frozen=True)
class Rule:
    """A monic relation ``lt + rem``, read as the rewrite ``lt -> -rem``."""

    poly: PathPolynomial
    lt: Path
    rem: PathPolynomial

    @classmethod
    def from_polynomial(cls, f: PathPolynomial, order: PathOrder) -> "Rule":
        f = monic(f, order)
        lt, _ = leading_term(f, order)
        terms = dict(f.terms)
        del terms[lt]
        return cls(f, lt, PathPolynomial._raw(f.src, f.tgt, terms))

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class Occurrence:
    rule: int
    offset: int
    u: Path
    v: Path


def check_polynomial(quiver: Quiver, f: PathPolynomial) -> None:
    for p in f.terms:
        if p.arrows:
            if quiver.path(p.arrows) != p:
                raise QuiverError(f"term {p} has wrong endpoints")
        elif p.src not in quiver.objects:
            raise QuiverError(f"unknown object {p.src!r}")


class RewriteSystem:
    """Oriented monic rules over a quiver, with a completeness flag.

    ``status`` becomes ``COMPLETE`` only through :func:`pathgb.completion.is_groebner`
    or :func:`pathgb.completion.buchberger`.
    """

    def __init__(self, quiver: Quiver, order: PathOrder, rules: Sequence[Rule] = (),
                 status: Status = Status.CANDIDATE):
        self.quiver = quiver
        self.order = order
        self.rules: tuple[Rule, ...] = tuple(rules)
        self.status = status

    @classmethod
    def from_polynomials(cls, quiver: Quiver, order: PathOrder, polys: Iterable[PathPolynomial],
                         validate: bool = True) -> "RewriteSystem":
        if validate:
            order.check(quiver)
        rules = []
        for f in polys:
            if validate:
                check_polynomial(quiver, f)
            if f:
                rules.append(Rule.from_polynomial(f, order))
        return cls(quiver, order, rules)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RewriteSystem):
            return NotImplemented
        return (self.quiver == other.quiver and self.order == other.order
                and self.rules == other.rules and self.status == other.status)

    def __len__(self) -> int:
        return len(self.rules)

    def __repr__(self) -> str:
        return f"RewriteSystem({len(self.rules)} rules, {self.status.value})"

    @property
    def is_complete(self) -> bool:
        return self.status is Status.COMPLETE

    def polynomials(self) -> list[PathPolynomial]:
        return [r.poly for r in self.rules]

    def format_rules(self) -> list[str]:
        return [format_polynomial(r.poly, self.order) for r in self.rules]

    def replace(self, rules: Sequence[Rule], status: Status = Status.CANDIDATE) -> "RewriteSystem":
        """Copy with new rules; subclasses keep their extra attributes."""
        new = object.__new__(type(self))
        new.__dict__.update(self.__dict__)
        new.__dict__.pop("_index", None)
        new.rules = tuple(rules)
        new.status = status
        return new

    @cached_property
    def _index(self):
        by_lt: dict[tuple[str, ...], list[int]] = {}
        by_obj: dict[str, list[int]] = {}
        for i, r in enumerate(self.rules):
            if r.lt.arrows:
                by_lt.setdefault(r.lt.arrows, []).append(i)
            else:
                by_obj.setdefault(r.lt.src, []).append(i)
        lengths = sorted({len(k) for k in by_lt})
        return by_lt, by_obj, lengths

    def occurrences(self, p: Path) -> list[Occurrence]:
        """Every (rule, offset) whose leading term occurs inside ``p``."""
        by_lt, by_obj, lengths = self._index
        arrows = p.arrows
        n = len(arrows)
        found = []
        for length in lengths:
            if length > n:
                break
            for i in range(n - length + 1):
                for r in by_lt.get(arrows[i:i + length], ()):
                    found.append((r, i, length))
        objs = self.quiver.objects_along(p) if (found or by_obj) else None
        if by_obj:
            for i, o in enumerate(objs):
                for r in by_obj.get(o, ()):
                    found.append((r, i, 0))
        return [
            Occurrence(r, i, Path(p.src, objs[i], arrows[:i]), Path(objs[i + length], p.tgt, arrows[i + length:]))
            for r, i, length in found
        ]

    def first_occurrence(self, p: Path) -> Occurrence | None:
        occ = self.occurrences(p)
        if not occ:
            return None
        return min(occ, key=lambda o: (o.rule, o.offset))

    def is_reducible_path(self, p: Path) -> bool:
        by_lt, by_obj, lengths = self._index
        arrows = p.arrows
        n = len(arrows)
        for length in lengths:
            if length > n:
                break
            for i in range(n - length + 1):
                if arrows[i:i + length] in by_lt:
                    return True
        if by_obj:
            return any(o in by_obj for o in self.quiver.objects_along(p))
        return False


def _apply(work: dict, p: Path, c: Fraction, rule: Rule, occ: Occurrence) -> list[Path]:
    """Replace ``c*p`` (with ``p = u*lt*v``) by ``-c*u*rem*v`` in place."""
    del work[p]
    ua, va = occ.u.arrows, occ.v.arrows
    added = []
    for q, k in rule.rem.terms.items():
        m = Path(p.src, p.tgt, ua + q.arrows + va)
        s = work.get(m, 0) - c * k
        if s:
            work[m] = s
            added.append(m)
        else:
            del work[m]
    return added


def reduce_once(f: PathPolynomial, sys: RewriteSystem, rng: random.Random | None = None) -> PathPolynomial | None:
    """One reduction step, or ``None`` when ``f`` is irreducible.

    With ``rng`` the reducible term, rule and occurrence are picked at random.
    """
    order = sys.order
    if rng is None:
        for p, c in sorted(f.terms.items(), key=lambda t: order.key(t[0]), reverse=True):
            occ = sys.first_occurrence(p)
            if occ is not None:
                break
        else:
            return None
    else:
        reducible = [(p, c) for p, c in f.terms.items() if sys.is_reducible_path(p)]
        if not reducible:
            return None
        reducible.sort(key=lambda t: order.key(t[0]))
        p, c = rng.choice(reducible)
        occ = rng.choice(sys.occurrences(p))
    work = dict(f.terms)
    _apply(work, p, c, sys.rules[occ.rule], occ)
    return PathPolynomial._raw(f.src, f.tgt, work)


def _neg_key(order: PathOrder, p: Path) -> tuple:
    n, ranks, tag, obj = order.key(p)
    return (-n, tuple(-r for r in ranks), -tag, -obj)


def normal_form(f: PathPolynomial, sys: RewriteSystem, rng: random.Random | None = None,
                max_steps: int = MAX_REDUCTION_STEPS) -> PathPolynomial:
    """Reduce ``f`` until no term contains a leading term of ``sys``."""
    if not sys.rules:
        return f
    if rng is not None:
        steps = 0
        while True:
            g = reduce_once(f, sys, rng)
            if g is None:
                return f
            f = g
            steps += 1
            if steps > max_steps:
                raise InternalLimit("reduction did not terminate")
    order = sys.order
    work = dict(f.terms)
    heap = [(_neg_key(order, p), p) for p in work]
    heapq.heapify(heap)
    done: dict[Path, Fraction] = {}
    steps = 0
    while heap:
        _, p = heapq.heappop(heap)
        c = work.get(p)
        if c is None:
            continue
        occ = sys.first_occurrence(p)
        if occ is None:
            done[p] = work.pop(p)
            continue
        steps += 1
        if steps > max_steps:
            raise InternalLimit("reduction did not terminate")
        for m in _apply(work, p, c, sys.rules[occ.rule], occ):
            heapq.heappush(heap, (_neg_key(order, m), m))
    return PathPolynomial._raw(f.src, f.tgt, done)


def is_irreducible(f: PathPolynomial, sys: RewriteSystem) -> bool:
    return not any(sys.is_reducible_path(p) for p in f.terms)


def is_congruent(f: PathPolynomial, h: PathPolynomial, sys: RewriteSystem, semidecide: bool = False) -> bool:
    """Decide ``f = h`` in the quotient, which needs a complete system.

    With ``semidecide=True`` an incomplete system is used anyway; then a
    ``True`` answer is still sound but ``False`` may be wrong.
    """
    if (f.src, f.tgt) != (h.src, h.tgt):
        raise TypeMismatch("congruence is only defined for parallel polynomials")
    if not sys.is_complete and not semidecide:
        raise NotComplete("system is not known to be a Groebner basis")
    return normal_form(f - h, sys).is_zero()


def empty_system(quiver: Quiver, order: PathOrder | None = None) -> RewriteSystem:
    return RewriteSystem(quiver, order or PathOrder.default(quiver))


__all__ = [
    "Rule", "RewriteSystem", "Status", "Occurrence", "reduce_once", "normal_form",
    "is_congruent", "is_irreducible", "empty_system", "zero",
]
