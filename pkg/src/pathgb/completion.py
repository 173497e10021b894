"""Overlaps of leading terms, S-polynomials and Buchberger completion."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from .algebra import PathPolynomial, sandwich
from .quiver import Path, identity
from .rewriting import Rule, RewriteSystem, Status, normal_form

log = logging.getLogger(__name__)


class MatchKind(Enum):
    LEFT_OVERLAP = "overlap"
    CONTAINMENT = "containment"


@dataclass(frozen=True)
class Match:
    """A superposition ``u1*lt1*v1 == u2*lt2*v2`` of two leading terms.

    ``offset`` is where ``lt1`` starts (containment) or where ``lt2`` starts
    (overlap) inside the superposition word.
    """

    rule1: int
    rule2: int
    kind: MatchKind
    offset: int
    u1: Path
    v1: Path
    u2: Path
    v2: Path

    def word(self, sys: RewriteSystem) -> Path:
        lt = sys.rules[self.rule2].lt
        return Path(self.u2.src, self.v2.tgt, self.u2.arrows + lt.arrows + self.v2.arrows)


def _matches_between(i: int, a: Path, j: int, b: Path, objects_along) -> list[Match]:
    out = []
    aa, ba = a.arrows, b.arrows
    la, lb = len(aa), len(ba)
    # a inside b
    if i != j and la <= lb:
        if la == 0:
            offsets = [k for k, o in enumerate(objects_along(b)) if o == a.src]
        else:
            offsets = [k for k in range(lb - la + 1) if ba[k:k + la] == aa]
        if offsets:
            objs = objects_along(b)
            for k in offsets:
                out.append(Match(i, j, MatchKind.CONTAINMENT, k,
                                 Path(b.src, objs[k], ba[:k]), Path(objs[k + la], b.tgt, ba[k + la:]),
                                 identity(b.src), identity(b.tgt)))
    # proper suffix of a == proper prefix of b
    for n in range(min(la, lb) - 1, 0, -1):
        if aa[la - n:] == ba[:n]:
            out.append(Match(i, j, MatchKind.LEFT_OVERLAP, la - n,
                             identity(a.src), Path(a.tgt, b.tgt, ba[n:]),
                             Path(a.src, b.src, aa[:la - n]), identity(b.tgt)))
    return out


def find_matches(sys: RewriteSystem) -> list[Match]:
    """All containments and proper overlaps between ordered pairs of rules.

    Self-overlaps are included; a rule is never matched with itself at full
    coincidence.
    """
    along = sys.quiver.objects_along
    out = []
    for i, r1 in enumerate(sys.rules):
        for j, r2 in enumerate(sys.rules):
            out.extend(_matches_between(i, r1.lt, j, r2.lt, along))
    out.sort(key=lambda m: (m.rule1, m.rule2, m.offset, m.kind.value))
    return out


def s_polynomial(sys: RewriteSystem, m: Match) -> PathPolynomial:
    r1, r2 = sys.rules[m.rule1], sys.rules[m.rule2]
    return sandwich(m.u1, r1.poly, m.v1) - sandwich(m.u2, r2.poly, m.v2)


def is_groebner(sys: RewriteSystem) -> bool:
    """True iff every S-polynomial reduces to zero; marks ``sys`` complete."""
    for m in find_matches(sys):
        if normal_form(s_polynomial(sys, m), sys):
            return False
    sys.status = Status.COMPLETE
    return True


@dataclass(frozen=True)
class Limits:
    max_rules: int = 1000
    max_degree: int = 50
    max_passes: int = 100


@dataclass
class CompletionReport:
    complete: bool
    system: RewriteSystem
    added: tuple[Rule, ...] = ()
    passes: int = 0
    spolys_examined: int = 0
    reason: str | None = None
    limits: Limits = field(default_factory=Limits)

    @property
    def result(self) -> str:
        return "Complete" if self.complete else "Incomplete"

    def summary(self) -> str:
        text = (f"{self.result}: {len(self.system.rules)} rules, {len(self.added)} added, "
                f"{self.passes} passes, {self.spolys_examined} S-polynomials")
        if self.reason:
            text += f" ({self.reason})"
        return text


def interreduce(sys: RewriteSystem) -> RewriteSystem:
    """Reduce each rule by the others until nothing changes.

    A rule whose leading term became reducible is removed and its normal form
    (if nonzero) is appended as a new rule; otherwise only its tail is reduced.
    """
    rules = list(sys.rules)
    changed = True
    while changed:
        changed = False
        for i, r in enumerate(rules):
            others = sys.replace(rules[:i] + rules[i + 1:])
            if others.is_reducible_path(r.lt):
                nf = normal_form(r.poly, others)
                del rules[i]
                if nf:
                    rules.append(Rule.from_polynomial(nf, sys.order))
                changed = True
                break
            tail = normal_form(r.rem, others)
            if tail != r.rem:
                rules[i] = Rule(PathPolynomial.from_path(r.lt) + tail, r.lt, tail)
                changed = True
    return sys.replace(rules)


def buchberger(sys: RewriteSystem, limits: Limits | None = None) -> CompletionReport:
    """Complete ``sys`` into a Groebner basis, stopping at ``limits``.

    Each pass superposes the rules present at the start of the pass and
    reduces every S-polynomial against the current, growing system. A pass
    that adds nothing ends the run as complete.
    """
    limits = limits or Limits()
    inputs: list[Rule] = []
    for r in sys.rules:
        if r not in inputs:
            inputs.append(Rule.from_polynomial(r.poly, sys.order))
    input_polys = {r.poly for r in inputs}
    work = sys.replace(inputs)
    passes = spolys = 0

    def report(complete: bool, reason: str | None = None) -> CompletionReport:
        added = tuple(r for r in work.rules if r.poly not in input_polys)
        return CompletionReport(complete, work, added, passes, spolys, reason, limits)

    while True:
        if passes >= limits.max_passes:
            return report(False, f"max_passes={limits.max_passes} reached")
        passes += 1
        start = work
        rules = list(work.rules)
        grew = False
        for m in find_matches(start):
            spolys += 1
            nf = normal_form(s_polynomial(start, m), work)
            if not nf:
                continue
            rule = Rule.from_polynomial(nf, work.order)
            rules.append(rule)
            work = work.replace(rules)
            grew = True
            log.debug("pass %d: added %s", passes, rule)
            if len(rule.lt) > limits.max_degree:
                return report(False, f"rule of degree {len(rule.lt)} exceeds max_degree={limits.max_degree}")
            if len(rules) > limits.max_rules:
                return report(False, f"more than max_rules={limits.max_rules} rules")
        if not grew:
            work.status = Status.COMPLETE
            return report(True)
        work = interreduce(work)
