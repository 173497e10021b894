"""Presentation files and serialized bases.

A presentation file is line oriented; ``#`` starts a comment and a section
header sits in column 0::

    objects: B
    arrows:
      e1, e2, e3: B -> B
    order: deglex e1 < e2 < e3
    relations:
      e1*e1 - e1
      e3*e1 = e1*e3
    gamma:
      objects: A
      q: A -> A
    fmap:
      A -> B
      q -> e2*e1

``gamma`` and ``fmap`` are optional; without them the file is a plain
K-category presentation. A basis file is JSON (see :func:`dump_basis`).
"""
from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field

from .algebra import PathPolynomial, format_polynomial
from .completion import CompletionReport, is_groebner
from .errors import PathGBError, PresentationSyntaxError, SemanticError
from .kan import KanPresentation, MixedSystem, build_system
from .quiver import Arrow, PathOrder, Quiver
from .rewriting import Rule, RewriteSystem, Status
from .textio import parse_polynomial

SECTIONS = ("objects", "arrows", "order", "relations", "gamma", "fmap")
BASIS_FORMAT = "pathgb-basis/1"

_HEADER = re.compile(r"^([A-Za-z_]+)\s*:(.*)$")
_ARROW = re.compile(r"^\s*([^:]+?)\s*:\s*(\S+)\s*->\s*(\S+)\s*$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


@dataclass
class PresentationFile:
    delta: Quiver
    order: PathOrder
    relations: list[PathPolynomial]
    gamma: Quiver | None = None
    f_obj: dict[str, str] = field(default_factory=dict)
    f_arr: dict[str, PathPolynomial] = field(default_factory=dict)

    @property
    def is_kan(self) -> bool:
        return self.gamma is not None

    def system(self) -> RewriteSystem:
        return RewriteSystem.from_polynomials(self.delta, self.order, self.relations)

    def kan_presentation(self) -> KanPresentation:
        if self.gamma is None:
            return KanPresentation.trivial(self.delta, self.relations)
        return KanPresentation(self.gamma, self.delta, list(self.relations), dict(self.f_obj), dict(self.f_arr))

    def mixed_system(self) -> MixedSystem:
        return build_system(self.kan_presentation(), self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PresentationFile):
            return NotImplemented
        return (self.delta == other.delta and self.order == other.order and self.relations == other.relations
                and self.gamma == other.gamma and self.f_obj == other.f_obj and self.f_arr == other.f_arr)


def _split_sections(text: str):
    sections: dict[str, list[tuple[int, int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if not line[0].isspace():
            m = _HEADER.match(line)
            if not m:
                raise PresentationSyntaxError("expected a section header like 'relations:'", lineno, 1)
            name = m.group(1).lower()
            if name not in SECTIONS:
                raise PresentationSyntaxError(f"unknown section {name!r}", lineno, 1)
            if name in sections:
                raise PresentationSyntaxError(f"section {name!r} repeated", lineno, 1)
            sections[name] = []
            current = name
            rest = m.group(2)
            if rest.strip():
                sections[name].append((lineno, m.start(2) + len(rest) - len(rest.lstrip()), rest.strip()))
            continue
        if current is None:
            raise PresentationSyntaxError("indented line outside any section", lineno, 1)
        sections[current].append((lineno, len(line) - len(line.lstrip()), line.strip()))
    return sections


def _names(text: str, lineno: int, col: int) -> list[str]:
    names = [n for n in re.split(r"[\s,]+", text) if n]
    for n in names:
        if not _NAME.match(n):
            raise PresentationSyntaxError(f"bad name {n!r}", lineno, col + 1)
    return names


def _graph(entries, what: str) -> tuple[list[str], list[Arrow]]:
    objects: list[str] = []
    arrows: list[Arrow] = []
    for lineno, col, text in entries:
        head = re.match(r"^objects\s*:?\s*(.*)$", text)
        if head and what == "gamma":
            objects.extend(_names(head.group(1), lineno, col))
            continue
        m = _ARROW.match(text)
        if not m:
            raise PresentationSyntaxError("expected 'name: SRC -> TGT'", lineno, col + 1)
        for n in _names(m.group(1), lineno, col):
            arrows.append(Arrow(n, m.group(2), m.group(3)))
    return objects, arrows


def _quiver(objects, arrows, entries) -> Quiver:
    try:
        return Quiver(objects, arrows)
    except PathGBError as e:
        raise SemanticError(str(e), entries[0][0] if entries else None) from None


def _parse_order(entries, quiver: Quiver) -> PathOrder:
    if not entries:
        return PathOrder.default(quiver)
    lineno, col, text = entries[0]
    text = " ".join(e[2] for e in entries)
    kind = "deglex"
    m = re.match(r"^(deglex|lenlex)\b\s*(.*)$", text)
    if m:
        text = m.group(2)
    has_lt, has_gt = "<" in text, ">" in text
    if has_lt and has_gt:
        raise PresentationSyntaxError("mix of '<' and '>' in order chain", lineno, col + 1)
    chain = [c.strip() for c in re.split(r"[<>]", text)] if (has_lt or has_gt) else text.split()
    if has_gt:
        chain.reverse()
    for c in chain:
        if not _NAME.match(c):
            raise PresentationSyntaxError(f"bad arrow name {c!r} in order", lineno, col + 1)
    missing = [a for a in quiver.arrows if a not in chain]
    extra = [a for a in chain if a not in quiver.arrows]
    if missing or extra:
        raise SemanticError(f"order must rank exactly the arrows (missing {missing}, unknown {extra})", lineno)
    try:
        return PathOrder(tuple(chain), quiver.objects, (), kind)
    except ValueError as e:
        raise SemanticError(str(e), lineno) from None


def _parse_relation(text: str, quiver: Quiver, lineno: int, col: int) -> PathPolynomial:
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        f = parse_polynomial(lhs, quiver, line=lineno, col0=col)
        g = parse_polynomial(rhs, quiver, f.src, f.tgt, line=lineno, col0=col + len(lhs) + 1)
        return f - g
    return parse_polynomial(text, quiver, line=lineno, col0=col)


def parse_presentation(text: str) -> PresentationFile:
    sec = _split_sections(text)
    if "objects" not in sec:
        raise PresentationSyntaxError("missing 'objects' section")
    objects = []
    for lineno, col, t in sec["objects"]:
        objects.extend(_names(t, lineno, col))
    _, arrows = _graph(sec.get("arrows", []), "arrows")
    delta = _quiver(objects, arrows, sec.get("arrows") or sec["objects"])
    order = _parse_order(sec.get("order", []), delta)
    relations = [_parse_relation(t, delta, ln, c) for ln, c, t in sec.get("relations", [])]

    gamma = None
    f_obj: dict[str, str] = {}
    f_arr: dict[str, PathPolynomial] = {}
    if "fmap" in sec and "gamma" not in sec:
        raise SemanticError("'fmap' needs a 'gamma' section", sec["fmap"][0][0] if sec["fmap"] else None)
    if "gamma" in sec:
        gamma = _quiver(*_graph(sec["gamma"], "gamma"), sec["gamma"])
        if not gamma.objects:
            raise SemanticError("gamma declares no objects", sec["gamma"][0][0] if sec["gamma"] else None)
        pending = []
        for lineno, col, t in sec.get("fmap", []):
            if "->" not in t:
                raise PresentationSyntaxError("expected 'X -> image'", lineno, col + 1)
            lhs, rhs = (s.strip() for s in t.split("->", 1))
            if lhs in gamma.objects:
                if rhs not in delta.objects:
                    raise SemanticError(f"{rhs!r} is not an object", lineno)
                f_obj[lhs] = rhs
            elif lhs in gamma.arrows:
                pending.append((lhs, rhs, lineno, col + t.index("->") + 2))
            else:
                raise SemanticError(f"{lhs!r} is not in gamma", lineno)
        if len(delta.objects) == 1:
            for a in gamma.objects:
                f_obj.setdefault(a, delta.objects[0])
        for a in gamma.objects:
            if a not in f_obj:
                raise SemanticError(f"fmap gives no image for object {a!r}")
        for name, rhs, lineno, col in pending:
            arrow = gamma.arrows[name]
            f_arr[name] = parse_polynomial(rhs, delta, f_obj[arrow.src], f_obj[arrow.tgt], line=lineno, col0=col)
        for name in gamma.arrows:
            if name not in f_arr:
                raise SemanticError(f"fmap gives no image for arrow {name!r}")
        try:
            KanPresentation(gamma, delta, relations, f_obj, f_arr).validate()
        except PathGBError as e:
            raise SemanticError(str(e)) from None
    return PresentationFile(delta, order, relations, gamma, f_obj, f_arr)


def _arrow_lines(q: Quiver) -> list[str]:
    return [f"  {a.name}: {a.src} -> {a.tgt}" for a in q.arrows.values()]


def format_presentation(pf: PresentationFile) -> str:
    out = [f"objects: {' '.join(pf.delta.objects)}", "arrows:"]
    out += _arrow_lines(pf.delta)
    out.append(f"order: {pf.order.describe()}")
    out.append("relations:")
    out += [f"  {format_polynomial(f, pf.order)}" for f in pf.relations]
    if pf.gamma is not None:
        out.append("gamma:")
        out.append(f"  objects: {' '.join(pf.gamma.objects)}")
        out += _arrow_lines(pf.gamma)
        out.append("fmap:")
        out += [f"  {a} -> {b}" for a, b in pf.f_obj.items()]
        out += [f"  {a} -> {format_polynomial(f, pf.order)}" for a, f in pf.f_arr.items()]
    return "\n".join(out) + "\n"


def input_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def dump_basis(sys: RewriteSystem, provenance: dict | None = None) -> str:
    """Serialize a system (plain or mixed) as JSON text."""
    delta = sys.presentation.delta if isinstance(sys, MixedSystem) else sys.quiver
    doc = {
        "format": BASIS_FORMAT,
        "status": sys.status.value,
        "objects": list(delta.objects),
        "arrows": [[a.name, a.src, a.tgt] for a in delta.arrows.values()],
        "order": sys.order.describe(),
        "gamma": None,
        "rules": sys.format_rules(),
        "provenance": provenance or {},
    }
    if isinstance(sys, MixedSystem):
        p = sys.presentation
        doc["gamma"] = {
            "objects": list(p.gamma.objects),
            "arrows": [[a.name, a.src, a.tgt] for a in p.gamma.arrows.values()],
            "fmap_objects": dict(p.f_obj),
            "fmap_arrows": {k: format_polynomial(f, sys.order) for k, f in p.f_arr.items()},
            "relations": [format_polynomial(f, sys.order) for f in p.relations],
        }
    return json.dumps(doc, indent=2) + "\n"


def load_basis(text: str) -> tuple[RewriteSystem, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise PresentationSyntaxError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    if doc.get("format") != BASIS_FORMAT:
        raise SemanticError(f"not a {BASIS_FORMAT} document")
    try:
        delta = Quiver(doc["objects"], [tuple(a) for a in doc["arrows"]])
        order = _parse_order([(None, 0, doc["order"])], delta)
        status = Status(doc["status"])
        g = doc.get("gamma")
        if g is None:
            sys = RewriteSystem(delta, order)
            quiver = delta
        else:
            gamma = Quiver(g["objects"], [tuple(a) for a in g["arrows"]])
            f_obj = dict(g["fmap_objects"])
            f_arr = {}
            for k, t in g["fmap_arrows"].items():
                a = gamma.arrows[k]
                f_arr[k] = parse_polynomial(t, delta, f_obj[a.src], f_obj[a.tgt])
            rels = [parse_polynomial(t, delta) for t in g["relations"]]
            sys = build_system(KanPresentation(gamma, delta, rels, f_obj, f_arr), order)
            quiver = sys.quiver
        rules = [Rule.from_polynomial(parse_polynomial(t, quiver), sys.order) for t in doc["rules"]]
    except (KeyError, TypeError, ValueError) as e:
        raise SemanticError(f"malformed basis file: {e}") from None
    sys = sys.replace(rules)
    # a file's word is not enough to mark a system complete
    if status is Status.COMPLETE and not is_groebner(sys):
        raise SemanticError("basis file is marked complete but is not a Gröbner basis")
    return sys, doc.get("provenance", {})


def provenance(text: str, report: CompletionReport) -> dict:
    lim = report.limits
    return {
        "input_sha256": input_hash(text),
        "limits": {"max_rules": lim.max_rules, "max_degree": lim.max_degree, "max_passes": lim.max_passes},
        "passes": report.passes,
        "spolys_examined": report.spolys_examined,
    }
