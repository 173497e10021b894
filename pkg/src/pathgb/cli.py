"""Command line front end.

Exit status: 0 success, 1 incomplete or undecided, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import format_polynomial
from .completion import CompletionReport, Limits, buchberger, find_matches, is_groebner, s_polynomial
from .errors import Incomplete, NotComplete, PathGBError
from .kan import MixedSystem, kan_extension
from .nfenum import Finite, HomSet, finiteness, hom_table, irreducible_terms
from .presentation import PresentationFile, dump_basis, load_basis, parse_presentation, provenance
from .quiver import TAG_OBJECT, TAG_SUFFIX, format_path
from .rewriting import RewriteSystem, is_congruent, normal_form
from .textio import parse_polynomial

EXIT_OK, EXIT_UNDECIDED, EXIT_INPUT = 0, 1, 2


class Loaded:
    """An input file: either a presentation or an already serialized basis."""

    def __init__(self, text: str):
        self.text = text
        self.presentation: PresentationFile | None = None
        self.basis: RewriteSystem | None = None
        if text.lstrip().startswith("{"):
            self.basis, _ = load_basis(text)
        else:
            self.presentation = parse_presentation(text)

    @property
    def is_kan(self) -> bool:
        if self.basis is not None:
            return isinstance(self.basis, MixedSystem)
        return self.presentation.is_kan

    def system(self, tagged: bool | None = None) -> RewriteSystem:
        tagged = self.is_kan if tagged is None else tagged
        if self.basis is not None:
            if isinstance(self.basis, MixedSystem) and not tagged:
                return self.basis.untagged_system()
            return self.basis
        return self.presentation.mixed_system() if tagged else self.presentation.system()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _limits(args) -> Limits:
    return Limits(args.max_rules, args.max_degree, args.max_passes)


def _complete(src: Loaded, args, tagged: bool | None = None) -> CompletionReport:
    sys_ = src.system(tagged)
    if sys_.is_complete:
        return CompletionReport(True, sys_, (), 0, 0, None, _limits(args))
    return buchberger(sys_, _limits(args))


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _report_data(rep: CompletionReport) -> dict:
    order = rep.system.order
    return {
        "result": rep.result,
        "reason": rep.reason,
        "rules": rep.system.format_rules(),
        "added": [format_polynomial(r.poly, order) for r in rep.added],
        "passes": rep.passes,
        "spolys_examined": rep.spolys_examined,
    }


def _report_text(rep: CompletionReport) -> str:
    lines = [rep.summary()]
    added = {r.poly for r in rep.added}
    for r, text in zip(rep.system.rules, rep.system.format_rules()):
        lines.append(("+ " if r.poly in added else "  ") + text)
    return "\n".join(lines)


def cmd_complete(args) -> int:
    src = Loaded(_read(args.file))
    rep = _complete(src, args)
    _emit(args, _report_text(rep), _report_data(rep))
    if not rep.complete:
        print("completion incomplete; no basis written", file=sys.stderr)
        return EXIT_UNDECIDED
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dump_basis(rep.system, provenance(src.text, rep)))
    return EXIT_OK


def cmd_check(args) -> int:
    src = Loaded(_read(args.file))
    sys_ = src.system()
    if is_groebner(sys_):
        _emit(args, "already a Gröbner basis", {"groebner": True})
        return EXIT_OK
    bad = []
    for m in find_matches(sys_):
        nf = normal_form(s_polynomial(sys_, m), sys_)
        if nf:
            bad.append(format_polynomial(nf, sys_.order))
    lines = ["not a Gröbner basis; irreducible S-polynomials:"] + [f"  {b}" for b in dict.fromkeys(bad)]
    _emit(args, "\n".join(lines), {"groebner": False, "obstructions": list(dict.fromkeys(bad))})
    return EXIT_UNDECIDED


def _parse_over(sys_: RewriteSystem, text: str):
    return parse_polynomial(text, sys_.quiver)


def cmd_reduce(args) -> int:
    src = Loaded(_read(args.file))
    rep = _complete(src, args)
    sys_ = rep.system
    nf = normal_form(_parse_over(sys_, args.poly), sys_)
    text = format_polynomial(nf, sys_.order)
    if not rep.complete:
        _emit(args, f"{text}\n(system incomplete: {rep.reason}; normal form not unique)",
              {"normal_form": text, "complete": False})
        return EXIT_UNDECIDED
    _emit(args, text, {"normal_form": text, "complete": True})
    return EXIT_OK


def cmd_equal(args) -> int:
    src = Loaded(_read(args.file))
    rep = _complete(src, args)
    if not rep.complete:
        _emit(args, f"undecided: {rep.reason}", {"congruent": None, "reason": rep.reason})
        return EXIT_UNDECIDED
    sys_ = rep.system
    tagged_input = TAG_SUFFIX in args.p or TAG_SUFFIX in args.q
    if isinstance(sys_, MixedSystem) and not tagged_input:
        tag = args.tag or sys_.default_tag()
        f = parse_polynomial(args.p, sys_.presentation.delta)
        g = parse_polynomial(args.q, sys_.presentation.delta, f.src, f.tgt)
        same = normal_form(sys_.tagged(tag, f), sys_) == normal_form(sys_.tagged(tag, g), sys_)
    else:
        f = _parse_over(sys_, args.p)
        g = parse_polynomial(args.q, sys_.quiver, f.src, f.tgt)
        same = is_congruent(f, g, sys_)
    _emit(args, "congruent" if same else "not congruent", {"congruent": same})
    return EXIT_OK


def _irr_args(sys_: RewriteSystem, args):
    if args.tag:
        sys_.tag_path(args.tag)
        return TAG_OBJECT, (args.tag + TAG_SUFFIX,)
    return args.src, ()


def cmd_irr(args) -> int:
    src = Loaded(_read(args.file))
    rep = _complete(src, args, tagged=bool(args.tag))
    if not rep.complete:
        _emit(args, f"undecided: {rep.reason}", {"terms": None, "reason": rep.reason})
        return EXIT_UNDECIDED
    sys_ = rep.system
    start, prefix = _irr_args(sys_, args)
    terms = [format_path(p) for p in irreducible_terms(sys_, start, args.tgt, args.max_len, prefix)]
    data = {"terms": terms}
    text = "\n".join(terms)
    if start is not None and args.tgt is not None:
        verdict = finiteness(sys_, start, args.tgt, prefix)
        data["finite"] = isinstance(verdict, Finite)
        if isinstance(verdict, Finite):
            data["count"] = verdict.count
            shown = "" if verdict.count == len(terms) else f", {len(terms)} shown up to length {args.max_len}"
            text += f"\n(finite: {verdict.count} terms{shown})"
        else:
            data["witness"] = format_path(verdict.witness)
            text += f"\n(infinite: pump {format_path(verdict.witness)})"
    _emit(args, text, data)
    return EXIT_OK


def format_table(table: dict[tuple[str, str], HomSet], include_identities: bool = False) -> str:
    cols = [h for h in table.values()
            if include_identities or any(not p.is_identity for p in h.entries)]
    if not cols:
        return "(no hom-sets beyond identities)"
    body = []
    for h in cols:
        entries = [format_path(p) for p in h.entries]
        if not h.finite:
            entries.append("...")
            entries.append(f"({format_path(h.verdict.witness)})^n")
        body.append([f"{h.src} -> {h.tgt}", "-"] + entries)
    height = max(len(c) for c in body)
    widths = [max(len(x) for x in c) for c in body]
    lines = []
    for i in range(height):
        cells = []
        for c, w in zip(body, widths):
            cell = c[i] if i < len(c) else ""
            cells.append(("-" * w) if cell == "-" and i == 1 else cell.ljust(w))
        lines.append(" | ".join(cells).rstrip())
    return "\n".join(lines)


def cmd_table(args) -> int:
    src = Loaded(_read(args.file))
    rep = _complete(src, args, tagged=False)
    if not rep.complete:
        _emit(args, f"undecided: {rep.reason}", {"table": None, "reason": rep.reason})
        return EXIT_UNDECIDED
    table = hom_table(rep.system, args.max_len)
    data = [{
        "src": h.src, "tgt": h.tgt, "entries": [format_path(p) for p in h.entries],
        "finite": h.finite,
        **({"count": h.verdict.count} if h.finite else {"witness": format_path(h.verdict.witness)}),
    } for h in table.values()]
    _emit(args, format_table(table), {"table": data})
    return EXIT_OK


def cmd_kan(args) -> int:
    src = Loaded(_read(args.file))
    if src.basis is not None:
        raise PathGBError("kan needs a presentation file, not a basis")
    pf = src.presentation
    try:
        res = kan_extension(pf.kan_presentation(), pf.order, args.max_len, _limits(args))
    except Incomplete as e:
        _emit(args, _report_text(e.report), _report_data(e.report))
        print(f"incomplete: {e}", file=sys.stderr)
        return EXIT_UNDECIDED
    order = res.mixed.order
    data = {
        "basis": [str(t) for t in res.basis],
        "finite": {f"{a}|{b}": isinstance(v, Finite) for (a, b), v in res.finite.items()},
        "eps": {a: format_polynomial(f, order) for a, f in res.eps.items()},
        "mixed_basis": res.mixed.format_rules(),
    }
    lines = ["mixed Gröbner basis:"] + [f"  {r}" for r in data["mixed_basis"]]
    lines.append("irreducible tagged terms:" + ("" if res.is_finite else f" (truncated at length {args.max_len})"))
    lines += [f"  {t}" for t in data["basis"]]
    lines.append("epsilon:")
    lines += [f"  {a}: 1 -> {f}" for a, f in data["eps"].items()]
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathgb", description="Groebner bases over path algebras and Kan extensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="presentation file, basis JSON, or - for stdin")
        p.add_argument("--format", choices=["text", "json"], default="text")
        lim = Limits()
        p.add_argument("--max-rules", type=int, default=lim.max_rules)
        p.add_argument("--max-degree", type=int, default=lim.max_degree)
        p.add_argument("--max-passes", type=int, default=lim.max_passes)
        p.set_defaults(func=func)
        return p

    p = add("complete", cmd_complete, "run Buchberger completion")
    p.add_argument("--out", help="write the completed basis as JSON")
    add("check", cmd_check, "test whether the relations already form a Groebner basis")
    p = add("reduce", cmd_reduce, "normal form of a polynomial")
    p.add_argument("poly")
    p = add("equal", cmd_equal, "decide congruence of two polynomials")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--tag")
    p = add("irr", cmd_irr, "list irreducible terms")
    p.add_argument("--src")
    p.add_argument("--tgt")
    p.add_argument("--tag", help="list tagged terms TAG|p instead")
    p.add_argument("--max-len", type=int, default=6)
    p = add("table", cmd_table, "hom-set tables with finiteness")
    p.add_argument("--max-len", type=int, default=6)
    p = add("kan", cmd_kan, "left Kan extension: tagged basis, epsilon, mixed basis")
    p.add_argument("--max-len", type=int, default=8)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotComplete as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (PathGBError, OSError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
