"""Left Kan extensions of K-category actions via tagged Groebner bases.

A tagged term ``A|p`` is stored as an ordinary path in an extended quiver:
a fresh source object with one tag arrow ``A|`` into ``F(A)`` for each object
``A`` of the acting graph. Nothing enters the tag object, so tagged terms can
only be multiplied on the right and the usual two-sided machinery computes
the right congruence generated by the epsilon rules ``A1|F(q) - A2|1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import PathPolynomial, mul, sandwich
from .completion import CompletionReport, Limits, buchberger
from .errors import Incomplete, InvalidPresentation, NotComplete, PathGBError, TypeMismatch
from .nfenum import Finite, Infinite, finiteness, irreducible_terms
from .quiver import TAG_OBJECT, TAG_SUFFIX, Arrow, Path, PathOrder, Quiver, identity
from .rewriting import Rule, RewriteSystem, Status, check_polynomial, normal_form


@dataclass(frozen=True)
class TaggedTerm:
    tag: str
    path: Path

    def __str__(self) -> str:
        return f"{self.tag}{TAG_SUFFIX}" + ("*".join(self.path.arrows) or "1")


@dataclass
class KanPresentation:
    """The data ``kan<Gamma | Delta | RelB | M | F>`` with ``M`` fixed to K[1].

    ``f_obj`` maps objects of ``gamma`` to objects of ``delta`` and ``f_arr``
    maps arrows of ``gamma`` to polynomials over ``delta``.
    """

    gamma: Quiver
    delta: Quiver
    relations: Sequence[PathPolynomial]
    f_obj: Mapping[str, str]
    f_arr: Mapping[str, PathPolynomial] = field(default_factory=dict)

    def validate(self) -> None:
        try:
            for f in self.relations:
                check_polynomial(self.delta, f)
        except PathGBError as e:
            raise InvalidPresentation(f"bad relation: {e}") from None
        for a in self.gamma.objects:
            if self.f_obj.get(a) not in self.delta.objects:
                raise InvalidPresentation(f"F does not map object {a!r} to an object of delta")
            if (a + TAG_SUFFIX) in self.delta.arrows:
                raise InvalidPresentation(f"tag {a + TAG_SUFFIX!r} clashes with an arrow name")
        for name, arrow in self.gamma.arrows.items():
            img = self.f_arr.get(name)
            if img is None:
                raise InvalidPresentation(f"F gives no image for arrow {name!r}")
            want = (self.f_obj[arrow.src], self.f_obj[arrow.tgt])
            if (img.src, img.tgt) != want:
                raise InvalidPresentation(
                    f"F({name}) runs {img.src} -> {img.tgt}, expected {want[0]} -> {want[1]}")
            try:
                check_polynomial(self.delta, img)
            except PathGBError as e:
                raise InvalidPresentation(f"bad image of {name!r}: {e}") from None

    def tagged_quiver(self) -> Quiver:
        tags = [Arrow(a + TAG_SUFFIX, TAG_OBJECT, self.f_obj[a]) for a in self.gamma.objects]
        return self.delta.with_arrows([TAG_OBJECT], tags)

    @classmethod
    def trivial(cls, delta: Quiver, relations: Sequence[PathPolynomial], obj: str | None = None,
                tag: str = "A") -> "KanPresentation":
        """One acting object ``tag`` sent to ``obj`` and no acting arrows."""
        if obj is None:
            if len(delta.objects) != 1:
                raise InvalidPresentation("choose the image object of the trivial action")
            obj = delta.objects[0]
        return cls(Quiver([tag]), delta, list(relations), {tag: obj}, {})


class MixedSystem(RewriteSystem):
    """Untagged relations together with tagged epsilon rules, over the tagged quiver."""

    presentation: KanPresentation

    @property
    def e_rules(self) -> list[Rule]:
        return [r for r in self.rules if not r.lt.is_tagged]

    @property
    def eps_rules(self) -> list[Rule]:
        return [r for r in self.rules if r.lt.is_tagged]

    def untagged_system(self) -> RewriteSystem:
        # dropping tagged rules keeps completeness: no S-polynomial of two untagged rules is tagged
        sys = RewriteSystem(self.presentation.delta, _untagged_order(self.order), self.e_rules)
        sys.status = self.status
        return sys

    def tag_path(self, tag: str) -> Path:
        if tag not in self.presentation.f_obj:
            raise InvalidPresentation(f"unknown tag {tag!r}")
        return Path(TAG_OBJECT, self.presentation.f_obj[tag], (tag + TAG_SUFFIX,))

    def tagged(self, tag: str, f: PathPolynomial | Path) -> PathPolynomial:
        """``tag|f`` as a polynomial over the tagged quiver."""
        if isinstance(f, Path):
            f = PathPolynomial.from_path(f)
        t = self.tag_path(tag)
        if f.src != t.tgt:
            raise TypeMismatch(f"{tag}| sits over {t.tgt}, but the polynomial starts at {f.src}")
        return sandwich(t, f, identity(f.tgt))

    def as_term(self, p: Path) -> TaggedTerm:
        if not p.is_tagged:
            raise ValueError(f"{p} is not tagged")
        return TaggedTerm(p.arrows[0][:-len(TAG_SUFFIX)], Path(self.quiver.arrows[p.arrows[0]].tgt, p.tgt, p.arrows[1:]))

    def default_tag(self) -> str:
        objs = self.presentation.gamma.objects
        if len(objs) != 1:
            raise InvalidPresentation("several tags exist; name one explicitly")
        return objs[0]


def _untagged_order(order: PathOrder) -> PathOrder:
    return PathOrder(order.precedence, tuple(o for o in order.objects if o != TAG_OBJECT), (), order.kind)


def build_system(p: KanPresentation, order: PathOrder) -> MixedSystem:
    """Relations as untagged rules plus ``src(q)|F(q) - tgt(q)|1`` per acting arrow."""
    p.validate()
    order.check(p.delta)
    quiver = p.tagged_quiver()
    ext = order.with_tags([a + TAG_SUFFIX for a in p.gamma.objects], [TAG_OBJECT])
    sys = MixedSystem(quiver, ext)
    sys.presentation = p
    polys = list(p.relations)
    for name, arrow in p.gamma.arrows.items():
        eps = sys.tagged(arrow.src, p.f_arr[name]) - sys.tagged(arrow.tgt, identity(p.f_obj[arrow.tgt]))
        polys.append(eps)
    rules = [Rule.from_polynomial(f, ext) for f in polys if f]
    return sys.replace(rules)


def complete_mixed(sys: MixedSystem, limits: Limits | None = None) -> CompletionReport:
    return buchberger(sys, limits)


@dataclass
class KanExtensionResult:
    """The computed extension: a basis of irreducible tagged terms and epsilon.

    ``basis`` holds every irreducible ``A|p`` with ``len(p) <= len_bound``;
    ``finite[(A, B)]`` tells whether the terms ``A|p`` with ``p`` ending at
    ``B`` were listed exhaustively.
    """

    basis: list[TaggedTerm]
    mixed: MixedSystem
    eps: dict[str, PathPolynomial]
    finite: dict[tuple[str, str], Finite | Infinite]
    report: CompletionReport | None = None

    @property
    def is_finite(self) -> bool:
        return all(isinstance(v, Finite) for v in self.finite.values())

    def basis_at(self, obj: str) -> list[TaggedTerm]:
        """Basis of E(obj)."""
        return [t for t in self.basis if t.path.tgt == obj]

    def dimension(self, obj: str) -> int | None:
        total = 0
        for (tag, tgt), v in self.finite.items():
            if tgt == obj:
                if isinstance(v, Infinite):
                    return None
                total += v.count
        return total


def kan_extension(p: KanPresentation, order: PathOrder, len_bound: int = 8,
                  limits: Limits | None = None) -> KanExtensionResult:
    sys = build_system(p, order)
    report = complete_mixed(sys, limits)
    if not report.complete:
        raise Incomplete(f"completion stopped: {report.reason}", report)
    mixed = report.system
    basis: list[TaggedTerm] = []
    verdicts: dict[tuple[str, str], Finite | Infinite] = {}
    for tag in p.gamma.objects:
        prefix = (tag + TAG_SUFFIX,)
        for obj in p.delta.objects:
            verdicts[(tag, obj)] = finiteness(mixed, TAG_OBJECT, obj, prefix)
        basis.extend(mixed.as_term(t) for t in irreducible_terms(mixed, TAG_OBJECT, None, len_bound, prefix))
    eps = {tag: normal_form(mixed.tagged(tag, identity(p.f_obj[tag])), mixed) for tag in p.gamma.objects}
    return KanExtensionResult(basis, mixed, eps, verdicts, report)


def _require(res: KanExtensionResult) -> MixedSystem:
    if not res.mixed.is_complete:
        raise NotComplete("the mixed system is not complete")
    return res.mixed


def _as_tagged(mixed: MixedSystem, t) -> PathPolynomial:
    if isinstance(t, TaggedTerm):
        return mixed.tagged(t.tag, t.path)
    if isinstance(t, Path):
        t = PathPolynomial.from_path(t)
    if t.src != TAG_OBJECT:
        raise TypeMismatch("expected a tagged term or tagged polynomial")
    return t


def act(res: KanExtensionResult, t: TaggedTerm | PathPolynomial, b: PathPolynomial | Path) -> PathPolynomial:
    """The induced right action: ``t . b = irr(t * b)``."""
    mixed = _require(res)
    if isinstance(b, Path):
        b = PathPolynomial.from_path(b)
    return normal_form(mul(_as_tagged(mixed, t), b), mixed)


def congruent_mod_right(res: KanExtensionResult, p: PathPolynomial | Path, q: PathPolynomial | Path,
                        tag: str | None = None) -> bool:
    """Whether ``[p]`` and ``[q]`` agree in the quotient by the right congruence."""
    mixed = _require(res)
    tag = tag or mixed.default_tag()
    fp, fq = mixed.tagged(tag, p), mixed.tagged(tag, q)
    if (fp.src, fp.tgt) != (fq.src, fq.tgt):
        raise TypeMismatch("p and q must be parallel")
    return normal_form(fp, mixed) == normal_form(fq, mixed)


__all__ = [
    "TaggedTerm", "KanPresentation", "MixedSystem", "KanExtensionResult", "build_system",
    "complete_mixed", "kan_extension", "act", "congruent_mod_right", "Status",
]
