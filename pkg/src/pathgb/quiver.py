"""Quivers (directed multigraphs), their paths, and admissible path orders.

Paths compose diagrammatically: ``compose(a, b)`` is "first a, then b", so
for ``a: B1 -> B2`` and ``b: B2 -> B2`` the composite is written ``a*b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DanglingEndpoint, DuplicateName, NotComposable, QuiverError

TAG_SUFFIX = "|"
# source object of tag arrows in the extended quiver used for tagged terms
TAG_OBJECT = "__tags__"


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence with explicit endpoints.

    The empty sequence is the identity at ``src`` (== ``tgt``).
    """

    src: str
    tgt: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_identity(self) -> bool:
        return not self.arrows

    @property
    def is_tagged(self) -> bool:
        return bool(self.arrows) and self.arrows[0].endswith(TAG_SUFFIX)

    def __str__(self) -> str:
        return format_path(self)


def format_path(p: Path) -> str:
    if not p.arrows:
        return f"1({p.src})"
    if p.arrows[0].endswith(TAG_SUFFIX):
        rest = p.arrows[1:]
        return p.arrows[0] + ("*".join(rest) if rest else "1")
    return "*".join(p.arrows)


def identity(obj: str) -> Path:
    return Path(obj, obj, ())


class Quiver:
    """A finite directed multigraph with named objects and arrows."""

    def __init__(self, objects: Iterable[str], arrows: Iterable[Arrow | tuple[str, str, str]] = ()):
        objs: list[str] = []
        for o in objects:
            if not isinstance(o, str) or not o:
                raise QuiverError(f"object ids must be nonempty strings, got {o!r}")
            if o in objs:
                raise DuplicateName(f"object {o!r} declared twice")
            objs.append(o)
        self.objects: tuple[str, ...] = tuple(objs)
        table: dict[str, Arrow] = {}
        for a in arrows:
            a = a if isinstance(a, Arrow) else Arrow(*a)
            if not a.name:
                raise QuiverError("arrow names must be nonempty")
            if a.name in table or a.name in self.objects:
                raise DuplicateName(f"name {a.name!r} used twice")
            for end in (a.src, a.tgt):
                if end not in self.objects:
                    raise DanglingEndpoint(f"arrow {a.name!r} refers to undeclared object {end!r}")
            table[a.name] = a
        self.arrows: dict[str, Arrow] = table

    def __repr__(self) -> str:
        return f"Quiver(objects={list(self.objects)}, arrows={[tuple(vars(a).values()) for a in self.arrows.values()]})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.objects == other.objects and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.objects, tuple(self.arrows.values())))

    def identity(self, obj: str) -> Path:
        if obj not in self.objects:
            raise QuiverError(f"unknown object {obj!r}")
        return identity(obj)

    def arrow(self, name: str) -> Path:
        a = self.arrows[name]
        return Path(a.src, a.tgt, (name,))

    def path(self, names: Sequence[str] | str, base: str | None = None) -> Path:
        """Build a path from arrow names; an empty sequence needs ``base``."""
        if isinstance(names, str):
            names = [n for n in names.split("*") if n]
        if not names:
            if base is None:
                if len(self.objects) != 1:
                    raise QuiverError("identity path needs a base object")
                base = self.objects[0]
            return self.identity(base)
        try:
            first = self.arrows[names[0]]
        except KeyError:
            raise QuiverError(f"unknown arrow {names[0]!r}") from None
        tgt = first.tgt
        for n in names[1:]:
            a = self.arrows.get(n)
            if a is None:
                raise QuiverError(f"unknown arrow {n!r}")
            if a.src != tgt:
                raise NotComposable(f"arrow {n!r} starts at {a.src!r}, expected {tgt!r}")
            tgt = a.tgt
        return Path(first.src, tgt, tuple(names))

    def objects_along(self, p: Path) -> list[str]:
        """Objects visited by ``p`` (length ``len(p) + 1``)."""
        out = [p.src]
        for n in p.arrows:
            out.append(self.arrows[n].tgt)
        return out

    def out_arrows(self, obj: str) -> list[Arrow]:
        return [a for a in self.arrows.values() if a.src == obj]

    def with_arrows(self, objects: Iterable[str], arrows: Iterable[Arrow | tuple]) -> "Quiver":
        return Quiver(self.objects + tuple(objects), list(self.arrows.values()) + list(arrows))


def make_quiver(objects: Iterable[str], arrows: Iterable[tuple[str, str, str]] = ()) -> Quiver:
    return Quiver(objects, arrows)


def compose(p: Path, q: Path) -> Path:
    if p.tgt != q.src:
        raise NotComposable(f"cannot compose {p} (ends at {p.tgt}) with {q} (starts at {q.src})")
    return Path(p.src, q.tgt, p.arrows + q.arrows)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class PathOrder:
    """Degree-lexicographic order on paths.

    ``precedence`` lists ordinary arrows lowest first. ``tags`` lists tag
    arrows (names ending in ``|``), lowest first; tags sit below every arrow
    and are skipped by the length/lex comparison, so ``A|p`` is compared by
    ``p`` and the tag only breaks ties. ``objects`` orders identity paths.
    """

    precedence: tuple[str, ...]
    objects: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()
    kind: str = "deglex"
    _rank: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)
    _tag_rank: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)
    _obj_rank: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind != "deglex":
            raise ValueError(f"unsupported order kind {self.kind!r}")
        for name, seq in (("precedence", self.precedence), ("tags", self.tags), ("objects", self.objects)):
            if len(set(seq)) != len(seq):
                raise ValueError(f"repeated entry in {name}")
        object.__setattr__(self, "precedence", tuple(self.precedence))
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "tags", tuple(self.tags))
        object.__setattr__(self, "_rank", {a: i for i, a in enumerate(self.precedence)})
        object.__setattr__(self, "_tag_rank", {t: i for i, t in enumerate(self.tags)})
        object.__setattr__(self, "_obj_rank", {o: i for i, o in enumerate(self.objects)})

    @classmethod
    def deglex(cls, precedence: Sequence[str], quiver: Quiver | None = None, tags: Sequence[str] = ()):
        objects = quiver.objects if quiver is not None else ()
        order = cls(tuple(precedence), tuple(objects), tuple(tags))
        if quiver is not None:
            order.check(quiver)
        return order

    @classmethod
    def default(cls, quiver: Quiver) -> "PathOrder":
        """Deglex with arrows ranked in declaration order."""
        plain = [a for a in quiver.arrows if not a.endswith(TAG_SUFFIX)]
        tags = [a for a in quiver.arrows if a.endswith(TAG_SUFFIX)]
        return cls(tuple(plain), quiver.objects, tuple(tags))

    def check(self, quiver: Quiver) -> None:
        missing = [a for a in quiver.arrows if a not in self._rank and a not in self._tag_rank]
        if missing:
            raise QuiverError(f"order does not rank arrows {missing}")

    def key(self, p: Path) -> tuple:
        arrows = p.arrows
        tag = -1
        if arrows and arrows[0] in self._tag_rank:
            tag = self._tag_rank[arrows[0]]
            arrows = arrows[1:]
        rank = self._rank
        return (len(arrows), tuple(rank[a] for a in arrows), tag, self._obj_rank.get(p.src, -1))

    def with_tags(self, tags: Sequence[str], objects: Sequence[str] = ()) -> "PathOrder":
        return PathOrder(self.precedence, self.objects + tuple(objects), tuple(tags), self.kind)

    def describe(self) -> str:
        return "deglex " + " < ".join(self.precedence)


def compare(order: PathOrder, p: Path, q: Path) -> Ordering:
    kp, kq = order.key(p), order.key(q)
    if kp == kq:
        # keys coincide only for equal arrow sequences, so endpoints must agree too
        return Ordering.EQUAL if p == q else Ordering(-1 if (p.src, p.tgt) < (q.src, q.tgt) else 1)
    return Ordering.LESS if kp < kq else Ordering.GREATER


def iter_paths(quiver: Quiver, src: str | None = None, max_len: int = 0) -> Iterator[Path]:
    """All paths of length <= max_len (breadth first), optionally from ``src``."""
    layer = [identity(o) for o in quiver.objects if src is None or o == src]
    for length in range(max_len + 1):
        yield from layer
        if length == max_len:
            break
        layer = [Path(p.src, a.tgt, p.arrows + (a.name,)) for p in layer for a in quiver.out_arrows(p.tgt)]


def enumerate_paths(
    quiver: Quiver,
    src: str | None = None,
    tgt: str | None = None,
    max_len: int = 0,
    order: PathOrder | None = None,
) -> list[Path]:
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    order = order or PathOrder.default(quiver)
    found = [p for p in iter_paths(quiver, src, max_len) if tgt is None or p.tgt == tgt]
    return sorted(found, key=order.key)
