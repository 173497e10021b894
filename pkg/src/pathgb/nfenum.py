"""Irreducible paths of a complete system and finiteness of hom-sets.

A path is irreducible iff it avoids every leading term as a contiguous
subpath. The avoiding paths are the language of an Aho-Corasick style
automaton whose states pair the current object with the longest suffix read
so far that is still a prefix of some leading term; a hom-set is infinite
iff that automaton has a useful cycle.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotComplete
from .quiver import Path, Quiver
from .rewriting import RewriteSystem


@dataclass(frozen=True)
class Finite:
    count: int


@dataclass(frozen=True)
class Infinite:
    witness: Path


@dataclass
class HomSet:
    src: str
    tgt: str
    entries: list[Path]
    verdict: Finite | Infinite

    @property
    def finite(self) -> bool:
        return isinstance(self.verdict, Finite)


class ObstructionAutomaton:
    """Recognizes paths containing no leading term of ``sys``."""

    def __init__(self, sys: RewriteSystem):
        self.quiver: Quiver = sys.quiver
        self.order = sys.order
        self.forbidden_objects = {r.lt.src for r in sys.rules if not r.lt.arrows}
        self._children: list[dict[str, int]] = [{}]
        self._prefix: list[tuple[str, ...]] = [()]
        self._dead: list[bool] = [False]
        for r in sys.rules:
            if not r.lt.arrows:
                continue
            node = 0
            for a in r.lt.arrows:
                nxt = self._children[node].get(a)
                if nxt is None:
                    nxt = len(self._children)
                    self._children.append({})
                    self._prefix.append(self._prefix[node] + (a,))
                    self._dead.append(False)
                    self._children[node][a] = nxt
                node = nxt
            self._dead[node] = True
        self._fail = [0] * len(self._children)
        queue = deque(self._children[0].values())
        while queue:
            node = queue.popleft()
            for a, child in self._children[node].items():
                f = self._fail[node]
                while f and a not in self._children[f]:
                    f = self._fail[f]
                cand = self._children[f].get(a, 0)
                self._fail[child] = cand if cand != child else 0
                self._dead[child] = self._dead[child] or self._dead[self._fail[child]]
                queue.append(child)
        self._goto: dict[tuple[int, str], int] = {}
        self._out = {o: sorted((a for a in self.quiver.out_arrows(o)),
                               key=lambda a: self.order.key(Path(a.src, a.tgt, (a.name,))))
                     for o in self.quiver.objects}

    def step_node(self, node: int, a: str) -> int:
        key = (node, a)
        hit = self._goto.get(key)
        if hit is None:
            n = node
            while n and a not in self._children[n]:
                n = self._fail[n]
            hit = self._children[n].get(a, 0)
            self._goto[key] = hit
        return hit

    def start(self, src: str, prefix: Sequence[str] = ()):
        """State after reading ``prefix`` from ``src``, or None if already reducible."""
        if src in self.forbidden_objects:
            return None
        state = (src, 0)
        for a in prefix:
            state = self.step(state, a)
            if state is None:
                return None
        return state

    def step(self, state, a: str):
        arrow = self.quiver.arrows[a]
        if arrow.src != state[0] or arrow.tgt in self.forbidden_objects:
            return None
        node = self.step_node(state[1], a)
        return None if self._dead[node] else (arrow.tgt, node)

    def successors(self, state):
        for a in self._out[state[0]]:
            nxt = self.step(state, a.name)
            if nxt is not None:
                yield a.name, nxt


def _require_complete(sys: RewriteSystem) -> None:
    if not sys.is_complete:
        raise NotComplete("irreducible terms are only meaningful for a complete system")


def _starts(sys: RewriteSystem, src: str | None, prefix: Sequence[str]) -> list[str]:
    if src is not None:
        return [src]
    return [o for o in sys.quiver.objects if not prefix or sys.quiver.arrows[prefix[0]].src == o]


def irreducible_terms(sys: RewriteSystem, src: str | None = None, tgt: str | None = None,
                      max_len: int = 0, prefix: Sequence[str] = ()) -> list[Path]:
    """Irreducible paths with ``len <= max_len`` (not counting ``prefix``), ascending.

    ``prefix`` forces a fixed start, used for tagged terms ``A|...``.
    """
    _require_complete(sys)
    auto = ObstructionAutomaton(sys)
    found: list[Path] = []
    for s in _starts(sys, src, prefix):
        state = auto.start(s, prefix)
        if state is None:
            continue
        if tgt is None:
            succ = auto.successors
        else:
            # only walk states from which tgt is still reachable
            graph = _useful_graph(auto, state, tgt)
            if state not in graph:
                continue
            succ = graph.__getitem__
        layer = [(tuple(prefix), state)]
        for length in range(max_len + 1):
            for arrows, st in layer:
                if tgt is None or st[0] == tgt:
                    found.append(Path(s, st[0], arrows))
            if length == max_len:
                break
            layer = [(arrows + (a,), nxt) for arrows, st in layer for a, nxt in succ(st)]
    return sorted(found, key=sys.order.key)


def _useful_graph(auto: ObstructionAutomaton, start, tgt: str):
    edges: dict = {}
    seen = {start}
    queue = deque([start])
    while queue:
        st = queue.popleft()
        edges[st] = list(auto.successors(st))
        for _, nxt in edges[st]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    rev: dict = {st: [] for st in seen}
    for st, outs in edges.items():
        for _, nxt in outs:
            rev[nxt].append(st)
    useful = {st for st in seen if st[0] == tgt}
    queue = deque(useful)
    while queue:
        st = queue.popleft()
        for prev in rev[st]:
            if prev not in useful:
                useful.add(prev)
                queue.append(prev)
    return {st: [(a, n) for a, n in edges[st] if n in useful] for st in useful}


def _find_cycle(graph, start):
    """Label of some cycle reachable from ``start`` (DFS back edge), or None."""
    if start not in graph:
        return None
    color = {start: 1}
    stack = [(start, iter(graph[start]))]
    trail: list[tuple[str, object]] = []
    while stack:
        st, it = stack[-1]
        for a, nxt in it:
            c = color.get(nxt, 0)
            if c == 1:
                labels = [lab for lab, _ in trail] + [a]
                states = [start] + [s for _, s in trail]
                i = states.index(nxt)
                return nxt, labels[i:]
            if c == 0:
                color[nxt] = 1
                trail.append((a, nxt))
                stack.append((nxt, iter(graph[nxt])))
                break
        else:
            color[st] = 2
            stack.pop()
            if trail:
                trail.pop()
    return None


def _count(graph, start, tgt: str) -> int:
    memo: dict = {}
    order: list = []
    seen = {start}
    stack = [(start, iter(graph[start]))]
    while stack:
        st, it = stack[-1]
        for _, nxt in it:
            if nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, iter(graph[nxt])))
                break
        else:
            order.append(st)
            stack.pop()
    for st in order:
        memo[st] = (st[0] == tgt) + sum(memo[n] for _, n in graph[st])
    return memo[start]


def finiteness(sys: RewriteSystem, src: str, tgt: str, prefix: Sequence[str] = ()) -> Finite | Infinite:
    _require_complete(sys)
    auto = ObstructionAutomaton(sys)
    start = auto.start(src, prefix)
    if start is None:
        return Finite(0)
    graph = _useful_graph(auto, start, tgt)
    if start not in graph:
        return Finite(0)
    cyc = _find_cycle(graph, start)
    if cyc is not None:
        state, labels = cyc
        return Infinite(sys.quiver.path(labels))
    return Finite(_count(graph, start, tgt))


def hom_table(sys: RewriteSystem, max_len: int = 8, objects: Sequence[str] | None = None) -> dict[tuple[str, str], HomSet]:
    """Irreducible paths for every nonempty hom-set.

    Finite hom-sets are listed exhaustively; infinite ones up to ``max_len``.
    """
    _require_complete(sys)
    objects = list(objects if objects is not None else sys.quiver.objects)
    table: dict[tuple[str, str], HomSet] = {}
    for s in objects:
        for t in objects:
            verdict = finiteness(sys, s, t)
            if isinstance(verdict, Finite):
                if verdict.count == 0:
                    continue
                entries = _all_finite(sys, s, t, verdict.count)
            else:
                entries = irreducible_terms(sys, s, t, max_len)
            table[(s, t)] = HomSet(s, t, entries, verdict)
    return table


def _all_finite(sys: RewriteSystem, src: str, tgt: str, count: int, prefix: Sequence[str] = ()) -> list[Path]:
    # an acyclic useful graph bounds path length by its number of states
    bound = 1
    while True:
        got = irreducible_terms(sys, src, tgt, bound, prefix)
        if len(got) == count:
            return got
        bound *= 2

