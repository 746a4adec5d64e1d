"""Transition relations, determinism, synchronizing words and gap lengths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .presentation import PresentationError, SoficPresentation


class SyntacticError(ValueError):
    pass


@dataclass(frozen=True)
class SyntacticClass:
    """The relation {(s, t) : some w-labeled path goes from s to t}."""

    presentation: SoficPresentation
    relation: frozenset

    @property
    def zero(self) -> bool:
        return not self.relation

    def __mul__(self, other: "SyntacticClass") -> "SyntacticClass":
        return class_multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, SyntacticClass):
            return NotImplemented
        return self.presentation is other.presentation and self.relation == other.relation

    def __hash__(self):
        return hash(self.relation)


def transition_relation(P: SoficPresentation, w: str) -> SyntacticClass:
    rel = set()
    for s in P.states:
        for t in P.follow({s}, w):
            rel.add((s, t))
    return SyntacticClass(P, frozenset(rel))


def class_multiply(a: SyntacticClass, b: SyntacticClass) -> SyntacticClass:
    if a.presentation is not b.presentation:
        raise SyntacticError("classes belong to different presentations")
    succ: dict[str, set] = {}
    for s, t in b.relation:
        succ.setdefault(s, set()).add(t)
    rel = frozenset((s, u) for s, t in a.relation for u in succ.get(t, ()))
    return SyntacticClass(a.presentation, rel)


# ----------------------------------------------------------------------
# determinism

def _check_word(P: SoficPresentation, w: str) -> None:
    if len(set(w)) != len(w):
        raise SyntacticError("the symbols of the word must be distinct")
    if not P.language_contains(w):
        raise SyntacticError("word is not in the language")


def successors(P: SoficPresentation, w: str) -> list[str]:
    """Symbols a with wa in L."""
    return [a for a in P.alphabet if P.language_contains(w + a)]


def predecessors(P: SoficPresentation, w: str) -> list[str]:
    return [a for a in P.alphabet if P.language_contains(a + w)]


def is_future_deterministic(P: SoficPresentation, w: str) -> bool:
    _check_word(P, w)
    return all(len(successors(P, c)) == 1 for c in w[:-1])


def is_past_deterministic(P: SoficPresentation, w: str) -> bool:
    _check_word(P, w)
    return all(len(predecessors(P, c)) == 1 for c in w[1:])


def is_deterministic(P: SoficPresentation, w: str) -> bool:
    return is_future_deterministic(P, w) and is_past_deterministic(P, w)


# ----------------------------------------------------------------------
# synchronization

def focus_state(P: SoficPresentation, w: str) -> str | None:
    """The single terminal state of all w-paths, if there is one."""
    ends = P.follow(P.all_states, w)
    return next(iter(ends)) if len(ends) == 1 else None


def is_synchronizing(P: SoficPresentation, w: str) -> bool:
    if not P.is_minimal():
        raise SyntacticError("synchronization is decided on a Fischer cover; determinize first")
    if not P.language_contains(w):
        raise SyntacticError("word is not in the language")
    return focus_state(P, w) is not None


def _require_focus(P: SoficPresentation, z: str) -> str:
    if not P.is_minimal():
        P_min = P.fischer
        if P_min is not P:
            raise SyntacticError("presentation is not a Fischer cover")
    f = focus_state(P, z)
    if f is None or not P.language_contains(z):
        raise SyntacticError("z is not synchronizing")
    return f


def gap_alphabet(P: SoficPresentation, z: str) -> tuple[str, ...]:
    return tuple(a for a in P.alphabet if a not in z)


def _gap_subgraph(P: SoficPresentation, f: str, B: Iterable[str], z: str):
    """B-labeled edges reachable from f and co-reachable to a state where z is readable."""
    B = set(B)
    fwd = {f}
    queue = deque([f])
    while queue:
        s = queue.popleft()
        for a, ts in P.out_edges(s).items():
            if a in B:
                for t in ts:
                    if t not in fwd:
                        fwd.add(t)
                        queue.append(t)
    targets = {t for t in fwd if P.follow({t}, z)}
    back = set(targets)
    queue = deque(targets)
    while queue:
        t = queue.popleft()
        for a, ss in P.in_edges(t).items():
            if a in B:
                for s in ss:
                    if s in fwd and s not in back:
                        back.add(s)
                        queue.append(s)
    edges = [(s, a, t) for s, a, t in P.edges if a in B and s in back and t in back]
    return back, edges, targets & back


def gap_length_gcd(P: SoficPresentation, z: str, B: Iterable[str] | None = None) -> int | None:
    """gcd of |z| and all |w| with w in B^+ and zwz in L; None if no such w.

    Computed from BFS levels of the trimmed B-subgraph between the focus of
    z and the states that can read z: every path length from the focus to
    a target is congruent to the target's level modulo the gcd of the edge
    discrepancies, and all those residues are realized.
    """
    f = _require_focus(P, z)
    if B is None:
        B = gap_alphabet(P, z)
    nodes, edges, targets = _gap_subgraph(P, f, B, z)
    if f not in nodes or not edges:
        return None
    level = {f: 0}
    queue = deque([f])
    adj: dict[str, list[str]] = {}
    for s, _, t in edges:
        adj.setdefault(s, []).append(t)
    while queue:
        s = queue.popleft()
        for t in adj.get(s, ()):
            if t not in level:
                level[t] = level[s] + 1
                queue.append(t)
    g = 0
    for s, _, t in edges:
        g = gcd(g, level[s] + 1 - level[t])
    # nonempty paths only: a target at level 0 is f itself, reached by a cycle
    has_path = any(level[t] > 0 for t in targets) or (f in targets and g > 0)
    if not has_path:
        return None
    for t in targets:
        g = gcd(g, level[t])
    return gcd(g, len(z))


def gap_lengths_upto(P: SoficPresentation, z: str, bound: int, B: Iterable[str] | None = None) -> list[int]:
    """Lengths n <= bound for which some w in B^n has zwz in L (brute force on sets)."""
    f = _require_focus(P, z)
    B = tuple(gap_alphabet(P, z) if B is None else B)
    cur = frozenset({f})
    out = []
    for n in range(1, bound + 1):
        cur = frozenset(t for s in cur for a in B for t in P.out_edges(s).get(a, ()))
        if not cur:
            break
        if any(P.follow({t}, z) for t in cur):
            out.append(n)
    return out


def enumerate_gap_words(P: SoficPresentation, z: str, B: Iterable[str], n: int,
                        closed: bool = False) -> list[str]:
    """Words w in B^n with zw in L (with zwz in L when `closed`), lexicographic."""
    if n < 1:
        raise ValueError("n must be positive")
    B = set(B)
    start = P.follow(P.all_states, z)
    result: list[str] = []

    def rec(prefix: list[str], cur: frozenset):
        if len(prefix) == n:
            if not closed or P.follow(cur, z):
                result.append("".join(prefix))
            return
        for a in P.alphabet:
            if a in B:
                nxt = P.step(cur, a)
                if nxt:
                    prefix.append(a)
                    rec(prefix, nxt)
                    prefix.pop()

    if start:
        rec([], start)
    return result


def brute_gap_gcd(P: SoficPresentation, z: str, bound: int) -> int | None:
    lengths = gap_lengths_upto(P, z, bound)
    if not lengths:
        return None
    g = len(z)
    for n in lengths:
        g = gcd(g, n)
    return g


__all__ = [
    "SyntacticClass", "SyntacticError", "PresentationError", "transition_relation", "class_multiply",
    "is_future_deterministic", "is_past_deterministic", "is_deterministic", "is_synchronizing",
    "focus_state", "gap_alphabet", "gap_length_gcd", "gap_lengths_upto", "enumerate_gap_words",
    "brute_gap_gcd", "successors", "predecessors",
]


def relation_classes(P: SoficPresentation, ceiling: int = 100_000) -> dict[frozenset, str]:
    """Nonzero transition relations of P's words, each with its shortlex-least word.

    Breadth-first over words; stops with SyntacticError past `ceiling` classes.
    """
    gens = {a: transition_relation(P, a) for a in P.alphabet}
    seen: dict[frozenset, str] = {}
    queue = deque()
    for a in P.alphabet:
        r = gens[a]
        if not r.zero and r.relation not in seen:
            seen[r.relation] = a
            queue.append(r)
    while queue:
        r = queue.popleft()
        w = seen[r.relation]
        for a in P.alphabet:
            s = r * gens[a]
            if not s.zero and s.relation not in seen:
                if len(seen) >= ceiling:
                    raise SyntacticError("class ceiling exceeded (presumed non-sofic)")
                seen[s.relation] = w + a
                queue.append(s)
    return seen
