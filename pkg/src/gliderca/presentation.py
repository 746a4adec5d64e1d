"""Labeled-graph presentations of sofic shifts."""

from __future__ import annotations

import json
import logging
from collections import deque
from functools import cached_property
from typing import Callable, Iterable, Iterator

import networkx as nx

from .symbols import Alphabet, name_of, symbol

log = logging.getLogger(__name__)

Edge = tuple[str, str, str]  # (source, label, target)


class PresentationError(ValueError):
    pass


class SoficPresentation:
    """A finite labeled directed graph; the shift is the set of labels of
    its bi-infinite paths.

    Instances are treated as immutable.  Words and labels are characters
    from :mod:`gliderca.symbols`.
    """

    def __init__(self, alphabet: Alphabet, states: Iterable[str], edges: Iterable[Edge]):
        self.alphabet = alphabet
        self.states = tuple(states)
        if len(set(self.states)) != len(self.states):
            raise PresentationError("duplicate state names")
        known = set(self.states)
        edge_list = []
        for (s, a, t) in edges:
            if s not in known or t not in known:
                raise PresentationError(f"edge {(s, name_of(a), t)} uses an unknown state")
            if a not in alphabet:
                raise PresentationError(f"edge label {name_of(a)!r} not in alphabet")
            edge_list.append((s, a, t))
        self.edges = tuple(sorted(set(edge_list), key=lambda e: (e[0], alphabet.index(e[1]), e[2])))
        out: dict[str, dict[str, list[str]]] = {s: {} for s in self.states}
        inc: dict[str, dict[str, list[str]]] = {s: {} for s in self.states}
        for s, a, t in self.edges:
            out[s].setdefault(a, []).append(t)
            inc[t].setdefault(a, []).append(s)
        self._out = out
        self._in = inc

    # ------------------------------------------------------------------
    # construction / serialization

    @classmethod
    def from_dict(cls, data: dict, trim: bool = True) -> "SoficPresentation":
        try:
            alpha_names = list(data["alphabet"])
            state_names = [str(s) for s in data["states"]]
            raw_edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise PresentationError(f"malformed presentation: {exc}") from None
        if len(set(state_names)) != len(state_names):
            raise PresentationError("duplicate state names")
        try:
            alphabet = Alphabet.from_names(alpha_names)
        except ValueError as exc:
            raise PresentationError(str(exc)) from None
        edges = []
        for e in raw_edges:
            if not isinstance(e, (list, tuple)) or len(e) != 3:
                raise PresentationError(f"malformed edge {e!r}")
            src, label, dst = e
            edges.append((str(src), symbol(str(label)), str(dst)))
        pres = cls(alphabet, state_names, edges)
        if trim:
            trimmed = pres.trim()
            if len(trimmed.states) != len(pres.states):
                log.warning("removed %d non-essential states", len(pres.states) - len(trimmed.states))
            pres = trimmed
        if not pres.states or not pres.edges:
            raise PresentationError("presentation is empty after trimming")
        return pres

    def to_dict(self) -> dict:
        return {
            "alphabet": self.alphabet.names,
            "states": list(self.states),
            "edges": [[s, name_of(a), t] for s, a, t in self.edges],
        }

    def __repr__(self):
        return f"SoficPresentation({len(self.states)} states, {len(self.edges)} edges, alphabet={self.alphabet.names})"

    # ------------------------------------------------------------------
    # structure

    def out_edges(self, s: str) -> dict[str, list[str]]:
        return self._out[s]

    def in_edges(self, s: str) -> dict[str, list[str]]:
        return self._in[s]

    @cached_property
    def right_resolving(self) -> bool:
        return all(len(ts) == 1 for d in self._out.values() for ts in d.values())

    @cached_property
    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.states)
        for s, a, t in self.edges:
            g.add_edge(s, t, label=a)
        return g

    @cached_property
    def irreducible(self) -> bool:
        return bool(self.states) and nx.is_strongly_connected(self.graph)

    def is_essential(self) -> bool:
        return all(self._out[s] and self._in[s] for s in self.states)

    def trim(self) -> "SoficPresentation":
        """Restrict to the states lying on bi-infinite paths."""
        alive = set(self.states)
        changed = True
        while changed:
            changed = False
            for s in list(alive):
                has_out = any(t in alive for ts in self._out[s].values() for t in ts)
                has_in = any(t in alive for ts in self._in[s].values() for t in ts)
                if not (has_out and has_in):
                    alive.discard(s)
                    changed = True
        if len(alive) == len(self.states):
            return self
        return SoficPresentation(
            self.alphabet,
            [s for s in self.states if s in alive],
            [e for e in self.edges if e[0] in alive and e[2] in alive],
        )

    # ------------------------------------------------------------------
    # language

    def step(self, states: Iterable[str], a: str) -> frozenset[str]:
        out = self._out
        return frozenset(t for s in states for t in out[s].get(a, ()))

    def step_back(self, states: Iterable[str], a: str) -> frozenset[str]:
        inc = self._in
        return frozenset(t for s in states for t in inc[s].get(a, ()))

    def follow(self, states: Iterable[str], word: str) -> frozenset[str]:
        cur = frozenset(states)
        for a in word:
            if not cur:
                break
            cur = self.step(cur, a)
        return cur

    def precede(self, states: Iterable[str], word: str) -> frozenset[str]:
        cur = frozenset(states)
        for a in reversed(word):
            if not cur:
                break
            cur = self.step_back(cur, a)
        return cur

    @cached_property
    def all_states(self) -> frozenset[str]:
        return frozenset(self.states)

    def language_contains(self, word: str) -> bool:
        if not self.alphabet.is_word(word):
            return False
        return bool(self.follow(self.all_states, word)) or not word

    def left_tail_states(self, word: str) -> frozenset[str]:
        """States at which some left-infinite path labeled ^inf(word) ends."""
        cur = self.all_states
        while True:
            nxt = self.follow(cur, word)
            if nxt == cur:
                return cur
            cur = nxt

    def right_tail_states(self, word: str) -> frozenset[str]:
        """States from which some right-infinite path labeled word^inf starts."""
        cur = self.all_states
        while True:
            nxt = self.precede(cur, word)
            if nxt == cur:
                return cur
            cur = nxt

    def contains_configuration(self, x) -> bool:
        """Membership of an eventually periodic configuration."""
        if not self.alphabet.is_word(x.left + x.center + x.right):
            return False
        s = self.follow(self.left_tail_states(x.left), x.center)
        return bool(s & self.right_tail_states(x.right))

    def words(self, n: int, start: Iterable[str] | None = None) -> list[str]:
        """All words of length `n` readable from `start` (default: anywhere),
        in lexicographic order of the alphabet."""
        begin = self.all_states if start is None else frozenset(start)
        result: list[str] = []

        def rec(prefix: list[str], cur: frozenset[str]):
            if len(prefix) == n:
                result.append("".join(prefix))
                return
            for a in self.alphabet:
                nxt = self.step(cur, a)
                if nxt:
                    prefix.append(a)
                    rec(prefix, nxt)
                    prefix.pop()

        if begin:
            rec([], begin)
        return result

    def follow_labels(self, s: str, w: str) -> list[str]:
        """Labels of edges leaving the end of the path from `s` labeled `w`."""
        ends = self.follow({s}, w)
        return [a for a in self.alphabet if any(a in self._out[t] for t in ends)]

    def iter_words_upto(self, n: int) -> Iterator[str]:
        for k in range(n + 1):
            yield from self.words(k)

    # ------------------------------------------------------------------
    # minimal right-resolving presentation

    def follower_classes(self) -> dict[str, int]:
        """Partition of a right-resolving presentation's states by follower set."""
        if not self.right_resolving:
            raise PresentationError("follower classes need a right-resolving presentation")
        part = {s: 0 for s in self.states}
        n_blocks = 1
        while True:
            sig = {}
            new = {}
            for s in self.states:
                key = (part[s], tuple(
                    (self.alphabet.index(a), part[ts[0]]) for a, ts in sorted(
                        self._out[s].items(), key=lambda kv: self.alphabet.index(kv[0]))
                ))
                if key not in sig:
                    sig[key] = len(sig)
                new[s] = sig[key]
            if len(sig) == n_blocks:
                return new
            part, n_blocks = new, len(sig)

    def is_follower_separated(self) -> bool:
        return len(set(self.follower_classes().values())) == len(self.states)

    def is_minimal(self) -> bool:
        """True when this is a Fischer cover: right-resolving, irreducible and
        follower-separated."""
        return self.right_resolving and self.irreducible and self.is_follower_separated()

    @cached_property
    def fischer(self) -> "SoficPresentation":
        return determinize(self)


def determinize(P: SoficPresentation) -> SoficPresentation:
    """Fischer cover of the shift presented by an irreducible presentation.

    Subset construction seeded with all states, merge follower-equivalent
    subsets, then keep the unique terminal strongly connected component.
    """
    P = P.trim()
    if not P.states:
        raise PresentationError("empty presentation")
    if not P.irreducible:
        raise PresentationError("determinize needs an irreducible presentation")
    if P.right_resolving and P.is_follower_separated():
        return P

    start = P.all_states
    order = [start]
    seen = {start: 0}
    trans: list[dict[str, frozenset]] = []
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        d = {}
        for a in P.alphabet:
            nxt = P.step(cur, a)
            if nxt:
                d[a] = nxt
                if nxt not in seen:
                    seen[nxt] = len(order)
                    order.append(nxt)
                    queue.append(nxt)
        trans.append(d)

    def subset_name(sub: frozenset) -> str:
        if len(sub) == 1:
            return next(iter(sub))
        return "{" + ",".join(sorted(sub)) + "}"

    names = [f"#{i}" for i in range(len(order))]
    det = SoficPresentation(
        P.alphabet,
        names,
        [(names[i], a, names[seen[t]]) for i, d in enumerate(trans) for a, t in d.items()],
    )
    classes = det.follower_classes()
    # representative subset of each class: smallest, then by sorted names
    reps: dict[int, frozenset] = {}
    for i, sub in enumerate(order):
        c = classes[names[i]]
        r = reps.get(c)
        if r is None or (len(sub), sorted(sub)) < (len(r), sorted(r)):
            reps[c] = sub
    qnames = {c: subset_name(sub) for c, sub in reps.items()}
    if len(set(qnames.values())) != len(qnames):
        qnames = {c: f"q{c}" for c in reps}
    qedges = set()
    for i, d in enumerate(trans):
        for a, t in d.items():
            qedges.add((qnames[classes[names[i]]], a, qnames[classes[names[seen[t]]]]))
    g = nx.DiGraph()
    g.add_nodes_from(qnames.values())
    g.add_edges_from((s, t) for s, _, t in qedges)
    cond = nx.condensation(g)
    sinks = [n for n in cond.nodes if cond.out_degree(n) == 0]
    if len(sinks) != 1:
        raise PresentationError("no unique terminal component; input not irreducible?")
    members = set(cond.nodes[sinks[0]]["members"])
    # order states by first discovery in the subset construction
    ordered = []
    for i in range(len(order)):
        nm = qnames[classes[names[i]]]
        if nm in members and nm not in ordered:
            ordered.append(nm)
    return SoficPresentation(
        P.alphabet,
        ordered,
        [e for e in qedges if e[0] in members and e[2] in members],
    )


def parse_presentation(text: str, trim: bool = True) -> SoficPresentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"malformed presentation file: {exc}") from None
    if not isinstance(data, dict):
        raise PresentationError("presentation file must hold a JSON object")
    return SoficPresentation.from_dict(data, trim=trim)


def is_transitive(P: SoficPresentation) -> bool:
    return P.trim().irreducible


def block_presentation(
    P: SoficPresentation,
    d: int,
    rule: Callable[[str], str],
    alphabet: Alphabet,
) -> SoficPresentation:
    """Relabel the (d+1)-block presentation of `P` through `rule`.

    Vertices are paths of `d` edges, edges are paths of ``d + 1`` edges and
    carry ``rule(label of the path)``.  The result presents the image of
    the shift under the sliding block code with that local rule.
    """
    if d < 0:
        raise ValueError("negative diameter")
    if not P.right_resolving:
        P = P.fischer
    # a path of a right-resolving graph is determined by its start and label
    paths = [(s, "") for s in P.states]
    for _ in range(d):
        paths = [(s, w + a) for (s, w) in paths for a in P.follow_labels(s, w)]
    vid = {key: f"v{i}" for i, key in enumerate(paths)}
    new_edges = []
    for (s, w) in paths:
        for a in P.follow_labels(s, w):
            full = w + a
            nxt = (P.out_edges(s)[full[0]][0], full[1:])
            new_edges.append((vid[(s, w)], rule(full), vid[nxt]))
    return SoficPresentation(alphabet, list(vid.values()), new_edges).trim()
