"""Marker automorphisms: permute occurrences of an overlap-free word family.

Given a marker u, words W and a permutation pi of uWu preserving lengths
and transition relations, the map replacing every occurrence of each
w in uWu by pi(w) is a reversible cellular automaton.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .codes import apply_batch
from .configuration import TailConfiguration
from .presentation import SoficPresentation
from .symbols import name_of, show, word_from_names
from .syntactic import transition_relation


class MarkerError(ValueError):
    def __init__(self, report: "ValidationReport"):
        super().__init__("invalid marker data: " + "; ".join(f"{k}: {w}" for k, w in report.violations[:5]))
        self.report = report


def overlaps(a: str, b: str) -> list[tuple[str, bool]]:
    """All overlaps of a and b as (word, is_trivial)."""
    out: dict[str, bool] = {}
    for k in range(0, min(len(a), len(b)) + 1):
        if a[len(a) - k:] == b[:k]:
            w = b[:k]
            out[w] = k == 0 or (a == b == w)
    if a != b:
        if a in b:
            out[a] = False
        if b in a:
            out[b] = False
    return sorted(out.items(), key=lambda kv: len(kv[0]))


@dataclass
class ValidationReport:
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, kind: str, witness: str) -> None:
        self.violations.append((kind, witness))


def _full(u: str, W: Sequence[str]) -> list[str]:
    return [u + w + u for w in W]


def validate_marker(P: SoficPresentation | None, u: str, W: Sequence[str],
                    perm: dict[str, str]) -> ValidationReport:
    """Check the premises of the marker construction; `perm` acts on uWu."""
    rep = ValidationReport()
    words = _full(u, W)
    if len(set(words)) != len(words):
        rep.add("duplicate", "W lists a word twice")
    ws = set(words)
    if set(perm) != ws or set(perm.values()) != ws:
        rep.add("bijection", "permutation is not a bijection of uWu")
    if P is not None:
        for w in words:
            if not P.language_contains(w):
                rep.add("membership", show(w))
    for i, a in enumerate(words):
        for b in words[i:]:
            for ov, trivial in overlaps(a, b):
                if trivial or ov == u:
                    continue
                rep.add("overlap", f"{show(a)} / {show(b)} share {show(ov) or 'λ'}")
                break
    if P is not None:
        F = P if P.right_resolving else P.fischer
    for a, b in perm.items():
        if len(a) != len(b):
            rep.add("length", f"{show(a)} -> {show(b)}")
        elif P is not None and a in ws and transition_relation(F, a).relation != transition_relation(F, b).relation:
            rep.add("class", f"{show(a)} -> {show(b)}")
    return rep


def perm_from_cycles(u: str, cycles: Iterable[Sequence[str]]) -> tuple[list[str], dict[str, str]]:
    """W and the permutation of uWu given by cycles of inner words."""
    W: list[str] = []
    perm: dict[str, str] = {}
    for cyc in cycles:
        cyc = list(cyc)
        W.extend(cyc)
        for i, w in enumerate(cyc):
            perm[u + w + u] = u + cyc[(i + 1) % len(cyc)] + u
    return W, perm


@dataclass(frozen=True, eq=False)
class MarkerAutomorphism:
    u: str
    cycles: tuple[tuple[str, ...], ...]
    name: str = "F"

    @cached_property
    def words(self) -> tuple[str, ...]:
        return tuple(w for c in self.cycles for w in c)

    @cached_property
    def perm(self) -> dict[str, str]:
        return perm_from_cycles(self.u, self.cycles)[1]

    @cached_property
    def radius(self) -> int:
        return max((len(w) for w in self.perm), default=1) - 1

    @cached_property
    def _regex(self):
        if not self.perm:
            return None
        pats = sorted(self.perm, key=lambda w: (-len(w), w))
        return re.compile("(?=(" + "|".join(re.escape(w) for w in pats) + "))")

    def __eq__(self, other):
        return isinstance(other, MarkerAutomorphism) and (self.u, self.cycles) == (other.u, other.cycles)

    def __hash__(self):
        return hash((self.u, self.cycles))

    def inverse(self) -> "MarkerAutomorphism":
        cyc = tuple((c[0],) + tuple(reversed(c[1:])) for c in self.cycles)
        nm = self.name[:-3] if self.name.endswith("^-1") else self.name + "^-1"
        return MarkerAutomorphism(self.u, cyc, nm)

    def occurrence_positions(self, text: str) -> list[tuple[int, str]]:
        if self._regex is None:
            return []
        return [(m.start(), m.group(1)) for m in self._regex.finditer(text)]

    def rewrite(self, text: str) -> str:
        """Simultaneous replacement on a finite string (no trimming)."""
        occ = self.occurrence_positions(text)
        if not occ:
            return text
        out = list(text)
        for i, w in occ:
            out[i: i + len(w)] = self.perm[w]
        return "".join(out)

    def _batch(self, text: str) -> str:
        r = self.radius
        return self.rewrite(text)[r: len(text) - r]

    def __call__(self, x: TailConfiguration) -> TailConfiguration:
        r = self.radius
        return apply_batch(x, -r, r, self._batch)

    def validate(self, P: SoficPresentation | None) -> ValidationReport:
        return validate_marker(P, self.u, [w[len(self.u): len(w) - len(self.u)] for w in self.perm], self.perm)

    def to_dict(self) -> dict:
        return {"name": self.name, "u": [name_of(c) for c in self.u],
                "cycles": [[[name_of(c) for c in w] for w in cyc] for cyc in self.cycles]}

    @classmethod
    def from_dict(cls, d: dict) -> "MarkerAutomorphism":
        return cls(word_from_names(d["u"]),
                   tuple(tuple(word_from_names(w) for w in cyc) for cyc in d["cycles"]),
                   d.get("name", "F"))

    def swaps(self) -> list[tuple[str, ...]]:
        """The cycles on uWu, handy for display."""
        return [tuple(self.u + w + self.u for w in c) for c in self.cycles]


def build(P: SoficPresentation | None, u: str, cycles: Iterable[Sequence[str]], name: str = "F",
          check: bool = True) -> MarkerAutomorphism:
    cycles = tuple(tuple(c) for c in cycles if len(c) > 0)
    M = MarkerAutomorphism(u, cycles, name)
    if check:
        rep = M.validate(P)
        if any(len(c) < 2 for c in cycles) and not any(len(c) >= 2 for c in cycles):
            rep.add("bijection", "permutation is the identity")
        if not rep.valid:
            raise MarkerError(rep)
    return M


def apply(M, x: TailConfiguration, ambient: SoficPresentation | None = None) -> TailConfiguration:
    if ambient is not None and not ambient.contains_configuration(x):
        raise ValueError("configuration is not in the ambient shift")
    return M(x)


@dataclass(frozen=True, eq=False)
class CAPipeline:
    """Stages applied left to right."""

    stages: tuple
    ambient: SoficPresentation | None = None
    name: str = "G"

    def __call__(self, x: TailConfiguration) -> TailConfiguration:
        for st in self.stages:
            x = st(x)
        return x

    def inverse(self) -> "CAPipeline":
        nm = self.name[:-3] if self.name.endswith("^-1") else self.name + "^-1"
        return CAPipeline(tuple(st.inverse() for st in reversed(self.stages)), self.ambient, nm)

    def __eq__(self, other):
        return isinstance(other, CAPipeline) and self.stages == other.stages

    def __hash__(self):
        return hash(self.stages)

    def markers(self) -> list[MarkerAutomorphism]:
        out = []
        for st in self.stages:
            out.extend(st.markers() if isinstance(st, CAPipeline) else [st])
        return out

    @property
    def radius(self) -> int:
        return sum(st.radius for st in self.stages)

    def to_dict(self) -> dict:
        return {"name": self.name, "stages": [st.to_dict() for st in self.stages]}

    @classmethod
    def from_dict(cls, d: dict, ambient=None) -> "CAPipeline":
        stages = tuple(CAPipeline.from_dict(s) if "stages" in s else MarkerAutomorphism.from_dict(s)
                       for s in d["stages"])
        return cls(stages, ambient, d.get("name", "G"))


def compose(stages: Sequence, ambient: SoficPresentation | None = None, name: str = "G") -> CAPipeline:
    return CAPipeline(tuple(stages), ambient, name)


def power(F, t: int):
    """F^t as a callable (negative t uses the inverse)."""
    G = F if t >= 0 else F.inverse()

    def run(x):
        for _ in range(abs(t)):
            x = G(x)
        return x

    return run
