"""S-gap shifts: the coded shifts generated by {0 1^n : n in S}."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..configuration import TailConfiguration
from ..presentation import PresentationError, SoficPresentation


@dataclass(frozen=True)
class SGapSpec:
    """Either S = members ∪ {preperiod + r + k*period : r in residues, k >= 0}
    (members all below preperiod), or a membership predicate valid up to `bound`."""

    members: frozenset = frozenset()
    preperiod: int = 0
    period: int = 0
    residues: frozenset = frozenset()
    predicate: Callable[[int], bool] | None = field(default=None, compare=False)
    bound: int | None = None

    @property
    def kind(self) -> str:
        return "predicate" if self.predicate is not None else "explicit"

    @classmethod
    def finite(cls, members: Iterable[int]) -> "SGapSpec":
        m = frozenset(members)
        return cls(m, max(m, default=-1) + 1)

    @classmethod
    def eventually_periodic(cls, members: Iterable[int], preperiod: int, period: int,
                            residues: Iterable[int]) -> "SGapSpec":
        m, res = frozenset(members), frozenset(r % period for r in residues)
        if any(n >= preperiod or n < 0 for n in m):
            raise ValueError("finite members must lie in [0, preperiod)")
        return cls(m, preperiod, period, res)

    @classmethod
    def from_predicate(cls, pred: Callable[[int], bool], bound: int) -> "SGapSpec":
        return cls(predicate=pred, bound=bound)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if self.predicate is not None:
            if n > self.bound:
                raise ValueError(f"{n} exceeds the predicate bound {self.bound}")
            return bool(self.predicate(n))
        if n < self.preperiod:
            return n in self.members
        return self.period > 0 and (n - self.preperiod) % self.period in self.residues

    @property
    def infinite(self) -> bool:
        return self.predicate is not None or (self.period > 0 and bool(self.residues))

    def elements(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if n in self]

    def has_at_least(self, a: int) -> bool:
        """Is there some n in S with n >= a?"""
        if self.predicate is not None:
            return any(n in self for n in range(a, self.bound + 1))
        if self.infinite:
            return True
        return any(n >= a for n in self.members)


def perfect_squares(bound: int = 400) -> SGapSpec:
    return SGapSpec.from_predicate(lambda n: math.isqrt(n) ** 2 == n, bound)


def build_sgap(spec: SGapSpec):
    """The count-the-ones presentation for explicit S, a bounded oracle otherwise."""
    if spec.kind == "predicate":
        return BoundedSGapLanguage(spec)
    if not spec.members and not spec.residues:
        raise PresentationError("S is empty")
    last = spec.preperiod + spec.period - 1 if spec.infinite else spec.preperiod - 1
    edges = []
    for c in range(last + 1):
        if c < last:
            edges.append([str(c), "1", str(c + 1)])
        elif spec.infinite:
            edges.append([str(c), "1", str(spec.preperiod)])
        if c in spec:
            edges.append([str(c), "0", "0"])
    P = SoficPresentation.from_dict({"alphabet": ["0", "1"], "states": [str(c) for c in range(last + 1)],
                                     "edges": edges})
    if not P.states:
        raise PresentationError("S gives an empty shift")
    return P


def generator_membership(spec: SGapSpec, w: str) -> bool:
    """w is a subword of a concatenation of generators 0 1^n, n in S."""
    if any(c not in "01" for c in w):
        return False
    runs = w.split("0")
    if len(runs) == 1:
        return spec.has_at_least(len(w))
    if not all(len(r) in spec for r in runs[1:-1]):
        return False
    return spec.has_at_least(len(runs[0])) and spec.has_at_least(len(runs[-1]))


def generator_language(spec: SGapSpec, L: int) -> set[str]:
    """All subwords of length <= L of generator concatenations, by enumeration."""
    gens = ["0" + "1" * n for n in spec.elements(L + 1)]
    if spec.has_at_least(L + 1) and not any(len(g) > L for g in gens):
        n = next(n for n in range(L + 1, L + 1 + max(spec.period, 1) + spec.preperiod + 1) if n in spec)
        gens.append("0" + "1" * n)
    out: set[str] = {""}

    def extend(prefix: str, budget: int):
        for i in range(len(prefix)):
            for j in range(i + 1, min(len(prefix), i + L) + 1):
                out.add(prefix[i:j])
        if budget <= 0:
            return
        for g in gens:
            extend(prefix + g, budget - len(g))

    for g in gens:
        extend(g, L)
    return out


@dataclass
class BoundedSGapLanguage:
    """Membership for words whose runs stay within the predicate bound."""

    spec: SGapSpec

    def contains(self, w: str) -> bool:
        if len(w) > self.spec.bound:
            raise ValueError("word longer than the oracle bound")
        return generator_membership(self.spec, w)

    language_contains = contains


# ----------------------------------------------------------------------
# sampling and the gap-inertness check

def random_sgap_configuration(spec: SGapSpec, rng, blocks: int = 8, max_gap: int = 20,
                              prefer: Iterable[int] = (), planted: str | None = None) -> TailConfiguration:
    """Concatenate random generators; tails are the generator of the least element of S."""
    pool = spec.elements(max_gap)
    if not pool:
        raise ValueError("no elements of S below max_gap")
    prefer = [n for n in prefer if n in spec]
    t = "0" + "1" * pool[0]
    pick = lambda: rng.choice(prefer) if prefer and rng.random() < 0.5 else rng.choice(pool)  # noqa: E731
    left = "".join("0" + "1" * pick() for _ in range(rng.randint(0, blocks)))
    right = "".join("0" + "1" * pick() for _ in range(rng.randint(0, blocks)))
    if planted is None:
        return TailConfiguration(t, left + right, t, -rng.randint(0, max(len(left + right) - 1, 0)))
    # planted words start with 0 and end right before a 0
    return TailConfiguration(t, left + planted + right, t, -len(left))


def gap_occurrences(x: TailConfiguration, lo: int, hi: int, min_n: int) -> set[tuple[int, int]]:
    """(i, n) with 0 1^n 0 at position i inside [lo, hi), n >= min_n."""
    text = x.window(lo, hi)
    out = set()
    zeros = [i for i, c in enumerate(text) if c == "0"]
    for a, b in zip(zeros, zeros[1:]):
        n = b - a - 1
        if n >= min_n:
            out.add((lo + a, n))
    return out


@dataclass
class GapInertReport:
    checked: int = 0
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.witnesses


def gapinert_check(spec: SGapSpec, F, r: int, samples: Iterable[TailConfiguration]) -> GapInertReport:
    """Long gaps (n >= 2r) sit at the same positions in x and F(x)."""
    rep = GapInertReport()
    for x in samples:
        y = F(x)
        lo = min(x.start, y.start) - 2 * r - 2 * max(len(x.left), len(x.right))
        hi = max(x.end, y.end) + 2 * r + 2 * max(len(x.left), len(x.right))
        a, b = gap_occurrences(x, lo, hi, 2 * r), gap_occurrences(y, lo, hi, 2 * r)
        rep.checked += 1
        if a != b:
            rep.witnesses.append((x, sorted(a ^ b)))
    return rep


def sgap_H(spec: SGapSpec, n1: int, n2: int, n3: int):
    """The swap 0 1^n3 0 1^n1 0 1^n2 0 <-> 0 1^n3 0 1^n2 0 1^n1 0."""
    from ..glider import build_ryan_H
    for n in (n1, n2, n3):
        if n not in spec:
            raise ValueError(f"{n} is not in S")
    return build_ryan_H(None, "0", "1" * n1, "1" * n2, "1" * n3)


def least_long_gap(spec: SGapSpec, r: int, limit: int = 10_000) -> int:
    """Least n in S with n >= 2r."""
    for n in range(2 * r, limit):
        if n in spec:
            return n
    raise ValueError("no element of S above 2r")
