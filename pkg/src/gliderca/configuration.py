"""Eventually periodic bi-infinite configurations.

A :class:`TailConfiguration` stands for ``^inf(left) center right^inf``.
The left tail occupies ``(-inf, start)`` with a full copy of `left`
ending at `start`; the right tail occupies ``[start + len(center), inf)``
starting with a fresh copy of `right`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .symbols import parse_word, show


def primitive_root(w: str) -> str:
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


def least_rotation(w: str) -> str:
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True, eq=False)
class TailConfiguration:
    left: str
    center: str
    right: str
    start: int = 0

    def __post_init__(self):
        if not self.left or not self.right:
            raise ValueError("tail words must be nonempty")

    # ------------------------------------------------------------------
    @classmethod
    def periodic(cls, w: str, start: int = 0) -> "TailConfiguration":
        """The configuration w^Z with a copy of `w` starting at `start`."""
        return cls(w, "", w, start)

    @classmethod
    def parse(cls, text: str) -> "TailConfiguration":
        """Parse ``<left> . <center> <right>`` (optionally ``@k``).

        The first token is the left tail, the last the right tail; the
        tokens in between form the center, in which a ``.`` marks the
        origin.  ``@k`` places the first center symbol at `k`.
        """
        text = text.strip()
        at = None
        m = re.search(r"@\s*(-?\d+)\s*$", text)
        if m:
            at = int(m.group(1))
            text = text[: m.start()].rstrip()
        tokens = text.replace(".", " . ").split()
        if len(tokens) < 2 or tokens[0] == "." or tokens[-1] == ".":
            raise ValueError(f"bad configuration literal {text!r}")
        middle = "".join(tokens[1:-1])
        if middle.count(".") > 1:
            raise ValueError("at most one origin marker allowed")
        dot = middle.find(".")
        center_names = middle.replace(".", "")
        start = -dot if dot >= 0 else 0
        if at is not None:
            start = at
        return cls(parse_word(tokens[0]), parse_word(center_names) if center_names else "",
                   parse_word(tokens[-1]), start).canonical()

    def __str__(self):
        return f"{show(self.left)} . {show(self.center)} {show(self.right)} @{self.start}"

    # ------------------------------------------------------------------
    @property
    def end(self) -> int:
        return self.start + len(self.center)

    def symbol_at(self, i: int) -> str:
        if i < self.start:
            return self.left[(i - self.start) % len(self.left)]
        if i >= self.end:
            return self.right[(i - self.end) % len(self.right)]
        return self.center[i - self.start]

    def subword(self, i: int, j: int) -> str:
        """x[i, j] (inclusive); empty when j < i."""
        if j < i:
            return ""
        return self.window(i, j + 1)

    def window(self, lo: int, hi: int) -> str:
        """x[lo, hi) as a string."""
        if hi <= lo:
            return ""
        parts = []
        s, e = self.start, self.end
        if lo < s:
            a, b = lo, min(hi, s)
            n = len(self.left)
            off = (a - s) % n
            length = b - a
            reps = (off + length) // n + 1
            parts.append((self.left * reps)[off: off + length])
        a, b = max(lo, s), min(hi, e)
        if a < b:
            parts.append(self.center[a - s: b - s])
        if hi > e:
            a = max(lo, e)
            n = len(self.right)
            off = (a - e) % n
            length = hi - a
            reps = (off + length) // n + 1
            parts.append((self.right * reps)[off: off + length])
        return "".join(parts)

    # ------------------------------------------------------------------
    def canonical(self) -> "TailConfiguration":
        """Absorb full tail periods from the ends of the center."""
        lt, rt, c, s = self.left, self.right, self.center, self.start
        nl, nr = len(lt), len(rt)
        i = 0
        while c.startswith(lt, i) and i + nl <= len(c):
            i += nl
        c = c[i:]
        s += i
        j = len(c)
        while j >= nr and c.endswith(rt, 0, j):
            j -= nr
        c = c[:j]
        if not c and lt == rt:
            s %= nl
        if (c, s) == (self.center, self.start):
            return self
        return TailConfiguration(lt, c, rt, s)

    def with_tails(self, left: str, right: str) -> "TailConfiguration":
        """Re-express with the given tail words; raises ValueError if the
        tails are not the same periodic sequences."""
        s, e = self.start, self.end
        # left side: find the largest s2 <= s with x(-inf, s2) = ^inf(left) ending at s2
        span = _lcm(len(self.left), len(left))
        s2 = None
        for k in range(span + len(left)):
            cand = s - k
            if self.window(cand - 2 * span, cand) == (left * (2 * span // len(left) + 1))[-2 * span:]:
                s2 = cand
                break
        if s2 is None:
            raise ValueError("left tail is not a shift of the requested word")
        span = _lcm(len(self.right), len(right))
        e2 = None
        for k in range(span + len(right)):
            cand = e + k
            if self.window(cand, cand + 2 * span) == (right * (2 * span // len(right) + 1))[: 2 * span]:
                e2 = cand
                break
        if e2 is None:
            raise ValueError("right tail is not a shift of the requested word")
        return TailConfiguration(left, self.window(s2, e2), right, s2).canonical()

    def normal_form(self) -> "TailConfiguration":
        lt = least_rotation(primitive_root(self.left))
        rt = least_rotation(primitive_root(self.right))
        return self.with_tails(lt, rt)

    def key(self):
        nf = self.__dict__.get("_nf")
        if nf is None:
            n = self.normal_form()
            nf = (n.left, n.center, n.right, n.start)
            object.__setattr__(self, "_nf", nf)
        return nf

    def __eq__(self, other):
        if not isinstance(other, TailConfiguration):
            return NotImplemented
        if (self.left, self.right) == (other.left, other.right):
            # both sides periodic outside [lo, hi): one period past each end decides
            lo = min(self.start, other.start) - len(self.left)
            hi = max(self.end, other.end) + len(self.right)
            return self.window(lo, hi) == other.window(lo, hi)
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # ------------------------------------------------------------------
    def shift(self, k: int = 1) -> "TailConfiguration":
        """sigma^k: the symbol at i+k moves to i."""
        return TailConfiguration(self.left, self.center, self.right, self.start - k)

    def occurrences(self, w: str, lo: int, hi: int) -> list[int]:
        """Left occurrences of `w` at positions in [lo, hi]."""
        if hi < lo:
            return []
        if not w:
            return list(range(lo, hi + 1))
        text = self.window(lo, hi + len(w))
        out = []
        i = text.find(w)
        while i != -1:
            out.append(lo + i)
            i = text.find(w, i + 1)
        return out

    def right_occurrences(self, w: str, lo: int, hi: int) -> list[int]:
        """Positions i in [lo, hi] such that x[i-|w|+1, i] = w."""
        return [i + len(w) - 1 for i in self.occurrences(w, lo - len(w) + 1, hi - len(w) + 1)]


def glue(x: TailConfiguration, y: TailConfiguration, i: int = 0) -> TailConfiguration:
    """x on (-inf, i-1] and y on [i, inf)."""
    nl = len(x.left)
    s = min(x.start, i)
    s -= (s - x.start) % nl  # keep left-tail phase
    nr = len(y.right)
    e = max(y.end, i)
    e += (y.end - e) % nr
    center = x.window(s, i) + y.window(i, e)
    return TailConfiguration(x.left, center, y.right, s).canonical()
