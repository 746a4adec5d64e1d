"""Semi-decision probes for blocking words and sensitivity evidence."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..configuration import TailConfiguration


@dataclass
class ProbeResult:
    refuted: bool
    pairs: int = 0
    steps: int = 0
    witness: tuple | None = None
    covered: set = field(default_factory=set)

    @property
    def verdict(self) -> str:
        return "refuted" if self.refuted else "not refuted"


def _check_params(w: str, e: int, p_off: int, r: int | None) -> None:
    if not 1 <= e <= len(w) or not 0 <= p_off <= len(w) - e:
        raise ValueError("need 1 <= e <= |w| and 0 <= p <= |w| - e")
    if r is not None and e < r + 1:
        raise ValueError(f"e must be at least r + 1 = {r + 1}")


def _run_pair(F, x, y, cells: Iterable[int], horizon: int, stop_on_first: bool):
    """Iterate both points; return (first time a cell differed, cells that ever differed, steps)."""
    cells = list(cells)
    x0, y0 = x, y
    hit: set[int] = set()
    first = None
    for t in range(horizon + 1):
        for c in cells:
            if c not in hit and x.symbol_at(c) != y.symbol_at(c):
                hit.add(c)
                if first is None:
                    first = (t, c)
        if hit and (stop_on_first or len(hit) == len(cells)):
            return first, hit, t
        if t == horizon:
            break
        x, y = F(x), F(y)
        if x == x0 and y == y0:
            # the pair is periodic, nothing new can happen
            return first, hit, t + 1
    return first, hit, horizon


def blocking_word_probe(F: Callable, w: str, e: int, p_off: int, horizon: int,
                        pairs: Iterable[tuple[TailConfiguration, TailConfiguration]],
                        r: int | None = None) -> ProbeResult:
    """Look for x, y in the cylinder of w at 0 whose images differ on [p_off, p_off+e-1]."""
    _check_params(w, e, p_off, r)
    res = ProbeResult(False)
    window = range(p_off, p_off + e)
    for x, y in pairs:
        if x.window(0, len(w)) != w or y.window(0, len(w)) != w:
            raise ValueError("sample pair is not in the cylinder of w")
        res.pairs += 1
        first, _, steps = _run_pair(F, x, y, window, horizon, True)
        res.steps += steps
        if first is not None:
            res.refuted = True
            res.witness = (x, y, first[0], first[1])
            return res
    return res


# ----------------------------------------------------------------------
# glider-based witness pairs

def direction_map(sys, p: int, q: int):
    """sigma^p o G^q."""
    G = sys.G

    def F(x):
        for _ in range(q):
            x = G(x)
        return x.shift(p)

    return F


def cylinder_point(sys, w: str, rng, pad: int = 8) -> TailConfiguration:
    """A z-finite point with w at position 0 and random material around it."""
    from ..sampling import random_path_word
    X, z = sys.ambient, sys.z
    src, dst = X.left_tail_states(z), X.right_tail_states(z)
    mids = frozenset(s for s in X.states if X.follow([s], w))
    for _ in range(500):
        a = random_path_word(X, rng, rng.randint(0, pad), src, mids)
        b = random_path_word(X, rng, rng.randint(0, pad), X.all_states, dst)
        if a is None or b is None:
            continue
        x = TailConfiguration(z, a + w + b, z, -len(a))
        if X.contains_configuration(x):
            return x
    raise ValueError("could not place w in a z-finite point")


def z_extension(sys, w: str, max_pad: int = 12) -> str | None:
    """Shortest u w v (u, v over the alphabet) with z u w v z in the language, u and v
    as short as possible; None if there is none within max_pad symbols."""
    X, z = sys.ambient, sys.z
    if X.language_contains(z + w + z):
        return w
    for total in range(1, max_pad + 1):
        for i in range(total + 1):
            for u in X.words(i):
                if not X.language_contains(z + u + w):
                    continue
                for v in X.words(total - i):
                    if X.language_contains(z + u + w + v + z):
                        return u + w + v
    return None


@dataclass
class SensitivityWitness:
    w: str
    n: int
    t: int
    side: str


def _differ(a: TailConfiguration, b: TailConfiguration, side: str, length: int) -> bool:
    pad = 2 * max(len(a.left), len(a.right), len(b.left), len(b.right))
    if side == "left":
        lo = min(a.start, b.start) - pad
        return a.window(lo, 0) != b.window(lo, 0)
    hi = max(a.end, b.end) + pad
    return a.window(length, hi) != b.window(length, hi)


def refute_direction(sys, r: int, s: int, w: str, horizon: int = 400,
                     gaps: Iterable[int] = (16, 32, 64, 4, 1)) -> SensitivityWitness | None:
    """Search the pair x = ^inf z . w z^inf, y = x with a distant glider, looking for a
    time where the images differ on the side of w that a blocking word would shield.

    For r >= 0 a gl is added on the right and the difference is sought on (-inf, -1];
    otherwise a gr is added on the left and the difference is sought on [|w|, inf).
    """
    z = sys.z
    F = direction_map(sys, r, s)
    x0 = TailConfiguration(z, w, z, 0)
    side = "left" if r >= 0 else "right"
    for n in gaps:
        if side == "left":
            y0 = TailConfiguration(z, w + z * n + sys.gl, z, 0)
        else:
            y0 = TailConfiguration(z, sys.gr + z * n + w, z, -len(sys.gr) - n * len(z))
        x, y = x0, y0
        for t in range(1, horizon + 1):
            x, y = F(x), F(y)
            if _differ(x, y, side, len(w)):
                return SensitivityWitness(w, n, t, side)
    return None


def sensitivity_probe(sys, r: int, s: int, words: Iterable[str], horizon: int = 400) -> dict:
    """Evidence that no candidate word blocks the direction sigma^r o G^s."""
    out = {}
    for w in words:
        ext = z_extension(sys, w)
        out[w] = refute_direction(sys, r, s, ext, horizon) if ext is not None else None
    return out
