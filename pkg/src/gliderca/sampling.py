"""Reproducible random configurations drawn by path sampling."""

from __future__ import annotations

import random

from .configuration import TailConfiguration
from .presentation import SoficPresentation


def _backward_sets(P: SoficPresentation, accept: frozenset, n: int) -> list[frozenset]:
    """can[k] = states with a path of exactly k edges into `accept`."""
    can = [accept]
    for _ in range(n):
        prev = can[-1]
        can.append(frozenset(s for s in P.states
                             if any(t in prev for ts in P.out_edges(s).values() for t in ts)))
    return can


def random_path_word(P: SoficPresentation, rng: random.Random, n: int,
                     start: frozenset, accept: frozenset) -> str | None:
    """Uniform choice of edge at each step among those that can still finish."""
    can = _backward_sets(P, accept, n)
    choices = sorted(s for s in start if s in can[n])
    if not choices:
        return None
    s = rng.choice(choices)
    out = []
    for rem in range(n, 0, -1):
        opts = [(a, t) for a, ts in P.out_edges(s).items() for t in ts if t in can[rem - 1]]
        opts.sort(key=lambda e: (P.alphabet.index(e[0]), e[1]))
        a, s = rng.choice(opts)
        out.append(a)
    return "".join(out)


def random_cycle(P: SoficPresentation, rng: random.Random, max_len: int = 6) -> str:
    """Label of a random closed walk of length <= max_len."""
    for _ in range(100):
        n = rng.randint(1, max_len)
        s = rng.choice(P.states)
        w = random_path_word(P, rng, n, frozenset({s}), frozenset({s}))
        if w:
            return w
    s = P.states[0]
    for n in range(1, len(P.states) + 1):
        w = random_path_word(P, rng, n, frozenset({s}), frozenset({s}))
        if w:
            return w
    raise ValueError("presentation has no cycle")


def random_configuration(P: SoficPresentation, rng: random.Random, length: int,
                         left: str | None = None, right: str | None = None,
                         start: int | None = None) -> TailConfiguration:
    """A configuration ^inf(left) c right^inf of P with |c| close to `length`."""
    left = left or random_cycle(P, rng)
    right = right or random_cycle(P, rng)
    src = P.left_tail_states(left)
    dst = P.right_tail_states(right)
    if not src or not dst:
        raise ValueError("tail words do not give configurations of the shift")
    for n in list(range(length, length + len(P.states) + 2)) + list(range(length - 1, -1, -1)):
        c = random_path_word(P, rng, n, src, dst)
        if c is not None:
            if start is None:
                s = -rng.randint(0, max(n, 1) - 1) if n else 0
            else:
                s = start
            return TailConfiguration(left, c, right, s)
    raise ValueError("no configuration with the requested tails")


def random_finite(P: SoficPresentation, z: str, rng: random.Random, max_len: int = 24,
                  min_len: int = 0) -> TailConfiguration:
    """A random z-finite configuration with a center of length in [min_len, max_len]."""
    n = rng.randint(min_len, max_len)
    return random_configuration(P, rng, n, z, z)


def random_words(P: SoficPresentation, rng: random.Random, n: int, count: int) -> list[str]:
    everything = P.all_states
    out = []
    for _ in range(count):
        w = random_path_word(P, rng, n, everything, everything)
        if w is not None:
            out.append(w)
    return out
