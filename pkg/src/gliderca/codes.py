"""Sliding block codes acting on tail configurations and presentations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .configuration import TailConfiguration
from .presentation import SoficPresentation, block_presentation
from .symbols import Alphabet, block_symbol, name_of

BatchRule = Callable[[str], str]


class CodeDomainError(ValueError):
    """A window of the input is outside the domain of a local rule."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def apply_batch(x: TailConfiguration, m: int, a: int, batch: BatchRule) -> TailConfiguration:
    """Apply a local map with memory `m` and anticipation `a`.

    `batch(text)` must return the outputs for every position whose window
    fits inside `text`, i.e. ``len(text) - (a - m)`` symbols.  Tails are
    mapped to tails of the same period length.
    """
    nl, nr = len(x.left), len(x.right)
    lo = x.start - nl * _ceil_div(max(a, 0), nl)
    hi = x.end + nr * _ceil_div(max(-m, 0), nr)
    text = x.window(lo - nl + m, hi + nr + a)
    out = batch(text)
    if len(out) != hi - lo + nl + nr:
        raise AssertionError("batch rule returned the wrong number of symbols")
    return TailConfiguration(out[:nl], out[nl: nl + hi - lo], out[nl + hi - lo:], lo).canonical()


def windowed(rule: Callable[[str], str], m: int, a: int) -> BatchRule:
    """Turn a per-window rule into a batch rule."""
    width = a - m + 1

    def batch(text: str) -> str:
        return "".join(rule(text[i: i + width]) for i in range(len(text) - width + 1))

    return batch


@dataclass(frozen=True)
class SlidingBlockCode:
    """F(x)[i] = rule(x[i+m, i+a])."""

    memory: int
    anticipation: int
    rule: Callable[[str], str] = field(compare=False)
    name: str = "code"
    batch: BatchRule | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.memory > self.anticipation:
            raise ValueError("memory must not exceed anticipation")

    @property
    def diameter(self) -> int:
        return self.anticipation - self.memory

    @property
    def width(self) -> int:
        return self.diameter + 1

    def __call__(self, x: TailConfiguration) -> TailConfiguration:
        return apply_code_to_configuration(self, x)

    def table(self, P: SoficPresentation) -> dict[str, str]:
        """The local rule restricted to the words of L(P) of the window width."""
        return {w: self.rule(w) for w in P.words(self.width)}

    def table_json(self, P: SoficPresentation) -> list[list]:
        return [[[name_of(c) for c in w], name_of(v)] for w, v in self.table(P).items()]


def apply_code_to_configuration(c: SlidingBlockCode, x: TailConfiguration) -> TailConfiguration:
    batch = c.batch or windowed(c.rule, c.memory, c.anticipation)
    try:
        return apply_batch(x, c.memory, c.anticipation, batch)
    except KeyError as exc:
        raise CodeDomainError(f"window outside the domain of {c.name}: {exc}") from None


def apply_code_to_presentation(
    c: SlidingBlockCode, P: SoficPresentation, alphabet: Alphabet | None = None, minimize: bool = True
) -> SoficPresentation:
    """Presentation of the image shift: (d+1)-block graph relabeled by the rule."""
    if alphabet is None:
        outs = []
        for v in c.table(P).values():
            if v not in outs:
                outs.append(v)
        alphabet = Alphabet(tuple(outs)) if len(outs) >= 2 else Alphabet(tuple(outs) + ("\x00",))
    Q = block_presentation(P, c.diameter, c.rule, alphabet)
    return Q.fischer if minimize else Q


def identity_code() -> SlidingBlockCode:
    return SlidingBlockCode(0, 0, lambda w: w, "identity")


def shift(k: int = 1) -> SlidingBlockCode:
    """sigma^k as the code with m = a = k reading the single symbol x[i+k]."""
    return SlidingBlockCode(k, k, lambda w: w, f"shift({k})",
                            batch=lambda text: text)


def higher_power(P: SoficPresentation, n: int):
    """(P^[n], beta_n, beta_n^-1) with beta_n(x)[i] = x[i-k, i-k+n-1], k = n // 2."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return P, identity_code(), identity_code()
    k = n // 2
    words = P.words(n)
    alphabet = Alphabet(tuple(block_symbol(w) for w in words))
    beta = SlidingBlockCode(-k, -k + n - 1, block_symbol, f"beta_{n}")
    back = {block_symbol(w): w[k] for w in words}
    beta_inv = SlidingBlockCode(0, 0, back.__getitem__, f"beta_{n}^-1")
    image = block_presentation(P, n - 1, block_symbol, alphabet)
    return image, beta, beta_inv
