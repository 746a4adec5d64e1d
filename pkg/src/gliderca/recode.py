"""Conjugacies that put a periodic word z (and a companion word `one`) into
the normal form used by the glider construction.

Every priming step only adds primes to some occurrences of the symbols of
a word, so its inverse erases them again.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .codes import SlidingBlockCode, apply_code_to_presentation, higher_power, identity_code
from .configuration import TailConfiguration, primitive_root
from .presentation import SoficPresentation
from .symbols import Alphabet, block_symbol, name_of, show, symbol
from .syntactic import (
    SyntacticError, focus_state, gap_alphabet, gap_length_gcd, is_deterministic,
    is_synchronizing,
)

log = logging.getLogger(__name__)


class RecodingError(ValueError):
    pass


@dataclass(frozen=True)
class RecodingStep:
    code: SlidingBlockCode
    inverse: SlidingBlockCode
    domain: SoficPresentation
    image: SoficPresentation
    description: str
    z: str  # the zero word in the image

    @property
    def trivial(self) -> bool:
        return self.code.name == "identity"

    def to_dict(self) -> dict:
        return {
            "description": self.description,
            "memory": self.code.memory,
            "anticipation": self.code.anticipation,
            "rule": self.code.table_json(self.domain) if not self.trivial else [],
            "inverse_rule": self.inverse.table_json(self.image) if not self.trivial else [],
            "image": self.image.to_dict(),
            "z": [name_of(c) for c in self.z],
        }


@dataclass
class RecodingPipeline:
    source: SoficPresentation
    steps: list[RecodingStep] = field(default_factory=list)
    final: SoficPresentation | None = None
    z_final: str = ""
    one: str = ""
    p: int = 0
    q: int = 0
    K: int = 0

    def forward(self, x: TailConfiguration) -> TailConfiguration:
        for st in self.steps:
            x = st.code(x)
        return x

    def backward(self, x: TailConfiguration) -> TailConfiguration:
        for st in reversed(self.steps):
            x = st.inverse(x)
        return x

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "steps": [st.to_dict() for st in self.steps],
            "final": self.final.to_dict() if self.final else None,
            "z": [name_of(c) for c in self.z_final],
            "one": [name_of(c) for c in self.one],
            "p": self.p, "q": self.q, "K": self.K,
        }


# ----------------------------------------------------------------------
# priming steps

def fresh_prime(ch: str, taken) -> str:
    name = name_of(ch)
    while True:
        name += "'"
        s = symbol(name)
        if s not in taken:
            return s


def _priming_step(P: SoficPresentation, m: int, a: int, decide, targets: str,
                  tag: str, z: str) -> RecodingStep:
    """Build a step priming x[i] whenever decide(window, c) is true.

    `decide` gets the window x[i+m, i+a] and the symbol x[i]; only symbols
    in `targets` are ever primed.
    """
    taken = set(P.alphabet)
    prime = {}
    for c in targets:
        prime[c] = fresh_prime(c, taken)
        taken.add(prime[c])
    off = -m

    def rule(win: str) -> str:
        c = win[off]
        if c in prime and decide(win, c):
            return prime[c]
        return c

    width = a - m + 1
    table = {w: rule(w) for w in P.words(width)}
    if all(v == w[off] for w, v in table.items()):
        ident = identity_code()
        return RecodingStep(ident, ident, P, P, tag, z)
    used = set(table.values())
    symbols = [c for c in P.alphabet if c in used] + [prime[c] for c in targets if prime[c] in used]
    if len(symbols) < 2:
        raise RecodingError("image alphabet degenerated")
    code = SlidingBlockCode(m, a, rule, tag)
    back = {prime[c]: c for c in targets}
    inverse = SlidingBlockCode(0, 0, lambda w: back.get(w, w), tag + "^-1")
    image = apply_code_to_presentation(code, P, Alphabet(tuple(symbols)))
    return RecodingStep(code, inverse, P, image, tag, z)


def prime_future(P: SoficPresentation, w: str, z: str | None = None) -> RecodingStep:
    """Prime w_j unless it starts an occurrence of w_j ... w_n (j < n)."""
    _distinct(P, w)
    n = len(w)
    pos = {c: j for j, c in enumerate(w[:-1])}

    def decide(win, c):
        j = pos[c]
        return win[: n - j] != w[j:]

    return _priming_step(P, 0, n - 1, decide, w[:-1], "future-priming", z or w)


def prime_past(P: SoficPresentation, w: str, z: str | None = None) -> RecodingStep:
    """Prime w_j unless it ends an occurrence of w_1 ... w_j (j > 1)."""
    _distinct(P, w)
    n = len(w)
    pos = {c: j for j, c in enumerate(w) if j >= 1}

    def decide(win, c):
        j = pos[c]
        return win[n - 1 - j:] != w[: j + 1]

    return _priming_step(P, -(n - 1), 0, decide, w[1:], "past-priming", z or w)


def prime_zero(P: SoficPresentation, z: str, k: int) -> RecodingStep:
    """Prime 0_j unless it starts 0_j ... 0_p z^(k-1)."""
    p = len(z)
    pos = {c: j for j, c in enumerate(z)}

    def decide(win, c):
        j = pos[c]
        target = z[j:] + z * (k - 1)
        return win[: len(target)] != target

    return _priming_step(P, 0, k * p - 1, decide, z, "zero-priming", z)


def prime_after(P: SoficPresentation, z: str, w: str, tag: str = "one-derivation") -> RecodingStep:
    """Prime 0_j when it ends an occurrence of w 0_1 ... 0_j."""
    p = len(z)
    pos = {c: j for j, c in enumerate(z)}

    def decide(win, c):
        j = pos[c]
        return win.endswith(w + z[: j + 1])

    return _priming_step(P, -(len(w) + p - 1), 0, decide, z, tag, z)


def _distinct(P: SoficPresentation, w: str) -> None:
    if len(set(w)) != len(w):
        raise RecodingError("the symbols of the word must be distinct")
    if not P.language_contains(w):
        raise RecodingError("word is not in the language")


def primed_word(step: RecodingStep, w: str) -> str:
    """The image alphabet's fully primed copy of w (as minted by `step`)."""
    back = {}
    for c in step.image.alphabet:
        b = step.inverse.rule(c)
        if b != c:
            back[b] = c
    return "".join(back.get(c, c) for c in w)


# ----------------------------------------------------------------------
# the zero word

def block_step(P: SoficPresentation, z: str, n: int) -> tuple[RecodingStep, str]:
    image, beta, beta_inv = higher_power(P, n)
    k = n // 2
    p = len(z)
    zz = z * (n // p + 3)
    new_z = "".join(block_symbol(zz[(i - k) % p: (i - k) % p + n]) for i in range(p))
    image = image.fischer
    return RecodingStep(beta, beta_inv, P, image, "block", new_z), new_z


def make_zero(P: SoficPresentation, z: str, k: int = 1) -> RecodingPipeline:
    P = P.fischer
    if not z:
        raise RecodingError("z must be nonempty")
    if primitive_root(z) != z:
        raise RecodingError("z^Z must have least period |z|")
    if not P.contains_configuration(TailConfiguration.periodic(z)):
        raise RecodingError("z^Z is not in the shift")
    if k < 1 or not is_synchronizing(P, z * k):
        raise RecodingError(f"z^{k} is not synchronizing")
    pipe = RecodingPipeline(source=P)
    cur = P
    if len(set(z)) != len(z):
        st, z = block_step(cur, z, len(z))
        pipe.steps.append(st)
        cur = st.image
    for make in (prime_future, prime_past):
        st = make(cur, z)
        pipe.steps.append(st)
        cur = st.image
    st = prime_zero(cur, z, k)
    pipe.steps.append(st)
    cur = st.image
    if not (is_deterministic(cur, z) and is_synchronizing(cur, z)):
        raise AssertionError("zero recoding failed to produce a deterministic synchronizing word")
    pipe.final, pipe.z_final, pipe.p = cur, z, len(z)
    return pipe


# ----------------------------------------------------------------------
# the companion word

def _min_gcd_gap_word(P: SoficPresentation, z: str) -> str | None:
    """Gap word w (zwz in L, w over the non-z symbols) minimizing gcd(|z|, |w|),
    then shortest, then lexicographically least."""
    p = len(z)
    f = focus_state(P, z)
    B = set(gap_alphabet(P, z))
    best: dict[int, str] = {}
    layer = {f: ""}
    seen = set()
    length = 0
    limit = len(P.states) * p + 1
    while layer and length < limit:
        nxt: dict[str, str] = {}
        for s in sorted(layer, key=lambda s: P.alphabet.key(layer[s])):
            w = layer[s]
            for a in P.alphabet:
                if a in B:
                    for t in P.out_edges(s).get(a, ()):
                        key = (t, (length + 1) % p)
                        if key in seen or t in nxt:
                            continue
                        nxt[t] = w + a
        length += 1
        for t, w in nxt.items():
            seen.add((t, length % p))
            r = length % p
            if P.follow({t}, z) and (r not in best or (
                    len(best[r]) == len(w) and P.alphabet.key(w) < P.alphabet.key(best[r]))):
                best[r] = w
        layer = {t: w for t, w in nxt.items()}
    if not best:
        return None
    return min(best.values(), key=lambda w: (gcd(p, len(w)), len(w), P.alphabet.key(w)))


def _power_for(p: int, length: int) -> int:
    K = gcd(p, length)
    m = p // K
    return pow(length // K, -1, m) if m > 1 else 1


def _shortest_violation(P: SoficPresentation, z: str, K: int) -> str | None:
    """Shortest, lex-least v over the gap alphabet with zvz in L and K not dividing |v|."""
    f = focus_state(P, z)
    B = set(gap_alphabet(P, z))
    queue = deque([(f, 0, "")])
    seen = {(f, 0)}
    while queue:
        s, r, w = queue.popleft()
        if w and r != 0 and P.follow({s}, z):
            return w
        for a in P.alphabet:
            if a in B:
                for t in P.out_edges(s).get(a, ()):
                    key = (t, (r + 1) % K)
                    if key not in seen:
                        seen.add(key)
                        queue.append((t, (r + 1) % K, w + a))
    return None


def one_cycle_ok(P: SoficPresentation, z: str, one: str) -> bool:
    """z one^i z in L for every i >= 0, decided on the focus state of z."""
    f = focus_state(P, z)
    if f is None:
        return False
    cur = frozenset({f})
    seen = set()
    while cur not in seen:
        if not cur or not P.follow(cur, z):
            return False
        seen.add(cur)
        cur = P.follow(cur, one)
    return True


def derive_one(pipe: RecodingPipeline, max_rounds: int = 32) -> RecodingPipeline:
    cur, z = pipe.final, pipe.z_final
    p = len(z)
    for _ in range(max_rounds):
        w = _min_gcd_gap_word(cur, z)
        if w is None:
            raise RecodingError("the shift is finite: no gap word exists")
        K = gcd(p, len(w))
        one = w * _power_for(p, len(w))
        if not one_cycle_ok(cur, z, one):
            st = prime_after(cur, z, w)
            pipe.steps.append(st)
            cur = st.image
            base = w + primed_word(st, z)
            one = base * _power_for(p, len(base))
        v = _shortest_violation(cur, z, K)
        if v is None:
            pipe.final, pipe.one, pipe.q, pipe.K = cur, one, len(one), K
            return pipe
        log.info("gap length %d not divisible by K=%d, second priming", len(v), K)
        st = prime_after(cur, z, z + v, "second-priming")
        pipe.steps.append(st)
        cur = st.image
    raise RecodingError("companion word derivation did not converge")


def recode(P: SoficPresentation, z: str, k: int = 1) -> RecodingPipeline:
    return derive_one(make_zero(P, z, k))


# ----------------------------------------------------------------------
# the five properties

@dataclass
class Prop01Report:
    zero_ok: bool
    disjoint: bool
    cycle: bool
    congruence: bool
    gap_divisible: bool
    K: int

    @property
    def all(self) -> bool:
        return all(self.as_list())

    def as_list(self) -> list[bool]:
        return [self.zero_ok, self.disjoint, self.cycle, self.congruence, self.gap_divisible]


def verify_prop01(P: SoficPresentation, z: str, one: str) -> Prop01Report:
    P = P.fischer
    p, q = len(z), len(one)
    K = gcd(p, q) if q else p
    try:
        zero_ok = (
            len(set(z)) == len(z)
            and P.contains_configuration(TailConfiguration.periodic(z))
            and is_deterministic(P, z)
            and is_synchronizing(P, z)
        )
    except SyntacticError:
        zero_ok = False
    disjoint = bool(one) and not (set(z) & set(one))
    cycle = zero_ok and bool(one) and one_cycle_ok(P, z, one)
    congruence = bool(one) and q % p == K % p
    gap = False
    if zero_ok:
        g = gap_length_gcd(P, z)
        gap = g is not None and g % K == 0
    return Prop01Report(zero_ok, disjoint, cycle, congruence, gap, K)


def describe(pipe: RecodingPipeline) -> str:
    return (f"z={show(pipe.z_final)} one={show(pipe.one)} p={pipe.p} q={pipe.q} K={pipe.K} "
            f"steps={[st.description for st in pipe.steps if not st.trivial]}")
