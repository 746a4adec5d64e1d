"""Construction of the diffusive glider automata and the fleet-exchange maps."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .marker import CAPipeline, MarkerAutomorphism, build, compose
from .presentation import SoficPresentation
from .recode import RecodingPipeline, one_cycle_ok, recode, verify_prop01
from .symbols import name_of, show, word_from_names
from .syntactic import enumerate_gap_words, focus_state, gap_alphabet, transition_relation

log = logging.getLogger(__name__)

DEFAULT_CLASS_CEILING = 10 ** 6


class GliderBuildError(ValueError):
    pass


@dataclass
class GliderSystem:
    ambient: SoficPresentation
    z: str
    one: str
    p: int
    q: int
    K: int
    B: tuple[str, ...]
    P1: MarkerAutomorphism
    P2: MarkerAutomorphism
    P4: MarkerAutomorphism
    G: CAPipeline
    P3: MarkerAutomorphism | None = None
    n_param: int | None = None
    N: int | None = None
    N1: int | None = None
    tables: dict = field(default_factory=dict)
    pipeline: RecodingPipeline | None = None

    @property
    def gl(self) -> str:
        return self.z * self.q + self.one

    @property
    def gr(self) -> str:
        return self.one * (self.p + 1)

    @property
    def s(self) -> int:
        return self.p * self.q

    @property
    def sofic(self) -> bool:
        return self.P3 is not None

    @property
    def min_n(self) -> int:
        """Least legal parameter n, i.e. |one^(p+1+p/K)| + 1."""
        return self.q * (self.p + 1 + self.p // self.K) + 1

    def summary(self) -> dict:
        return {
            "z": show(self.z), "one": show(self.one), "p": self.p, "q": self.q, "K": self.K,
            "s": self.s, "gl": show(self.gl), "gr": show(self.gr), "N": self.N, "N1": self.N1,
            "n": self.n_param, "sofic": self.sofic,
        }

    def to_dict(self) -> dict:
        names = lambda w: [name_of(c) for c in w]  # noqa: E731
        return {
            "ambient": self.ambient.to_dict(),
            "z": names(self.z), "one": names(self.one),
            "p": self.p, "q": self.q, "K": self.K,
            "B": names("".join(self.B)),
            "n": self.n_param, "N": self.N, "N1": self.N1,
            "P1": self.P1.to_dict(), "P2": self.P2.to_dict(),
            "P3": self.P3.to_dict() if self.P3 else None,
            "P4": self.P4.to_dict(),
            "tables": _tables_json(self.tables),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GliderSystem":
        amb = SoficPresentation.from_dict(d["ambient"], trim=False)
        P1 = MarkerAutomorphism.from_dict(d["P1"])
        P2 = MarkerAutomorphism.from_dict(d["P2"])
        P3 = MarkerAutomorphism.from_dict(d["P3"]) if d.get("P3") else None
        P4 = MarkerAutomorphism.from_dict(d["P4"])
        stages = [P1, P2] + ([P3] if P3 else []) + [P4]
        return cls(
            ambient=amb, z=word_from_names(d["z"]), one=word_from_names(d["one"]),
            p=d["p"], q=d["q"], K=d["K"], B=tuple(word_from_names(d["B"])),
            P1=P1, P2=P2, P3=P3, P4=P4, G=compose(stages, amb, "G_X" if P3 else "G_Xn"),
            n_param=d.get("n"), N=d.get("N"), N1=d.get("N1"), tables=_tables_from_json(d.get("tables", {})),
        )


def _tables_json(t: dict) -> dict:
    out = {}
    for k, v in t.items():
        if k == "classes":
            out[k] = [{kk: ([name_of(c) for c in vv] if isinstance(vv, str) else
                            [[name_of(c) for c in w] for w in vv]) for kk, vv in cl.items()} for cl in v]
        elif k == "U":
            out[k] = [{kk: ([name_of(c) for c in vv] if isinstance(vv, str) else
                            [[name_of(c) for c in w] for w in vv]) if kk != "j" else vv
                       for kk, vv in row.items()} for row in v]
        else:
            out[k] = v
    return out


def _tables_from_json(t: dict) -> dict:
    out = {}
    for k, v in t.items():
        if k in ("classes", "U"):
            rows = []
            for row in v:
                r = {}
                for kk, vv in row.items():
                    if kk == "j":
                        r[kk] = vv
                    elif vv and isinstance(vv[0], list):
                        r[kk] = [word_from_names(w) for w in vv]
                    else:
                        r[kk] = word_from_names(vv)
                rows.append(r)
            out[k] = rows
        else:
            out[k] = v
    return out


# ----------------------------------------------------------------------
# P1, P2

def build_P1(X: SoficPresentation, z: str, one: str, p: int, q: int) -> MarkerAutomorphism:
    return build(X, z, [(z * q + one, one * (p + 1))], "P1")


def build_P2(X: SoficPresentation, z: str, one: str, p: int, q: int) -> MarkerAutomorphism:
    return build(X, z, [(one * (p + 1), one + z * q)], "P2")


# ----------------------------------------------------------------------
# P3

def _class_representatives(X, z, B, K, T, ceiling):
    """Shortest lex-least w in (B^K)^+ with zw in L and |w| > T, one per class of zw."""
    f = focus_state(X, z)
    Bs = [a for a in X.alphabet if a in B]
    start = (f, 0, 0)
    layer = {start: ""}
    seen = {start}
    reps: dict[frozenset, str] = {}
    length = 0
    while layer:
        if len(seen) > ceiling:
            raise GliderBuildError("class saturation exceeded the ceiling (presumed non-sofic)")
        nxt: dict[tuple, str] = {}
        for node in sorted(layer, key=lambda nd: X.alphabet.key(layer[nd])):
            s, c, r = node
            w = layer[node]
            for a in Bs:
                for t in X.out_edges(s).get(a, ()):
                    key = (t, min(c + 1, T + 1), (r + 1) % K)
                    if key in seen or key in nxt:
                        continue
                    nxt[key] = w + a
        length += 1
        for key, w in nxt.items():
            seen.add(key)
            t, c, r = key
            if c == T + 1 and r == 0:
                rel = transition_relation(X, z + w).relation
                if rel not in reps:
                    reps[rel] = w
        layer = nxt
    return reps


def _family_word(one, z, p, q, a, b, tail):
    return (one + z) * a + one * b + one * (p + 1) + z + tail


def _choose_N(one, z, p, q, K, reps_words, key):
    lo = q * (p + 1 + p // K) + 1
    N = -(-lo // K) * K
    while True:
        choice = {}
        for wp in reps_words:
            rest = N - (q * (p + 1) + p + len(wp))
            best = None
            a = 1
            while a * (q + p) + q <= rest:
                rb = rest - a * (q + p)
                if rb % q == 0 and rb // q >= 1:
                    cand = _family_word(one, z, p, q, a, rb // q, wp)
                    if best is None or key(cand) < key(best):
                        best = cand
                a += 1
            if best is None:
                break
            choice[wp] = best
        else:
            return N, choice
        N += K


def build_P3(X: SoficPresentation, z: str, one: str, p: int, q: int, K: int,
             ceiling: int = DEFAULT_CLASS_CEILING):
    B = gap_alphabet(X, z)
    T = q * (p + 1)
    reps = _class_representatives(X, z, set(B), K, T, ceiling)
    if not reps:
        raise GliderBuildError("no gap words long enough for P3")
    order = sorted(reps.items(), key=lambda kv: X.alphabet.shortlex_key(kv[1]))
    N1 = max(len(w) for _, w in order)
    N, chosen = _choose_N(one, z, p, q, K, [w for _, w in order], X.alphabet.key)
    all_N = enumerate_gap_words(X, z, B, N)
    classes = []
    cycles = []
    for rel, wp in order:
        wS = chosen[wp]
        WpS = [w for w in all_N if transition_relation(X, z + w).relation == rel]
        WpS.sort(key=X.alphabet.key)
        classes.append({"w_prime": wp, "w": wS, "W_prime": WpS})
        cycles.append([z * (q + 1) + w for w in [wS] + WpS])
    M = build(X, "", cycles, "P3")
    return M, N, N1, classes


# ----------------------------------------------------------------------
# P4

def build_P4(X: SoficPresentation, z: str, one: str, p: int, q: int, K: int, n: int):
    if n <= q * (p + 1 + p // K):
        raise GliderBuildError(f"n must exceed |one^(p+1+p/K)| = {q * (p + 1 + p // K)}")
    B = gap_alphabet(X, z)
    gaps_by_len = {L: enumerate_gap_words(X, z, B, L, closed=True) for L in range(1, n)}
    cycles = []
    rows = []
    for j in range(1, p // K + 1):
        uj = one + z * q + one * j
        last = one * (p + 1 + j)
        U = [w for L in range(1, n) if L % p == ((j + 1) * K) % p for w in gaps_by_len[L]]
        if j == p // K:
            U = [w for w in U if w not in (one, one * (p + 1))]
        if last not in U:
            raise GliderBuildError("one^(p+1+j) is not an admissible gap word")
        U.remove(last)
        U.sort(key=lambda w: (-len(w), X.alphabet.key(w)))
        U.append(last)
        T = max(len(uj), max(len(w) for w in U)) + (q + 1) * p
        pad = lambda w: z * ((T - len(w)) // p) + w  # noqa: E731
        padded = [pad(uj)] + [pad(w) for w in U]
        # marker u = z; inner words drop one leading z
        cycles.append([w[p:] for w in padded])
        rows.append({"j": j, "u_prime": uj, "U_prime": U, "padded": padded})
    M = build(X, z, cycles, "P4")
    return M, rows


# ----------------------------------------------------------------------
# assembled systems

def _prepare(P: SoficPresentation, z: str, k: int, pipeline: RecodingPipeline | None):
    pipe = pipeline if pipeline is not None else recode(P, z, k)
    X = pipe.final
    rep = verify_prop01(X, pipe.z_final, pipe.one)
    if not rep.all:
        raise GliderBuildError(f"companion word check failed: {rep}")
    return pipe, X, pipe.z_final, pipe.one, pipe.p, pipe.q, pipe.K


def build_GX(P: SoficPresentation, z: str, k: int = 1, pipeline: RecodingPipeline | None = None,
             ceiling: int = DEFAULT_CLASS_CEILING) -> GliderSystem:
    pipe, X, z, one, p, q, K = _prepare(P, z, k, pipeline)
    P1 = build_P1(X, z, one, p, q)
    P2 = build_P2(X, z, one, p, q)
    P3, N, N1, classes = build_P3(X, z, one, p, q, K, ceiling)
    P4, rows = build_P4(X, z, one, p, q, K, N)
    G = compose([P1, P2, P3, P4], X, "G_X")
    return GliderSystem(X, z, one, p, q, K, gap_alphabet(X, z), P1, P2, P4, G, P3=P3, n_param=N,
                        N=N, N1=N1, tables={"classes": classes, "U": rows}, pipeline=pipe)


def build_GXn(P: SoficPresentation, z: str, k: int = 1, n: int | None = None,
              pipeline: RecodingPipeline | None = None) -> GliderSystem:
    pipe, X, z, one, p, q, K = _prepare(P, z, k, pipeline)
    if n is None:
        n = q * (p + 1 + p // K) + 1
    P1 = build_P1(X, z, one, p, q)
    P2 = build_P2(X, z, one, p, q)
    P4, rows = build_P4(X, z, one, p, q, K, n)
    G = compose([P1, P2, P4], X, f"G_X,{n}")
    return GliderSystem(X, z, one, p, q, K, gap_alphabet(X, z), P1, P2, P4, G, n_param=n,
                        tables={"U": rows}, pipeline=pipe)


def with_n(sys: GliderSystem, n: int) -> GliderSystem:
    """The synchronizing-case system G_{X,n} over the same recoded shift."""
    P4, rows = build_P4(sys.ambient, sys.z, sys.one, sys.p, sys.q, sys.K, n)
    G = compose([sys.P1, sys.P2, P4], sys.ambient, f"G_X,{n}")
    return GliderSystem(sys.ambient, sys.z, sys.one, sys.p, sys.q, sys.K, sys.B, sys.P1, sys.P2, P4, G,
                        n_param=n, tables={"U": rows}, pipeline=sys.pipeline)


# ----------------------------------------------------------------------
# fleet exchange and the swap used against finite generating sets

def build_F(sys: GliderSystem) -> CAPipeline:
    z, gl, gr = sys.z, sys.gl, sys.gr
    F1 = build(sys.ambient, z, [(gr + z * 3 + gl, gr + z * 2 + gl + z)], "F1")
    F2 = build(sys.ambient, z, [(gr + z * 2 + gl, z + gr + z + gl)], "F2")
    return compose([F1, F2], sys.ambient, "F")


def build_ryan_H(P: SoficPresentation | None, u: str, w1: str, w2: str, w3: str) -> MarkerAutomorphism:
    """Swap u w3 u w1 u w2 u with u w3 u w2 u w1 u."""
    if w1 == w2:
        raise GliderBuildError("w1 and w2 must differ")
    return build(P, u, [(w3 + u + w1 + u + w2, w3 + u + w2 + u + w1)], "H")
