"""Randomized verification suites shared by the CLI and the tests."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import product

from ..configuration import TailConfiguration
from ..glider import with_n
from ..sampling import random_finite
from ..symbols import show
from .diffusion import check_decomposition, detect_diffusion, non_fleet_moves, speed_check
from .fleets import check_bound_monotonicity, is_fleet, random_left_fleet, random_right_fleet
from .probes import blocking_word_probe, refute_direction, z_extension
from .ryan import (check_ryan_identities, commute_check, nocompact_H, nocompact_pattern,
                   planted_samples, random_fleet_pair)
from .sgap import (SGapSpec, build_sgap, gapinert_check, generator_language, generator_membership,
                   least_long_gap, perfect_squares, random_sgap_configuration, sgap_H)

SUITES = ("speed", "diffusion", "bounds", "ryan", "sgap", "sensitivity")


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checks: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "ok": self.ok, "checks": self.checks,
                "witnesses": [str(w) for w in self.witnesses[:10]]}


def _max_gap(x: TailConfiguration, z: str) -> int:
    return max(map(len, re.split(re.escape(z), x.center)), default=0)


def speed_suite(sys, seed: int = 0, samples: int = 100, steps: int = 20) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("speed", seed)
    ok = True
    for k in range(samples):
        x = random_left_fleet(sys, rng) if k % 2 == 0 else random_right_fleet(sys, rng)
        good, why = speed_check(sys, x, steps)
        if not good:
            ok = False
            rep.witnesses.append((x, why))
    zz = TailConfiguration(sys.z, "", sys.z, 0)
    rep.checks["fleets shift by +-s"] = ok
    rep.checks["z^Z fixed"] = speed_check(sys, zz, 3)[0]
    moved, n = True, 0
    while n < samples:
        x = random_finite(sys.ambient, sys.z, rng, 24, 1)
        if is_fleet(x, sys.z, sys.gl, sys.gr):
            continue
        n += 1
        if not non_fleet_moves(sys, x):
            moved = False
            rep.witnesses.append((x, "G(x) = sigma^s(x) outside the fleets"))
    rep.checks["non-fleets not shifted"] = moved
    return rep


def diffusion_suite(sys, seed: int = 0, samples: int = 200, max_len: int = 40, N: int = 5,
                    n_systems: bool = True) -> SuiteReport:
    """Every sample decomposes (G_X; and G_{X,n} on inputs free of B^n words)."""
    rng = random.Random(seed)
    rep = SuiteReport("diffusion", seed)
    systems = [("G", sys)]
    if n_systems and sys.sofic:
        systems.append(("G_n", with_n(sys, sys.min_n)))
    for tag, sy in systems:
        found, rechecked, worst, used = True, True, 0, 0
        for _ in range(samples):
            x = random_finite(sy.ambient, sy.z, rng, max_len, 1)
            if not sy.sofic and _max_gap(x, sy.z) >= sy.n_param:
                continue
            used += 1
            d = detect_diffusion(sy, x, N)
            if d is None:
                found = False
                rep.witnesses.append((tag, x, "ceiling reached"))
                continue
            worst = max(worst, d.t)
            y = x
            for _ in range(d.t):
                y = sy.G(y)
            if not check_decomposition(sy, y, d.N_left, d.N_right, d.M):
                rechecked = False
                rep.witnesses.append((tag, x, d))
        rep.checks[f"{tag}: decomposition found"] = found
        rep.checks[f"{tag}: predicate re-check"] = rechecked
        rep.checks[f"{tag}: samples used > 0"] = used > 0
    return rep


def bounds_suite(sys, seed: int = 0, samples: int = 100, max_len: int = 24) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("bounds", seed)
    ok, n = True, 0
    while n < samples:
        x = random_finite(sys.ambient, sys.z, rng, max_len, 1)
        if is_fleet(x, sys.z, sys.gl, sys.gr):
            continue
        n += 1
        horizon = 4 * len(x.center) + 50
        r = check_bound_monotonicity(sys, x, horizon)
        if not r.ok:
            ok = False
            rep.witnesses.append(x)
    rep.checks["monotone bounds with strict progress"] = ok
    return rep


def ryan_suite(sys, seed: int = 0, pairs: int = 50, samples: int = 100) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("ryan", seed)
    fp = [random_fleet_pair(sys, rng) for _ in range(pairs)]
    r = check_ryan_identities(sys, fp)
    rep.checks["G_m identities (m <= 3)"] = r.ok
    rep.witnesses += r.failures[:3]
    n = (sys.N or sys.n_param) if sys.sofic else sys.n_param + 2
    H = nocompact_H(sys, n)
    pats = [nocompact_pattern(sys, n), nocompact_pattern(sys, n, True)]
    smp = planted_samples(sys, rng, samples, pats)
    base = sys.min_n
    for k in (base, base + 1, base + 2):
        c = commute_check(with_n(sys, k).G, H, smp)
        rep.checks[f"H commutes with G_X,{k}"] = c.ok
        if not c.ok:
            rep.witnesses.append(c.witness)
    if sys.sofic:
        c = commute_check(sys.G, H, smp)
        rep.checks["H does not commute with G_X"] = not c.ok
    return rep


EVENTUAL = SGapSpec.eventually_periodic([2, 4], 6, 3, [0])


def sgap_suite(seed: int = 0, max_word: int = 14, samples: int = 100, pairs: int = 1000,
               horizon: int = 1000) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("sgap", seed)
    P = build_sgap(EVENTUAL)
    gen = generator_language(EVENTUAL, max_word)
    agree = True
    for L in range(max_word + 1):
        for t in product("01", repeat=L):
            w = "".join(t)
            a, b, c = P.language_contains(w), generator_membership(EVENTUAL, w), w in gen
            if not a == b == c:
                agree = False
                rep.witnesses.append(w)
    rep.checks["presentation = generator membership"] = agree
    S = perfect_squares(400)
    H = sgap_H(S, 1, 4, 9)
    r = H.radius
    swaps = H.swaps()[0]
    smp = [random_sgap_configuration(S, rng, prefer=(1, 4, 9), max_gap=49,
                                     planted=swaps[rng.randint(0, 1)][:-1]) for _ in range(samples)]
    g = gapinert_check(S, H, r, smp)
    rep.checks["gapinert for H"] = g.ok
    n = least_long_gap(S, r)
    w = "0" + "1" * n + "0"

    def gen_pairs():
        for _ in range(pairs):
            yield tuple(random_sgap_configuration(S, rng, prefer=(1, 4, 9), max_gap=49, planted=w[:-1])
                        for _ in range(2))

    res = blocking_word_probe(H, w, r + 1, (len(w) - r - 1) // 2, horizon, gen_pairs(), r=r)
    rep.checks[f"0 1^{n} 0 not refuted as blocking"] = not res.refuted
    return rep


def sensitivity_suite(sys, seed: int = 0, max_word: int = 8, max_p: int = 3, max_q: int = 3) -> SuiteReport:
    rep = SuiteReport("sensitivity", seed)
    words = [w for L in range(1, max_word + 1) for w in sys.ambient.words(L)]
    cands = sorted({e for e in (z_extension(sys, w) for w in words) if e is not None})
    rep.checks["every word extends to z w z"] = len(cands) > 0 and all(
        z_extension(sys, w) is not None for w in words)
    for p in range(-max_p, max_p + 1):
        for q in range(1, max_q + 1):
            missing = [w for w in cands if refute_direction(sys, p, q, w) is None]
            rep.checks[f"direction {p}/{q}: all refuted"] = not missing
            rep.witnesses += [(p, q, show(w)) for w in missing[:3]]
    return rep


def run_suite(name: str, sys=None, seed: int = 0, **kw) -> SuiteReport:
    if name == "sgap":
        return sgap_suite(seed, **kw)
    if sys is None:
        raise ValueError(f"suite {name!r} needs a glider system")
    if name in ("bounds", "ryan") and sys.P4 is None:
        raise ValueError(f"suite {name!r} needs a constructed system with P4 tables")
    fn = {"speed": speed_suite, "diffusion": diffusion_suite, "bounds": bounds_suite,
          "ryan": ryan_suite, "sensitivity": sensitivity_suite}.get(name)
    if fn is None:
        raise ValueError(f"unknown suite {name!r}")
    return fn(sys, seed, **kw)
