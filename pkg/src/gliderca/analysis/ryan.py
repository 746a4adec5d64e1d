"""Commutation suites: the G_m identities and swap automorphisms that
separate finite generating sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..configuration import TailConfiguration
from ..glider import build_F, build_ryan_H
from ..marker import power


@dataclass
class CommuteReport:
    ok: bool
    checked: int
    witness: TailConfiguration | None = None
    lhs: TailConfiguration | None = None
    rhs: TailConfiguration | None = None


def commute_check(F: Callable, H: Callable, samples: Iterable[TailConfiguration],
                  window: tuple[int, int] | None = None) -> CommuteReport:
    """Compare F(H(x)) with H(F(x)); exact when window is None."""
    n = 0
    for x in samples:
        n += 1
        a, b = F(H(x)), H(F(x))
        same = a == b if window is None else a.window(*window) == b.window(*window)
        if not same:
            return CommuteReport(False, n, x, a, b)
    return CommuteReport(True, n)


def shift_map(k: int = 1):
    return lambda x: x.shift(k)


# ----------------------------------------------------------------------
# G_m = G^-(m+1) o F o G^m

def G_m(sys, F, m: int):
    fwd, back = power(sys.G, m), power(sys.G, -(m + 1))
    return lambda x: back(F(fwd(x)))


def N_m(sys, m: int) -> int:
    return 2 * m * sys.q + 3


@dataclass
class FleetPair:
    """x gr . z^N gl y with the right fleet part R = x gr ending at -1."""

    R: str
    L: str

    def config(self, sys, N: int) -> TailConfiguration:
        z = sys.z
        return TailConfiguration(z, self.R + z * N + self.L, z, -len(self.R))


def random_fleet_pair(sys, rng, max_gliders: int = 3, max_gap: int = 3) -> FleetPair:
    z = sys.z
    R = "".join(z * rng.randint(1, 1 + max_gap) + sys.gr for _ in range(rng.randint(1, max_gliders)))
    L = "".join(sys.gl + z * rng.randint(1, 1 + max_gap) for _ in range(rng.randint(1, max_gliders)))
    return FleetPair(R, L)


def expected_far(sys, pair: FleetPair, N: int) -> TailConfiguration:
    """Both fleets moved apart by q copies of z (N > N_m)."""
    z, q = sys.z, sys.q
    c = pair.R + z * (N + 2 * q) + pair.L
    return TailConfiguration(z, c, z, -len(pair.R) - q * len(z))


def expected_meet(sys, pair: FleetPair, N: int) -> TailConfiguration:
    """The outermost gr and gl were pushed one z closer before moving back (N = N_m)."""
    z, q, gr, gl = sys.z, sys.q, sys.gr, sys.gl
    Rx, Ly = pair.R[: len(pair.R) - len(gr)], pair.L[len(gl):]
    c = Rx + z + gr + z * (q - 1) + z * N + z * (q - 1) + gl + z + Ly
    return TailConfiguration(z, c, z, -(len(Rx) + len(z) + len(gr) + (q - 1) * len(z)))


def expected_literal(sys, pair: FleetPair, N: int, meet: bool) -> TailConfiguration:
    """The identities read with a single z of displacement."""
    z, gr, gl = sys.z, sys.gr, sys.gl
    if not meet:
        return TailConfiguration(z, pair.R + z * (N + 2) + pair.L, z, -len(pair.R) - len(z))
    Rx, Ly = pair.R[: len(pair.R) - len(gr)], pair.L[len(gl):]
    return TailConfiguration(z, Rx + z + gr + z * N + gl + z + Ly, z, -(len(Rx) + len(z) + len(gr)))


@dataclass
class RyanReport:
    checked: int = 0
    failures: list = field(default_factory=list)
    literal_failures: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def check_ryan_identities(sys, pairs: Iterable[FleetPair], ms=(0, 1, 2, 3), extra=(1, 2),
                          F=None) -> RyanReport:
    """G_m on x gr . z^N gl y for N = N_m (meeting case) and N = N_m + e."""
    F = F if F is not None else build_F(sys)
    rep = RyanReport()
    pairs = list(pairs)
    for m in ms:
        g = G_m(sys, F, m)
        for pair in pairs:
            for N, meet in [(N_m(sys, m), True)] + [(N_m(sys, m) + e, False) for e in extra]:
                x = pair.config(sys, N)
                got = g(x)
                want = expected_meet(sys, pair, N) if meet else expected_far(sys, pair, N)
                rep.checked += 1
                if got != want:
                    rep.failures.append((m, N, pair, got, want))
                if got != expected_literal(sys, pair, N, meet):
                    rep.literal_failures += 1
    return rep


# ----------------------------------------------------------------------
# the swap that commutes with finitely many G_{X,n}

def nocompact_H(sys, n: int):
    """Swap z w3 z w1 z w2 z <-> z w3 z w2 z w1 z with w_i = one^(n+i) and marker z."""
    one = sys.one
    return build_ryan_H(sys.ambient, sys.z, one * (n + 1), one * (n + 2), one * (n + 3))


def nocompact_pattern(sys, n: int, swapped: bool = False) -> str:
    z, one = sys.z, sys.one
    a, b = one * (n + 1), one * (n + 2)
    if swapped:
        a, b = b, a
    return z + one * (n + 3) + z + a + z + b + z


def planted_samples(sys, rng, count: int, patterns: list[str], max_len: int = 16):
    """z-finite points with random material around one planted pattern."""
    from ..sampling import random_finite
    out = []
    for _ in range(count):
        a = random_finite(sys.ambient, sys.z, rng, max_len).center
        b = random_finite(sys.ambient, sys.z, rng, max_len).center
        pat = rng.choice(patterns)
        c = a + sys.z + pat + sys.z + b
        out.append(TailConfiguration(sys.z, c, sys.z, -len(a) - rng.randint(0, len(pat))))
    return out
