"""Detecting when a configuration has split into a left and a right fleet."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..configuration import TailConfiguration
from .fleets import aligned_window, fleet_pad, left_accepting, right_accepting


@dataclass
class Decomposition:
    t: int
    N_left: int
    N_right: int
    M: int

    def to_dict(self) -> dict:
        return {"t": self.t, "N_left": self.N_left, "N_right": self.N_right, "M": self.M}


def find_decomposition(sys, x: TailConfiguration, N: int) -> tuple[int, int, int] | None:
    """(N_left, N_right, M) with x[-N_left, N_right] = z^M, a left fleet to the
    left of it and a right fleet to the right, N_left, N_right >= N.

    Among all witnesses the one with the largest N_left, then N_right, is returned.
    """
    z, p = sys.z, len(sys.z)
    W = aligned_window(x, z, fleet_pad(z, sys.gl), lo_min=-N - 2 * p, hi_min=N + 2 * p)
    t = W.text
    # cheap necessary condition: x[-N, N] is made of z's (in some phase)
    mid = t[-N - W.lo: N + 1 - W.lo]
    if mid.count(z[0]) * p < len(mid) - 2 * p:
        return None
    la = left_accepting(W, z, sys.gl)
    ra = right_accepting(W, z, sys.gr)
    n = len(t)
    # zrun[i]: largest e >= i with t[i:e] in z*, walking in steps of p
    zrun = list(range(n + 1))
    for i in range(n - p, -1, -1):
        if t.startswith(z, i):
            zrun[i] = zrun[i + p]
    best = None
    for a in range(0, n + 1):
        pos_a = W.lo + a
        if pos_a > -N:
            break
        if not la[a]:
            continue
        for e in range(zrun[a], a, -p):
            pos_e = W.lo + e
            if pos_e < N + 1:
                break
            if ra[e]:
                cand = (-pos_a, pos_e - 1, (e - a) // p)
                if best is None or cand[:2] > best[:2]:
                    best = cand
                break
    return best


def check_decomposition(sys, x: TailConfiguration, N_left: int, N_right: int, M: int) -> bool:
    """Independent re-check of a decomposition with regular expressions."""
    z, p = sys.z, len(sys.z)
    if N_left + N_right + 1 != M * p:
        return False
    if x.window(-N_left, N_right + 1) != z * M:
        return False
    y = x.with_tails(z, z)
    lo = min(y.start - len(sys.gl), -N_left) - 3 * p
    lo -= (lo - (-N_left)) % p
    hi = max(y.end, N_right + 1) + 3 * p
    hi += (N_right + 1 - hi) % p
    Z, GL, GR = map(re.escape, (z, sys.gl, sys.gr))
    left_ok = re.fullmatch(f"(?:{Z})*(?:{GL}{Z}(?:{Z})*)*", y.window(lo, -N_left)) is not None
    right_ok = re.fullmatch(f"(?:(?:{Z})*{Z}{GR})*(?:{Z})*", y.window(N_right + 1, hi)) is not None
    return left_ok and right_ok


def default_ceiling(x: TailConfiguration) -> int:
    L = len(x.center)
    return 10 * L * L + 1000


def detect_diffusion(sys, x: TailConfiguration, N: int, ceiling: int | None = None) -> Decomposition | None:
    """Least t at which G^t(x) decomposes; None if the ceiling is reached."""
    ceiling = default_ceiling(x) if ceiling is None else ceiling
    y = x
    for t in range(ceiling + 1):
        d = find_decomposition(sys, y, N)
        if d is not None:
            return Decomposition(t, *d)
        y = sys.G(y)
    return None


def speed_check(sys, x: TailConfiguration, t: int = 1) -> tuple[bool, str | None]:
    """On a fleet, G^k acts as the shift by k*s (left fleets) or -k*s (right fleets), k <= t."""
    from .fleets import is_fleet

    kind = is_fleet(x, sys.z, sys.gl, sys.gr)
    if kind is None:
        return False, "not a fleet"
    y = x
    for k in range(1, t + 1):
        y = sys.G(y)
        if kind in ("left", "both") and y != x.shift(k * sys.s):
            return False, f"left fleet not shifted by {k}s at step {k}"
        if kind in ("right", "both") and y != x.shift(-k * sys.s):
            return False, f"right fleet not shifted by -{k}s at step {k}"
    return True, None


def non_fleet_moves(sys, x: TailConfiguration) -> bool:
    """For z-finite x outside the left fleets, G(x) differs from sigma^s(x)."""
    return sys.G(x) != x.shift(sys.s)
