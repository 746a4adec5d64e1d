"""Glider fleets and the left/right bounds of a z-finite configuration.

A left fleet is ^inf z (gl z z*)* z^inf and a right fleet is
^inf z (z* z gr)* z^inf.  Both are recognised by a linear scan over an
aligned window: token boundaries reachable from the left tail (left
fleets) or co-reachable from the right tail (right fleets).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..configuration import TailConfiguration


@dataclass(frozen=True)
class AlignedWindow:
    """x[lo, hi) where lo sits on a z-boundary of the left tail and hi on one of the right tail."""

    lo: int
    hi: int
    text: str
    x: TailConfiguration

    def at(self, i: int) -> str:
        return self.text[i - self.lo]


def fleet_pad(z: str, gl: str) -> int:
    """Tail periods needed in front of the center so a leading gl is visible."""
    return len(gl) // len(z) + 2


def aligned_window(x: TailConfiguration, z: str, pad: int = 2, lo_min: int | None = None,
                   hi_min: int | None = None) -> AlignedWindow:
    """Re-express x with both tails equal to z and cut an aligned window.

    `lo_min`/`hi_min` force the window to reach at least that far.
    """
    try:
        y = x.with_tails(z, z)
    except ValueError as e:
        raise ValueError("configuration is not z-finite") from e
    p = len(z)
    lo = y.start - pad * p
    if lo_min is not None and lo > lo_min:
        lo -= p * (-(-(lo - lo_min) // p))
    hi = y.end + pad * p
    if hi_min is not None and hi < hi_min:
        hi += p * (-(-(hi_min - hi) // p))
    return AlignedWindow(lo, hi, y.window(lo, hi), y)


def left_accepting(W: AlignedWindow, z: str, gl: str) -> list[bool]:
    """acc[i - lo] iff x(-inf, i) is in ^inf z L_left, for lo <= i <= hi."""
    n = len(W.text)
    acc = [False] * (n + 1)
    acc[0] = True
    gz = gl + z
    for i in range(n + 1):
        if not acc[i]:
            continue
        if W.text.startswith(z, i):
            acc[i + len(z)] = True
        if W.text.startswith(gz, i):
            acc[i + len(gz)] = True
    return acc


def right_accepting(W: AlignedWindow, z: str, gr: str) -> list[bool]:
    """acc[j - lo] iff x[j, inf) is in L_right z^inf, for lo <= j <= hi."""
    n = len(W.text)
    acc = [False] * (n + 1)
    acc[n] = True
    zg = z + gr
    for j in range(n, -1, -1):
        if j == n:
            continue
        if W.text.startswith(z, j) and acc[j + len(z)]:
            acc[j] = True
        elif W.text.startswith(zg, j) and acc[j + len(zg)]:
            acc[j] = True
    return acc


def _is_zero_orbit(W: AlignedWindow, z: str) -> bool:
    return W.text == z * (len(W.text) // len(z))


def is_left_fleet(x: TailConfiguration, z: str, gl: str) -> bool:
    W = aligned_window(x, z, fleet_pad(z, gl))
    return left_accepting(W, z, gl)[-1]


def is_right_fleet(x: TailConfiguration, z: str, gr: str) -> bool:
    W = aligned_window(x, z)
    return right_accepting(W, z, gr)[0]


def is_fleet(x: TailConfiguration, z: str, gl: str, gr: str) -> str | None:
    """'left', 'right', 'both' (only the z orbit) or None."""
    lf, rf = is_left_fleet(x, z, gl), is_right_fleet(x, z, gr)
    if lf and rf:
        return "both"
    return "left" if lf else "right" if rf else None


def system_fleet(sys, x: TailConfiguration) -> str | None:
    return is_fleet(x, sys.z, sys.gl, sys.gr)


# ----------------------------------------------------------------------
# bounds

class BoundUndefined(ValueError):
    pass


@dataclass
class BoundReport:
    side: str
    k: int
    i: int | None = None
    type_word: str | None = None
    type_kind: str | None = None

    def to_dict(self) -> dict:
        from ..symbols import show
        return {"side": self.side, "k": self.k, "i": self.i,
                "type": show(self.type_word) if self.type_word is not None else None,
                "kind": self.type_kind}


def _gap_at(text: str, i: int, z: str) -> int:
    """Length of the z-free stretch starting at i (up to the next z occurrence)."""
    j = text.find(z, i)
    return (len(text) if j < 0 else j) - i


def type_candidates(sys) -> list[tuple[str, str]]:
    """Gap words g (the type word is g z) in priority order, with a kind tag."""
    out = [(sys.one, "one"), (sys.one * (sys.p + 1), "gr")]
    for row in sys.tables.get("U", []):
        out += [(w, f"U{row['j']}") for w in row["U_prime"]]
    return out


def left_bound(sys, x: TailConfiguration) -> BoundReport:
    z, gl, gr = sys.z, sys.gl, sys.gr
    W = aligned_window(x, z, fleet_pad(z, gl))
    if _is_zero_orbit(W, z):
        raise BoundUndefined("configuration is in the orbit of z^Z")
    acc = left_accepting(W, z, gl)
    if acc[-1]:
        raise BoundUndefined("configuration is a left fleet")
    i_rel = max(k for k, a in enumerate(acc) if a)
    i = W.lo + i_rel
    g = W.text[i_rel: i_rel + _gap_at(W.text, i_rel, z)]
    for cand, kind in type_candidates(sys):
        if g == cand:
            return BoundReport("left", i + len(g) + len(z) - 1, i, g + z, kind)
    if sys.sofic and sys.N is not None and len(g) >= sys.N:
        return BoundReport("left", i + len(sys.one) + len(z) - 1, i, g[: sys.N], "W")
    raise BoundUndefined(f"no type word at position {i}")


def right_bound(sys, x: TailConfiguration) -> BoundReport:
    z, gl, gr = sys.z, sys.gl, sys.gr
    W = aligned_window(x, z)
    if _is_zero_orbit(W, z):
        raise BoundUndefined("configuration is in the orbit of z^Z")
    acc = right_accepting(W, z, gr)
    if acc[0]:
        raise BoundUndefined("configuration is a right fleet")
    j_rel = min(k for k, a in enumerate(acc) if a)
    return BoundReport("right", W.lo + j_rel - 1)


@dataclass
class MonotonicityReport:
    left: list[int] = field(default_factory=list)
    right: list[int] = field(default_factory=list)
    left_ok: bool = True
    right_ok: bool = True
    left_increase_at: int | None = None
    right_decrease_at: int | None = None

    @property
    def ok(self) -> bool:
        return self.left_ok and self.right_ok


def check_bound_monotonicity(sys, x: TailConfiguration, T: int) -> MonotonicityReport:
    """Track both bounds for t = 0..T: the left bound must never drop, the
    right bound never rise, and each must move strictly at least once."""
    rep = MonotonicityReport()
    y = x
    for t in range(T + 1):
        rep.left.append(left_bound(sys, y).k)
        rep.right.append(right_bound(sys, y).k)
        if t:
            if rep.left[-1] < rep.left[-2]:
                rep.left_ok = False
            elif rep.left[-1] > rep.left[-2] and rep.left_increase_at is None:
                rep.left_increase_at = t
            if rep.right[-1] > rep.right[-2]:
                rep.right_ok = False
            elif rep.right[-1] < rep.right[-2] and rep.right_decrease_at is None:
                rep.right_decrease_at = t
        if t < T:
            y = sys.G(y)
    if rep.left_increase_at is None:
        rep.left_ok = False
    if rep.right_decrease_at is None:
        rep.right_ok = False
    return rep


# ----------------------------------------------------------------------
# sampling fleets

def random_left_fleet(sys, rng, gliders: int | None = None, max_gap: int = 4) -> TailConfiguration:
    z = sys.z
    n = gliders if gliders is not None else rng.randint(1, 4)
    c = "".join(sys.gl + z * (1 + rng.randint(0, max_gap)) for _ in range(n))
    return TailConfiguration(z, c, z, -rng.randint(0, len(c)))


def random_right_fleet(sys, rng, gliders: int | None = None, max_gap: int = 4) -> TailConfiguration:
    z = sys.z
    n = gliders if gliders is not None else rng.randint(1, 4)
    c = "".join(z * (1 + rng.randint(0, max_gap)) + sys.gr for _ in range(n))
    return TailConfiguration(z, c, z, -rng.randint(0, len(c)))
