"""Space-time diagrams as netpbm images or text."""

from __future__ import annotations

import colorsys

from ..symbols import name_of
from .simulate import Trajectory

STYLES = ("pbm", "pbm-plain", "ppm", "ppm-plain", "ascii")


def _rows(traj: Trajectory, lo: int, hi: int) -> list[str]:
    if hi <= lo:
        raise ValueError("empty window")
    return traj.window(lo, hi)


def _ink(c: str) -> int:
    """1 (black) unless the symbol is a zero."""
    return 0 if name_of(c).rstrip("'") == "0" else 1


def palette(symbols) -> dict[str, tuple[int, int, int]]:
    """White for zero-like symbols, evenly spaced hues for the rest."""
    syms = sorted(set(symbols))
    others = [c for c in syms if _ink(c)]
    pal = {c: (255, 255, 255) for c in syms if not _ink(c)}
    for k, c in enumerate(others):
        if len(others) == 1:
            pal[c] = (0, 0, 0)
            continue
        r, g, b = colorsys.hsv_to_rgb(k / len(others), 0.8, 0.7)
        pal[c] = (int(r * 255), int(g * 255), int(b * 255))
    return pal


def render_spacetime(traj: Trajectory, lo: int, hi: int, style: str = "pbm", scale: int = 1) -> bytes:
    rows = _rows(traj, lo, hi)
    if scale > 1:
        rows = [("".join(c * scale for c in r)) for r in rows for _ in range(scale)]
    w, h = len(rows[0]), len(rows)
    if style == "ascii":
        return ("\n".join("".join("#" if _ink(c) else "." for c in r) for r in rows) + "\n").encode()
    if style == "pbm-plain":
        lines = [f"P1\n{w} {h}"] + [" ".join(str(_ink(c)) for c in r) for r in rows]
        return ("\n".join(lines) + "\n").encode()
    if style == "pbm":
        out = bytearray(f"P4\n{w} {h}\n".encode())
        for r in rows:
            bits = [_ink(c) for c in r] + [0] * (-w % 8)
            out += bytes(int("".join(map(str, bits[i:i + 8])), 2) for i in range(0, len(bits), 8))
        return bytes(out)
    pal = palette(c for r in rows for c in r)
    if style == "ppm-plain":
        lines = [f"P3\n{w} {h}\n255"] + [" ".join(" ".join(map(str, pal[c])) for c in r) for r in rows]
        return ("\n".join(lines) + "\n").encode()
    if style == "ppm":
        out = bytearray(f"P6\n{w} {h}\n255\n".encode())
        for r in rows:
            for c in r:
                out += bytes(pal[c])
        return bytes(out)
    raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")


def write_spacetime(path: str, traj: Trajectory, lo: int, hi: int, style: str | None = None,
                    scale: int = 1) -> None:
    if style is None:
        ext = path.rsplit(".", 1)[-1].lower()
        style = {"pbm": "pbm", "ppm": "ppm", "txt": "ascii"}.get(ext, "ascii")
    with open(path, "wb") as fh:
        fh.write(render_spacetime(traj, lo, hi, style, scale))
