"""Iterating an automaton on a configuration."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..configuration import TailConfiguration


@dataclass
class Trajectory:
    rows: list[TailConfiguration]
    automaton: object = field(default=None, repr=False)

    @property
    def t_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, t: int) -> TailConfiguration:
        return self.rows[t]

    def __len__(self) -> int:
        return len(self.rows)

    def window(self, lo: int, hi: int) -> list[str]:
        return [x.window(lo, hi) for x in self.rows]


def automaton_of(sys_or_ca):
    """Accept a GliderSystem or any callable automaton."""
    return getattr(sys_or_ca, "G", sys_or_ca)


def simulate(sys_or_ca, x: TailConfiguration, t: int, ambient=None) -> Trajectory:
    G = automaton_of(sys_or_ca)
    if ambient is None:
        ambient = getattr(sys_or_ca, "ambient", None)
    if ambient is not None and not ambient.contains_configuration(x):
        raise ValueError("initial configuration is not in the shift")
    rows = [x.canonical()]
    for _ in range(t):
        rows.append(G(rows[-1]))
    return Trajectory(rows, G)
