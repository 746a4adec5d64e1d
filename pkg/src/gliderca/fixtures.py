"""Hardcoded shifts and automata used as fixtures."""

from __future__ import annotations

from .marker import CAPipeline, build, compose
from .glider import GliderSystem
from .presentation import SoficPresentation
from .symbols import symbol


def full_shift() -> SoficPresentation:
    return SoficPresentation.from_dict(
        {"alphabet": ["0", "1"], "states": ["a"], "edges": [["a", "0", "a"], ["a", "1", "a"]]})


def even_shift() -> SoficPresentation:
    return SoficPresentation.from_dict(
        {"alphabet": ["0", "1"], "states": ["l", "r"],
         "edges": [["l", "0", "l"], ["l", "1", "r"], ["r", "1", "l"]]})


def golden_mean_shift() -> SoficPresentation:
    return SoficPresentation.from_dict(
        {"alphabet": ["0", "1"], "states": ["a", "b"],
         "edges": [["a", "0", "a"], ["a", "1", "b"], ["b", "0", "a"]]})


def coded_0_111() -> SoficPresentation:
    """The coded shift generated by {0, 111}."""
    return SoficPresentation.from_dict(
        {"alphabet": ["0", "1"], "states": ["a", "b", "c"],
         "edges": [["a", "0", "a"], ["a", "1", "b"], ["b", "1", "c"], ["c", "1", "a"]]})


def arrow_shift() -> SoficPresentation:
    """The six-symbol mixing sofic shift whose language is the set of subwords of
    (L0 0* L1 0*)*; the arrows are named '<' and '>'.

    A word of L0 carries two opposite arrows, a word of L1 two equal ones.
    """
    edges = []
    states = []
    for d in (0, 1):
        z = f"Z{d}"
        states.append(z)
        edges += [[z, "0", z], [z, "1", f"A{d}"]]
        for seen in ("", "<", ">", "<<", "<>", "><", ">>"):
            if len(seen) == 2 and (seen[0] == seen[1]) != (d == 1):
                continue
            s = f"A{d}{seen}"
            states += [s, s + "~"]
            edges += [[s, "a", s + "~"], [s + "~", "b", s]]
            if len(seen) < 2:
                for c in "<>":
                    nxt = seen + c
                    if len(nxt) == 2 and (nxt[0] == nxt[1]) != (d == 1):
                        continue
                    edges.append([s, c, f"A{d}{nxt}"])
            else:
                edges.append([s, "1", f"Z{1 - d}"])
    return SoficPresentation.from_dict(
        {"alphabet": ["0", "1", "a", "b", "<", ">"], "states": states, "edges": edges})


# ----------------------------------------------------------------------

def intro_pipeline() -> CAPipeline:
    """G = P3 o P2 o P1 on the binary full shift (the small hand-made glider CA)."""
    X = full_shift()
    P1 = build(X, "0", [("01", "11")], "P1")
    P2 = build(X, "0", [("10", "11")], "P2")
    P3 = build(X, "", [("00101", "00111")], "P3")
    return compose([P1, P2, P3], X, "G")


def fixture_intro() -> GliderSystem:
    """The hand-made full-shift CA wrapped with its glider data (z=0, one=1)."""
    G = intro_pipeline()
    P1, P2, P3 = G.stages
    return GliderSystem(G.ambient, "0", "1", 1, 1, 1, ("1",), P1, P2, None, G, P3=P3)


# full words as printed, markers included
_EVEN_P1 = ("000110", "011110")
_EVEN_P2 = ("011110", "011000")
_EVEN_P3 = [
    ["000110110111111011111"],
    ["000110111111110111111", "000111111111111111111"],
]
_EVEN_P4 = ["0" * 13 + "1100110"] + ["0" * c + "1" * k + "0" for c, k in
                                     [(3, 16), (5, 14), (7, 12), (9, 10), (11, 8), (13, 6)]]


def fixture_even() -> GliderSystem:
    """The even-shift glider CA with every table written out by hand."""
    X = even_shift()
    inner = lambda ws: [w[1:-1] for w in ws]  # noqa: E731
    P1 = build(X, "0", [inner(_EVEN_P1)], "P1")
    P2 = build(X, "0", [inner(_EVEN_P2)], "P2")
    P3 = build(X, "", _EVEN_P3, "P3")
    P4 = build(X, "0", [inner(_EVEN_P4)], "P4")
    G = compose([P1, P2, P3, P4], X, "G_X")
    tables = {
        "classes": [
            {"w_prime": "11111", "w": "110110111111011111", "W_prime": []},
            {"w_prime": "111111", "w": "110111111110111111", "W_prime": ["1" * 18]},
        ],
        "U": [{"j": 1, "u_prime": "110011", "U_prime": ["1" * k for k in (16, 14, 12, 10, 8, 6)],
               "padded": ["0" * 13 + "110011"] + ["0" * (19 - k) + "1" * k for k in (16, 14, 12, 10, 8, 6)]}],
    }
    return GliderSystem(X, symbol("0"), "11", 1, 2, 1, ("1",), P1, P2, P4, G, P3=P3, n_param=18,
                        N=18, N1=6, tables=tables)
