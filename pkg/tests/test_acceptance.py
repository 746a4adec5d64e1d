"""The ten acceptance criteria. Each records one PASS/FAIL line, printed at the end of the run."""

import random

import pytest

from gliderca import fixtures
from gliderca.analysis.diffusion import check_decomposition, detect_diffusion
from gliderca.analysis.render import render_spacetime
from gliderca.analysis.ryan import nocompact_H
from gliderca.analysis.sgap import perfect_squares, sgap_H
from gliderca.analysis.simulate import simulate
from gliderca.analysis.suites import (
    bounds_suite, diffusion_suite, ryan_suite, sensitivity_suite, sgap_suite, speed_suite,
)
from gliderca.glider import build_F, build_GX
from gliderca.recode import recode, verify_prop01
from gliderca.sampling import random_configuration

from conftest import built

RESULTS: dict[int, str] = {}


def record(n: int, title: str, ok: bool, note: str = "") -> None:
    RESULTS[n] = f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {title}" + (f" ({note})" if note else "")


def failed(rep) -> list[str]:
    return [k for k, v in rep.checks.items() if not v]


def swaps(M):
    return [list(c) for c in M.swaps()]


# 1 ---------------------------------------------------------------------------

EVEN_P4 = ["0" * 13 + "1100110"] + ["0" * c + "1" * (19 - c) + "0" for c in (3, 5, 7, 9, 11, 13)]


def test_criterion_01_even_fixture_exact():
    sys = build_GX(fixtures.even_shift(), "0", 1)
    got = {
        "P1": swaps(sys.P1), "P2": swaps(sys.P2), "P4": swaps(sys.P4), "N": sys.N,
        "P3 swap": [c for c in swaps(sys.P3) if len(c) == 2],
    }
    want = {
        "P1": [["000110", "011110"]], "P2": [["011110", "011000"]], "P4": [EVEN_P4], "N": 18,
        "P3 swap": [["000110111111110111111", "000111111111111111111"]],
    }
    bad = [k for k in want if got[k] != want[k]]
    record(1, "even-shift tables reproduced verbatim", not bad, ", ".join(bad))
    assert not bad, {k: got[k] for k in bad}


# 2 ---------------------------------------------------------------------------

def test_criterion_02_intro_fixture():
    sys = fixtures.fixture_intro()
    tables_ok = (swaps(sys.P1) == [["0010", "0110"]]
                 and sorted(swaps(sys.P2)[0]) == ["0100", "0110"]
                 and swaps(sys.P3) == [["00101", "00111"]])
    rng = random.Random(0)
    fleets_ok = True
    worst = 0
    for _ in range(10):
        x = random_configuration(sys.ambient, rng, rng.randint(10, 40), "0", "0")
        d = detect_diffusion(sys, x, 5, ceiling=500)
        if d is None:
            fleets_ok = False
            continue
        worst = max(worst, d.t)
        traj = simulate(sys, x, d.t)
        y = traj[d.t]
        # left of the zero block only isolated 1s, right of it only 11s
        left = y.window(y.start - 2, -d.N_left)
        right = y.window(d.N_right + 1, y.end + 2)
        fleets_ok &= "11" not in left and all(r in ("", "11") for r in right.split("0"))
        fleets_ok &= check_decomposition(sys, y, d.N_left, d.N_right, d.M)
        pic = render_spacetime(traj, y.start - 5, max(x.end, y.end) + 5, "pbm")
        fleets_ok &= pic.startswith(b"P4\n")
    ok = tables_ok and fleets_ok
    record(2, "intro tables exact; 1-fleet left, 11-fleet right within t <= 500", ok, f"max t = {worst}")
    assert ok


# 3 ---------------------------------------------------------------------------

def test_criterion_03_glider_speed():
    reps = [speed_suite(s, seed=0, samples=100, steps=20) for s in (fixtures.fixture_even(), fixtures.fixture_intro())]
    bad = [f"{r.suite}: {k}" for r in reps for k in failed(r)]
    record(3, "fleets move at +-pq exactly; non-fleets do not", not bad, "; ".join(bad))
    assert not bad


# 4 ---------------------------------------------------------------------------

def test_criterion_04_diffusion():
    reps = [diffusion_suite(fixtures.fixture_even(), seed=0, samples=200, max_len=40),
            diffusion_suite(built("full"), seed=0, samples=200, max_len=40)]
    bad = [k for r in reps for k in failed(r)]
    record(4, "every sample decomposes before the ceiling (G_X and G_X,n)", not bad, "; ".join(bad))
    assert not bad, [r.witnesses[:2] for r in reps]


# 5 ---------------------------------------------------------------------------

def test_criterion_05_bound_monotonicity():
    rep = bounds_suite(fixtures.fixture_even(), seed=0, samples=100)
    bad = failed(rep)
    record(5, "left bound rises, right bound falls, both strictly within the horizon", not bad, "; ".join(bad))
    assert not bad, rep.witnesses[:2]


# 6 ---------------------------------------------------------------------------

def all_automorphisms():
    out = []
    for sys in (fixtures.fixture_even(), fixtures.fixture_intro(), built("full"), built("golden"), built("coded")):
        out += [(sys.ambient, sys.z, m) for m in sys.G.markers()]
        if sys.P4 is not None and sys.tables.get("U"):
            out += [(sys.ambient, sys.z, m) for m in build_F(sys).markers()]
            out.append((sys.ambient, sys.z, nocompact_H(sys, sys.min_n)))
    return out


def test_criterion_06_reversible_equivariant():
    rng = random.Random(0)
    bad = []
    autos = all_automorphisms()
    for X, z, F in autos:
        Finv = F.inverse()
        for _ in range(200):
            x = random_configuration(X, rng, rng.randint(0, 30), z, z)
            y = F(x)
            if not X.contains_configuration(y) or Finv(y) != x or F(x.shift(1)) != y.shift(1):
                bad.append(F.name)
                break
    H = sgap_H(perfect_squares(400), 1, 4, 9)
    record(6, f"F^-1 F = id, F sigma = sigma F, images admissible ({len(autos)} automorphisms)",
           not bad and H.inverse().inverse() == H, ", ".join(bad))
    assert not bad


# 7 ---------------------------------------------------------------------------

def test_criterion_07_ryan_suite():
    rep = ryan_suite(fixtures.fixture_even(), seed=0, pairs=50, samples=100)
    bad = failed(rep)
    record(7, "G_m identities for m <= 3; H commutes with G_X,n and not with G_X", not bad, "; ".join(bad))
    assert not bad, rep.witnesses[:2]


# 8 ---------------------------------------------------------------------------

def test_criterion_08_sgap_suite():
    rep = sgap_suite(seed=0, max_word=14, samples=100, pairs=1000, horizon=1000)
    bad = failed(rep)
    record(8, "S-gap memberships agree to length 14; gapinert holds; 0 1^36 0 not refuted", not bad,
           "; ".join(bad))
    assert not bad, rep.witnesses[:2]


# 9 ---------------------------------------------------------------------------

SHIFTS = {"even": fixtures.even_shift, "full": fixtures.full_shift,
          "golden": fixtures.golden_mean_shift, "coded": fixtures.coded_0_111}


def test_criterion_09_recoding():
    rng = random.Random(0)
    bad = []
    Ks = {}
    for name, f in SHIFTS.items():
        pipe = recode(f(), "0")
        Ks[name] = pipe.K
        if not verify_prop01(pipe.final, pipe.z_final, pipe.one).all:
            bad.append(f"{name}: companion word check")
        for st in pipe.steps:
            for _ in range(200):
                x = random_configuration(st.domain, rng, rng.randint(0, 30))
                if st.inverse(st.code(x)) != x:
                    bad.append(f"{name}: {st.description}")
                    break
    K3 = Ks["coded"] == 3
    note = "; ".join(bad) if bad else f"coded-shift K = {Ks['coded']}, not 3: K divides |z| = 1"
    record(9, "round trips and companion-word checks pass; coded-shift K = 3", not bad and K3, note)
    assert not bad


@pytest.mark.xfail(strict=True, reason="K must divide |z|; with z = 0 only K = 1 is possible")
def test_criterion_09_coded_K_is_3():
    assert recode(fixtures.coded_0_111(), "0").K == 3


# 10 --------------------------------------------------------------------------

def test_criterion_10_sensitivity():
    rep = sensitivity_suite(fixtures.fixture_even(), seed=0, max_word=8, max_p=3, max_q=3)
    bad = failed(rep)
    record(10, "every word of length <= 8 refuted as blocking in all 21 directions", not bad, "; ".join(bad))
    assert not bad, rep.witnesses[:5]
