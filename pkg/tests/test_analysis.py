import random
import re

import pytest
from hypothesis import given, strategies as st

from gliderca import fixtures
from gliderca.analysis.diffusion import check_decomposition, detect_diffusion, find_decomposition, speed_check
from gliderca.analysis.fleets import (
    BoundUndefined, check_bound_monotonicity, is_fleet, is_left_fleet, is_right_fleet, left_bound,
    random_left_fleet, random_right_fleet, right_bound,
)
from gliderca.analysis.render import render_spacetime, write_spacetime
from gliderca.analysis.simulate import simulate
from gliderca.configuration import TailConfiguration
from gliderca.glider import with_n
from gliderca.sampling import random_configuration

from conftest import built

EVEN = fixtures.fixture_even()


def T(s):
    return TailConfiguration.parse(s)


def oracle_fleet(sys, x):
    """Regex reading of ^inf z (gl z z*)* z^inf and ^inf z (z* z gr)* z^inf (z a single symbol)."""
    z, gl, gr = sys.z, sys.gl, sys.gr
    pad = 3 * len(gl)
    w = x.window(x.start - pad, x.end + pad)
    left = re.fullmatch(f"(?:{z}|{gl}{z})*", w) is not None
    right = re.fullmatch(f"(?:{z}|{z}{gr})*", w) is not None
    return left, right


samples_even = st.builds(
    lambda seed, n: random_configuration(EVEN.ambient, random.Random(seed), n, "0", "0"),
    st.integers(0, 10**6), st.integers(0, 24))


@st.composite
def fleetish(draw):
    rng = random.Random(draw(st.integers(0, 10**6)))
    x = random_left_fleet(EVEN, rng) if draw(st.booleans()) else random_right_fleet(EVEN, rng)
    if draw(st.booleans()):
        c = x.center
        i = draw(st.integers(0, len(c) - 1))
        x = TailConfiguration("0", c[:i] + ("1" if c[i] == "0" else "0") + c[i + 1:], "0", x.start)
    return x


@given(st.one_of(samples_even, fleetish()))
def test_fleet_recognition_matches_regex(x):
    left, right = oracle_fleet(EVEN, x)
    assert is_left_fleet(x, EVEN.z, EVEN.gl) == left
    assert is_right_fleet(x, EVEN.z, EVEN.gr) == right


def test_fleet_examples():
    assert is_fleet(T("0 . 0011 0"), "0", "0011", "1111") == "left"
    assert is_fleet(T("0 . 1111 0"), "0", "0011", "1111") == "right"
    assert is_fleet(T("0 . 0"), "0", "0011", "1111") == "both"
    assert is_fleet(T("0 . 110110 0"), "0", "0011", "1111") is None


def test_bound_examples():
    x = T("0 . 110110 0")
    lb = left_bound(EVEN, x)
    assert (lb.k, lb.type_word) == (5, "110")
    assert right_bound(EVEN, x).k == 4
    assert right_bound(EVEN, T("0 . 11 0")).k == 1


def test_bounds_undefined_on_fleets_and_zero():
    with pytest.raises(BoundUndefined):
        left_bound(EVEN, T("0 . 11 0"))
    with pytest.raises(BoundUndefined):
        right_bound(EVEN, T("0 . 1111 0"))
    with pytest.raises(BoundUndefined):
        left_bound(EVEN, T("0 . 0"))


def test_bound_monotonicity_sample():
    x = T("0 . 11011011110110 0")
    rep = check_bound_monotonicity(EVEN, x, 60)
    assert rep.ok, rep


@given(st.integers(0, 10**6), st.integers(1, 20))
def test_fleets_move_at_glider_speed(seed, t):
    rng = random.Random(seed)
    x = random_left_fleet(EVEN, rng)
    y = random_right_fleet(EVEN, rng)
    assert speed_check(EVEN, x, t)[0]
    assert speed_check(EVEN, y, t)[0]


def test_non_fleet_moves_differently():
    x = T("0 . 110110 0")
    assert EVEN.G(x) != x.shift(EVEN.s)


def separated(gap_left=5, gap_right=5, right="1111"):
    # gl ends at -gap_left-1, the right part starts at gap_right
    c = "0011" + "0" * (gap_left + gap_right) + right
    return TailConfiguration("0", c, "0", -gap_left - 4)


def test_decomposition_check_is_strict():
    x = separated()
    # the left part keeps gl z, the right part keeps z gr
    assert check_decomposition(EVEN, x, 4, 3, 8)
    assert not check_decomposition(EVEN, x, 5, 4, 10)
    assert not check_decomposition(EVEN, x, 4, 3, 9)
    assert not check_decomposition(EVEN, separated(right="1101"), 4, 3, 8)


@pytest.mark.parametrize("name", ["even", "full"])
def test_diffusion_small_sample(name):
    sys = EVEN if name == "even" else built("full")
    rng = random.Random(11)
    for _ in range(20):
        x = random_configuration(sys.ambient, rng, rng.randint(0, 20), sys.z, sys.z)
        d = detect_diffusion(sys, x, 5)
        assert d is not None
        y = x
        for _ in range(d.t):
            y = sys.G(y)
        assert check_decomposition(sys, y, d.N_left, d.N_right, d.M)


def test_diffusion_under_GXn():
    sys = with_n(EVEN, EVEN.min_n)
    rng = random.Random(12)
    for _ in range(20):
        x = random_configuration(sys.ambient, rng, 16, "0", "0")
        if "1" * sys.n_param in x.center:
            continue
        assert detect_diffusion(sys, x, 5) is not None


def test_find_decomposition_on_separated_fleets():
    assert find_decomposition(EVEN, separated(), 3) == (4, 3, 8)
    assert find_decomposition(EVEN, separated(), 4) is None
    assert find_decomposition(EVEN, T("0 . 0"), 5) is not None


def test_simulate_rows():
    x = T("0 . 110110 0")
    traj = simulate(EVEN, x, 5)
    assert len(traj) == 6 and traj.t_max == 5
    for t in range(5):
        assert traj[t + 1] == EVEN.G(traj[t])
    with pytest.raises(ValueError):
        simulate(EVEN, T("0 . 1 0"), 3)


def test_render_formats(tmp_path):
    traj = simulate(EVEN, T("0 . 110110 0"), 4)
    pbm = render_spacetime(traj, -5, 11, "pbm")
    assert pbm.startswith(b"P4\n16 5\n")
    assert len(pbm) == len(b"P4\n16 5\n") + 2 * 5
    assert render_spacetime(traj, -5, 11, "ascii").decode().count("\n") >= 5
    p = tmp_path / "st.ppm"
    write_spacetime(str(p), traj, -5, 11)
    assert p.read_bytes()[:2] in (b"P4", b"P1", b"P6", b"P3")


def test_intro_fleets_emerge():
    sys = fixtures.fixture_intro()
    x = random_configuration(sys.ambient, random.Random(2), 30, "0", "0")
    d = detect_diffusion(sys, x, 5, ceiling=500)
    assert d is not None and d.t <= 500
