import json
import random

import pytest

from gliderca import fixtures
from gliderca.configuration import TailConfiguration
from gliderca.glider import (
    GliderBuildError, GliderSystem, build_F, build_GX, build_GXn, build_P4, build_ryan_H, with_n,
)
from gliderca.sampling import random_configuration, random_path_word
from gliderca.symbols import show

from conftest import built


def swaps(M):
    return [list(c) for c in M.swaps()]


def test_intro_tables():
    sys = fixtures.fixture_intro()
    assert swaps(sys.P1) == [["0010", "0110"]]
    assert sorted(swaps(sys.P2)[0]) == ["0100", "0110"]
    assert swaps(sys.P3) == [["00101", "00111"]]


def test_even_tables(even_sys):
    assert swaps(even_sys.P1) == [["000110", "011110"]]
    assert swaps(even_sys.P2) == [["011110", "011000"]]
    assert swaps(even_sys.P3) == [["000110110111111011111"],
                                  ["000110111111110111111", "000111111111111111111"]]
    assert swaps(even_sys.P4) == [["0" * 13 + "1100110"] + ["0" * c + "1" * (19 - c) + "0"
                                                              for c in (3, 5, 7, 9, 11, 13)]]
    assert even_sys.N == 18


def test_even_built_equals_fixture(even_sys):
    b = built("even")
    for name in ("P1", "P2", "P3", "P4"):
        assert getattr(b, name).to_dict() == getattr(even_sys, name).to_dict()
    assert (b.N, b.N1, b.p, b.q, b.K) == (even_sys.N, even_sys.N1, 1, 2, 1)
    ours = b.to_dict()["tables"]
    theirs = even_sys.to_dict()["tables"]
    assert ours == theirs


def test_even_parameters(even_sys):
    assert (even_sys.s, even_sys.gl, even_sys.gr) == (2, "0011", "1111")


def test_full_parameters(full_sys):
    assert (full_sys.p, full_sys.q, full_sys.s, full_sys.gl, full_sys.gr) == (1, 1, 1, "01", "11")
    assert swaps(full_sys.P1) == [["0010", "0110"]]
    assert swaps(full_sys.P2) == [["0110", "0100"]]
    assert len(full_sys.P3.cycles) == 1 and len(full_sys.P3.cycles[0]) == 2


def p4_oracle(z, one, p, q, n):
    """Full shift only: every word over {1} is a closed gap word."""
    j = 1
    U = ["1" * L for L in range(1, n)]
    U = [w for w in U if w not in (one, one * (p + 1))]
    last = one * (p + 1 + j)
    U = sorted((w for w in U if w != last), key=len, reverse=True) + [last]
    words = [one + z * q + one * j] + U
    T = max(len(w) for w in words) + (q + 1) * p
    return [z * (T - len(w)) + w + z for w in words]


def test_full_P4_against_enumeration(full_sys):
    M, rows = build_P4(full_sys.ambient, "0", "1", 1, 1, 1, 6)
    assert swaps(M) == [p4_oracle("0", "1", 1, 1, 6)]
    assert len({len(w) for w in rows[0]["padded"]}) == 1


def test_P4_n_too_small(full_sys):
    with pytest.raises(GliderBuildError):
        build_P4(full_sys.ambient, "0", "1", 1, 1, 1, 3)


def test_finite_shift_rejected():
    from gliderca.presentation import SoficPresentation
    P = SoficPresentation.from_dict({"alphabet": ["0", "1"], "states": ["a", "b"],
                                     "edges": [["a", "0", "a"], ["b", "1", "b"]]})
    with pytest.raises(ValueError):
        build_GX(P, "0")


@pytest.mark.parametrize("name", ["full", "even", "golden", "coded"])
def test_glider_lengths_and_validity(name):
    sys = built(name)
    assert len(sys.gl) == len(sys.gr) == sys.q * (sys.p + 1)
    for M in sys.G.markers():
        assert M.validate(sys.ambient).valid


def test_build_deterministic(even):
    a = json.dumps(build_GX(even, "0").to_dict(), sort_keys=True)
    b = json.dumps(build_GX(even, "0").to_dict(), sort_keys=True)
    assert a == b


def test_system_dict_roundtrip(even_sys):
    d = json.loads(json.dumps(even_sys.to_dict()))
    s2 = GliderSystem.from_dict(d)
    assert s2.G == even_sys.G and s2.N == even_sys.N


def test_GXn(even):
    sys = build_GXn(even, "0", n=18)
    assert [m.name for m in sys.G.markers()] == ["P1", "P2", "P4"]
    assert sys.P3 is None and not sys.sofic
    assert swaps(sys.P4) == swaps(fixtures.fixture_even().P4)
    with pytest.raises(GliderBuildError):
        build_GXn(even, "0", n=3)


def test_GXn_agrees_without_long_gaps(even_sys):
    Gn = with_n(even_sys, 18).G
    rng = random.Random(5)
    for _ in range(100):
        x = random_configuration(even_sys.ambient, rng, 30, "0", "0")
        if "1" * 18 in x.center:
            continue
        assert Gn(x) == even_sys.G(x)


def test_G_fixes_zero(even_sys, full_sys):
    for sys in (even_sys, full_sys):
        z = TailConfiguration.periodic(sys.z)
        assert sys.G(z) == z


def test_stages_do_not_touch_zero_free_prefix(even_sys):
    """Each stage leaves x[i] alone when z occurs only to the right of i."""
    rng = random.Random(9)
    X = even_sys.ambient
    for _ in range(100):
        tail = random_path_word(X, rng, 20, X.all_states, X.all_states)
        x = TailConfiguration("11", "11" + tail, "0", 0)
        if not X.contains_configuration(x):
            continue
        k = x.center.find("0")
        first = x.start + (k if k >= 0 else len(x.center))
        for M in even_sys.G.markers():
            y = M(x)
            assert y.window(first - 30, first) == x.window(first - 30, first)


def test_F_exchange(even_sys):
    z, gl, gr = even_sys.z, even_sys.gl, even_sys.gr
    F = build_F(even_sys)
    x = TailConfiguration(z, gr + z * 3 + gl, z, 0)
    assert F(x) == TailConfiguration(z, z + gr + z + gl + z, z, 0)
    assert F.inverse()(F(x)) == x
    far = TailConfiguration(z, gr + z * 30 + gl, z, 0)
    assert F(far) == far


def test_ryan_H(full):
    H = build_ryan_H(full, "0", "1", "11", "111")
    assert swaps(H) == [["0111010110", "0111011010"]]
    with pytest.raises(GliderBuildError):
        build_ryan_H(full, "0", "1", "1", "111")


def test_show_round(even_sys):
    assert show(even_sys.gl) == "0011"
