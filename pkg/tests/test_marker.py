import random

import pytest
from hypothesis import given, strategies as st

from gliderca import fixtures
from gliderca.configuration import TailConfiguration
from gliderca.marker import (
    CAPipeline, MarkerAutomorphism, MarkerError, build, compose, overlaps, power, validate_marker,
)
from gliderca.sampling import random_configuration


def test_overlaps():
    words = [w for w, _ in overlaps("0011", "1100")]
    assert "11" in words
    assert overlaps("ab", "cd") == [("", True)]


def test_membership_violation(even):
    rep = validate_marker(even, "0", ["1"], {"010": "010"})
    assert ("membership", "010") in rep.violations


def test_length_violation(full):
    rep = validate_marker(full, "0", ["1", "11"], {"010": "0110", "0110": "010"})
    assert any(k == "length" for k, _ in rep.violations)


def test_overlap_violation(full):
    rep = validate_marker(full, "0", ["1", "101"], {"010": "01010", "01010": "010"})
    assert any(k == "overlap" for k, _ in rep.violations)


def test_class_violation(even):
    # 101 and 111 relate different state pairs in the even shift
    rep = validate_marker(even, "1", ["0", "1"], {"101": "111", "111": "101"})
    assert any(k == "class" for k, _ in rep.violations)


def test_even_P2_rewrite(even_sys):
    P2 = even_sys.P2
    assert P2.rewrite("011110") == "011000"
    assert P2.rewrite("011000") == "011110"


def test_occurrence_positions_preserved(even_sys):
    x = TailConfiguration.parse("0 . 01111000011000 0")
    P2 = even_sys.P2
    before = [i for i, _ in P2.occurrence_positions(x.window(-5, 20))]
    after = [i for i, _ in P2.occurrence_positions(P2(x).window(-5, 20))]
    assert before == after


def test_identity_rejected(full):
    with pytest.raises(MarkerError):
        build(full, "0", [("1",)])


def _all_automorphisms():
    out = []
    for sysf in (fixtures.fixture_even, fixtures.fixture_intro):
        sys = sysf()
        out += [(sys.ambient, m) for m in sys.G.markers()]
    return out


AUTOS = _all_automorphisms()


@pytest.mark.parametrize("idx", range(len(AUTOS)))
def test_reversible_and_equivariant(idx):
    X, F = AUTOS[idx]
    rng = random.Random(idx)
    Finv = F.inverse()
    for _ in range(200):
        x = random_configuration(X, rng, rng.randint(0, 30), "0", "0")
        y = F(x)
        assert X.contains_configuration(y)
        assert Finv(y) == x
        assert F(x.shift(1)) == y.shift(1)


@pytest.mark.parametrize("idx", range(len(AUTOS)))
def test_occurrences_do_not_conflict(idx):
    X, F = AUTOS[idx]
    rng = random.Random(100 + idx)
    u = len(F.u)
    for _ in range(100):
        x = random_configuration(X, rng, 30, "0", "0")
        occ = F.occurrence_positions(x.window(x.start - 30, x.end + 30))
        for (i, a), (j, b) in zip(occ, occ[1:]):
            assert j >= i + len(a) - u


def test_serialization_roundtrip(even_sys):
    d = even_sys.G.to_dict()
    G = CAPipeline.from_dict(d)
    assert G == even_sys.G
    assert MarkerAutomorphism.from_dict(even_sys.P1.to_dict()) == even_sys.P1


@given(st.integers(0, 10_000), st.integers(-3, 3))
def test_power(seed, t):
    G = fixtures.fixture_even().G
    X = fixtures.even_shift()
    x = random_configuration(X, random.Random(seed), 16, "0", "0")
    assert power(G, -t)(power(G, t)(x)) == x


def test_compose_order(full):
    """Stages run left to right; these two do not commute."""
    A = build(full, "0", [("01", "11")], "A")
    B = build(full, "0", [("10", "11")], "B")
    x = TailConfiguration.parse("0 . 11011 0")
    assert compose([A, B], full)(x) == B(A(x)) == TailConfiguration.parse("0 . 11011 0 @1")
    assert compose([B, A], full)(x) == TailConfiguration.parse("0 . 11011 0 @-1")
