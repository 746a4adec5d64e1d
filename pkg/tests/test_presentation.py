import itertools
import json
import re

import pytest
from hypothesis import given, strategies as st

from gliderca import fixtures
from gliderca.configuration import TailConfiguration
from gliderca.presentation import PresentationError, SoficPresentation, determinize, parse_presentation


def brute_even(w: str) -> bool:
    """Interior 1-runs between zeros have even length."""
    return not re.search(r"0(1+)0", w) or all(len(r) % 2 == 0 for r in re.findall(r"(?<=0)(1+)(?=0)", w))


def test_even_examples(even):
    assert not even.language_contains("010")
    assert even.language_contains("011110")
    assert even.language_contains("")


@given(st.text(alphabet="01", max_size=12))
def test_even_language_matches_oracle(w):
    assert fixtures.even_shift().language_contains(w) == brute_even(w)


@given(st.text(alphabet="01", max_size=12))
def test_golden_mean_oracle(w):
    assert fixtures.golden_mean_shift().language_contains(w) == ("11" not in w)


def test_sink_states_trimmed():
    P = SoficPresentation.from_dict({"alphabet": ["0", "1"], "states": ["a", "dead"],
                                     "edges": [["a", "0", "a"], ["a", "1", "a"], ["a", "0", "dead"]]})
    assert P.states == ("a",) or list(P.states) == ["a"]


def test_bad_edge_rejected():
    with pytest.raises((PresentationError, ValueError)):
        SoficPresentation.from_dict({"alphabet": ["0", "1"], "states": ["a"], "edges": [["a", "2", "a"]]})


def test_dict_roundtrip(even):
    Q = SoficPresentation.from_dict(even.to_dict())
    assert sorted(Q.words(6)) == sorted(even.words(6))


def test_fischer_cover_language(even, golden):
    for P in (even, golden, fixtures.coded_0_111()):
        F = P.fischer
        assert F.right_resolving
        for n in range(7):
            assert sorted(F.words(n)) == sorted(P.words(n))


def test_determinize_keeps_language():
    P = fixtures.arrow_shift()
    D = determinize(P)
    assert D.right_resolving
    for n in range(5):
        assert set(D.words(n)) == set(P.words(n))


def test_words_against_brute_force(even):
    for n in range(9):
        brute = ["".join(t) for t in itertools.product("01", repeat=n) if brute_even("".join(t))]
        assert sorted(even.words(n)) == sorted(brute)


def test_contains_configuration(even):
    assert even.contains_configuration(TailConfiguration.parse("0 . 11 0"))
    assert not even.contains_configuration(TailConfiguration.parse("0 . 1 0"))


def test_parse_presentation_json(even):
    P = parse_presentation(json.dumps(even.to_dict()))
    assert sorted(P.words(5)) == sorted(even.words(5))
    with pytest.raises(PresentationError):
        parse_presentation("{not json")
    with pytest.raises(PresentationError):
        parse_presentation("[1, 2]")


def test_arrow_shift():
    P = fixtures.arrow_shift()
    assert len(P.alphabet) == 6
    assert P.irreducible
    # opposite arrows in the first block, equal arrows in the next
    assert P.language_contains("1<ab>1" + "0" + "1>>1")
    assert not P.language_contains("1<>1" + "0" + "1<>1")
