import random

import pytest
from hypothesis import given, strategies as st

from gliderca.configuration import TailConfiguration, glue, least_rotation, primitive_root
from gliderca.sampling import random_configuration
from gliderca.symbols import Alphabet, block_symbol, name_of, parse_word, show, symbol


def T(s):
    return TailConfiguration.parse(s)


words01 = st.text(alphabet="01", min_size=0, max_size=12)
tails01 = st.text(alphabet="01", min_size=1, max_size=4)


@st.composite
def configs(draw):
    return TailConfiguration(draw(tails01), draw(words01), draw(tails01),
                             draw(st.integers(-20, 20))).canonical()


def naive(x: TailConfiguration, i: int) -> str:
    """Reads position i straight from the definition."""
    if i < x.start:
        k = (x.start - i) % len(x.left)
        return x.left[-k] if k else x.left[0]
    if i < x.start + len(x.center):
        return x.center[i - x.start]
    return x.right[(i - x.start - len(x.center)) % len(x.right)]


class TestSymbols:
    def test_multichar_names_roundtrip(self):
        w = parse_word("0 0' 1")
        assert len(w) == 3 and show(w) == "0 0' 1"
        assert name_of(symbol("0'")) == "0'"

    def test_block_symbol(self):
        assert name_of(block_symbol("01")) == "[01]"

    def test_alphabet_needs_two_distinct(self):
        with pytest.raises(ValueError):
            Alphabet(("0",))
        with pytest.raises(ValueError):
            Alphabet(("0", "0"))

    def test_lex_key_uses_declared_order(self):
        A = Alphabet.from_names(["1", "0"])
        assert sorted(["0", "1"], key=A.key) == ["1", "0"]


class TestParsing:
    def test_parse_example(self):
        x = T("0 . 0011 0")
        assert x.subword(0, 3) == "0011"
        assert x.symbol_at(-5) == "0"
        assert x.subword(2, 1) == ""

    def test_parse_canonicalizes(self):
        x = T("0 . 0011 0")
        assert (x.center, x.start) == ("11", 2)

    def test_at_suffix(self):
        assert T("0 11 0 @5").start == 5

    def test_bad_literal(self):
        with pytest.raises(ValueError):
            T("0")

    @given(configs())
    def test_str_parse_roundtrip(self, x):
        assert T(str(x)) == x


class TestCanonical:
    @given(configs())
    def test_canonical_idempotent(self, x):
        c = x.canonical()
        assert c.canonical().key() == c.key()

    @given(configs(), st.integers(-30, 30))
    def test_reads_match_definition(self, x, i):
        raw = TailConfiguration(x.left, x.center, x.right, x.start)
        assert raw.symbol_at(i) == naive(raw, i)

    @given(configs())
    def test_canonical_same_sequence(self, x):
        lo, hi = x.start - 15, x.end + 15
        assert x.canonical().window(lo, hi) == x.window(lo, hi)

    def test_primitive_and_rotation(self):
        assert primitive_root("0101") == "01"
        assert least_rotation("10") == "01"


class TestShiftAndGlue:
    def test_shift_example(self):
        x = T("0 . 0011 0")
        y = x.shift(1)
        assert y.window(-1, 3) == x.window(0, 4)

    @given(configs(), st.integers(-5, 5), st.integers(-5, 5))
    def test_shift_composes(self, x, a, b):
        assert x.shift(a).shift(b) == x.shift(a + b)

    def test_glue_examples(self):
        z = T("0 . 0")
        assert glue(z, z, 0) == z
        x = T("0 1111 . 0")
        y = T("0 . 0011 0")
        assert glue(x, y, 0) == T("0 1111 . 0011 0")

    @given(configs(), configs(), st.integers(-6, 6))
    def test_glue_defining_property(self, x, y, i):
        g = glue(x, y, i)
        assert g.window(i - 10, i) == x.window(i - 10, i)
        assert g.window(i, i + 10) == y.window(i, i + 10)

    def test_occurrences(self):
        x = T("0 . 0011 0")
        assert x.occurrences("0011", -3, 3) == [0]
        assert T("0 . 0").occurrences("00", 0, 2) == [0, 1, 2]

    @given(configs(), st.text(alphabet="01", min_size=1, max_size=3))
    def test_right_occurrence_offset(self, x, w):
        left = x.occurrences(w, -5, 5)
        k = len(w) - 1
        assert x.right_occurrences(w, -5 + k, 5 + k) == [i + k for i in left]


def test_equality_ignores_tail_phase():
    a = TailConfiguration("01", "", "01", 0)
    b = TailConfiguration("01", "0101", "01", -4)
    assert a == b and hash(a) == hash(b)


def test_random_configuration_is_in_shift(even):
    rng = random.Random(1)
    for _ in range(50):
        x = random_configuration(even, rng, 10)
        assert even.contains_configuration(x)


@given(configs(), st.text(alphabet="01", max_size=6), st.integers(-6, 6))
def test_equality_matches_wide_window(x, c, s):
    y = TailConfiguration(x.left, c, x.right, s)
    lo, hi = min(x.start, s) - 40, max(x.end, s + len(c)) + 40
    assert (x == y) == (x.window(lo, hi) == y.window(lo, hi))


def test_equality_sees_past_center_boundary():
    a = TailConfiguration("0001", "0", "010", 3)
    b = TailConfiguration("0001", "00", "010", -1)
    assert a == b
