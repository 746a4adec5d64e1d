"""Symbol registry and word helpers.

Words are plain ``str`` objects in which every character is one symbol.
Symbols with single-character names are their own character; any other
name (primed symbols, block symbols, user names like ``"ab"``) is mapped
to a private-use code point through a process-wide registry.  Names are
what gets serialized, characters are what algorithms work on.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

_PUA_START = 0xE000

_lock = threading.Lock()
_name_to_char: dict[str, str] = {}
_char_to_name: dict[str, str] = {}
_next_code = _PUA_START


def symbol(name: str) -> str:
    """Return the character standing for the symbol called `name`."""
    global _next_code
    with _lock:
        ch = _name_to_char.get(name)
        if ch is not None:
            return ch
        if len(name) == 1 and name not in _char_to_name and not (
            _PUA_START <= ord(name) < _next_code
        ):
            ch = name
        else:
            ch = chr(_next_code)
            _next_code += 1
        _name_to_char[name] = ch
        _char_to_name[ch] = name
        return ch


def name_of(ch: str) -> str:
    return _char_to_name.get(ch, ch)


def primed(ch: str) -> str:
    return symbol(name_of(ch) + "'")


def block_symbol(block: str) -> str:
    names = [name_of(c) for c in block]
    if all(len(n) == 1 for n in names):
        return symbol("[" + "".join(names) + "]")
    return symbol("[" + ",".join(names) + "]")


def word_from_names(names: Iterable[str]) -> str:
    return "".join(symbol(n) for n in names)


def names_of(word: str) -> list[str]:
    return [name_of(c) for c in word]


def show(word: str) -> str:
    """Human-readable rendering of a word."""
    names = names_of(word)
    if all(len(n) == 1 for n in names):
        return "".join(names)
    return " ".join(names)


def parse_word(text: str) -> str:
    """Parse a word literal.

    A literal without whitespace is read one character per symbol.  With
    whitespace, tokens are symbol names, which allows multi-character
    names such as ``0'``.
    """
    text = text.strip()
    if any(c.isspace() for c in text):
        return word_from_names(text.split())
    return word_from_names(text)


@dataclass(frozen=True)
class Alphabet:
    """Ordered collection of distinct symbols (stored as characters)."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        if len(self.symbols) < 2:
            raise ValueError("an alphabet needs at least two symbols")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be unique")

    @classmethod
    def from_names(cls, names: Sequence[str]) -> "Alphabet":
        return cls(tuple(symbol(n) for n in names))

    @property
    def names(self) -> list[str]:
        return [name_of(c) for c in self.symbols]

    def __contains__(self, ch) -> bool:
        return ch in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def _index(self) -> dict[str, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {c: i for i, c in enumerate(self.symbols)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, ch: str) -> int:
        return self._index[ch]

    def key(self, word: str) -> tuple[int, ...]:
        """Sort key giving lexicographic order by declared symbol order."""
        idx = self._index
        return tuple(idx.get(c, len(idx) + ord(c)) for c in word)

    def shortlex_key(self, word: str) -> tuple:
        return (len(word), self.key(word))

    def is_word(self, word: str) -> bool:
        idx = self._index
        return all(c in idx for c in word)
