"""Hamming graph parameters and words."""

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..exceptions import InputError

Word = Tuple[int, ...]


@dataclass(frozen=True)
class HammingParams:
    """H(n, q): words of length ``n`` over the alphabet ``{0, ..., q-1}``."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"word length n must be at least 1, got {self.n}")
        if self.q < 2:
            raise InputError(f"alphabet size q must be at least 2, got {self.q}")

    @property
    def vertex_count(self) -> int:
        return self.q**self.n

    @property
    def degree(self) -> int:
        return (self.q - 1) * self.n

    def constant_word(self, symbol: int) -> Word:
        """The word ``(symbol, ..., symbol)``."""
        if not 0 <= symbol < self.q:
            raise InputError(f"symbol {symbol} outside alphabet of size {self.q}")
        return (symbol,) * self.n

    def validate_word(self, word: Sequence[int]) -> Word:
        if len(word) != self.n:
            raise InputError(f"word has length {len(word)}, expected {self.n}")
        for i, symbol in enumerate(word):
            if not 0 <= symbol < self.q:
                raise InputError(f"coordinate {i} holds {symbol}, outside [0, {self.q})")
        return tuple(word)


def hamming_distance(x: Sequence[int], y: Sequence[int]) -> int:
    """Number of coordinates where ``x`` and ``y`` differ."""
    if len(x) != len(y):
        raise InputError(f"words of different lengths {len(x)} and {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


def word_to_index(p: HammingParams, word: Sequence[int]) -> int:
    """Little-endian base-q encoding: coordinate 0 is least significant."""
    word = p.validate_word(word)
    index = 0
    for symbol in reversed(word):
        index = index * p.q + symbol
    return index


def index_to_word(p: HammingParams, index: int) -> Word:
    if not 0 <= index < p.vertex_count:
        raise InputError(f"index {index} outside [0, {p.vertex_count})")
    coords = []
    for _ in range(p.n):
        index, symbol = divmod(index, p.q)
        coords.append(symbol)
    return tuple(coords)
