"""Exact counting in H(n, q): ball volumes, count vectors and threshold sums.

Everything here is integer arithmetic on Python ints, so results are exact at
any size.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..config.settings import settings
from ..exceptions import InputError
from .params import HammingParams, Word, index_to_word

logger = logging.getLogger(__name__)

BALL_VOLUME_CACHE_SIZE = 1024


@dataclass(frozen=True)
class CountVector:
    """Per-symbol occurrence counts ``(c_0, ..., c_{q-1})`` of a word of length ``n``."""

    counts: Tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise InputError(f"counts must be non-negative, got {self.counts}")
        if sum(self.counts) != self.n:
            raise InputError(f"counts {self.counts} sum to {sum(self.counts)}, not n={self.n}")

    @classmethod
    def of_word(cls, p: HammingParams, word: Sequence[int]) -> "CountVector":
        word = p.validate_word(word)
        counts = [0] * p.q
        for symbol in word:
            counts[symbol] += 1
        return cls(tuple(counts), p.n)

    @property
    def q(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class ThresholdVector:
    """``t[i]`` is the least count of symbol ``i`` that puts a word in ball ``i``."""

    t: Tuple[int, ...]

    def caps(self, n: int) -> Tuple[int, ...]:
        """Largest count of each symbol a word may have while missing every ball."""
        return tuple(min(ti - 1, n) for ti in self.t)


@lru_cache(maxsize=BALL_VOLUME_CACHE_SIZE)
def ball_volume(p: HammingParams, k: int) -> int:
    """|Γ_k(x)| = Σ_{i≤k} (q-1)^i C(n, i); 0 for k < 0 and q^n for k ≥ n."""
    if k < 0:
        return 0
    if k >= p.n:
        return p.vertex_count
    total = 0
    binom = 1
    power = 1
    for i in range(k + 1):
        total += binom * power
        binom = binom * (p.n - i) // (i + 1)
        power *= p.q - 1
    return total


def ball_volume_by_factorials(p: HammingParams, k: int) -> int:
    """Same sum as :func:`ball_volume`, evaluated term by term from factorials."""
    f = math.factorial
    return sum(
        f(p.n) // (f(i) * f(p.n - i)) * (p.q - 1) ** i
        for i in range(0, min(k, p.n) + 1)
    )


def multiplicity(c: CountVector) -> int:
    """Number of words with count vector ``c``: n! / (c_0! ... c_{q-1}!)."""
    result = math.factorial(c.n)
    for ci in c.counts:
        result //= math.factorial(ci)
    return result


def bounded_compositions(
    n: int, q: int, caps: Optional[Sequence[int]] = None
) -> Iterator[Tuple[int, ...]]:
    """Yield ``(c_0, ..., c_{q-1})`` with sum ``n`` and ``c_i <= caps[i]``.

    Order is lexicographic. Branches whose remaining caps cannot absorb the
    remaining total are skipped.
    """
    bounds = [n] * q if caps is None else [min(c, n) for c in caps]
    if len(bounds) != q:
        raise InputError(f"expected {q} caps, got {len(bounds)}")
    if any(b < 0 for b in bounds):
        return
    room = [0] * (q + 1)
    for i in range(q - 1, -1, -1):
        room[i] = room[i + 1] + bounds[i]

    prefix: List[int] = []

    def extend(i: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if i == q:
            if remaining == 0:
                yield tuple(prefix)
            return
        low = max(0, remaining - room[i + 1])
        for c in range(low, min(bounds[i], remaining) + 1):
            prefix.append(c)
            yield from extend(i + 1, remaining - c)
            prefix.pop()

    yield from extend(0, n)


class _BoundedWordCounter:
    """Counts words of a given length whose symbol counts respect ``caps``.

    ``count(i, m)`` sums multiplicities over the compositions of ``m`` into
    symbols ``i..q-1``; a composition's multinomial factors into one binomial
    per symbol, so shared suffixes are memoized.
    """

    def __init__(self, caps: Sequence[int]) -> None:
        self.caps = list(caps)
        self.q = len(caps)
        self.room = [0] * (self.q + 1)
        for i in range(self.q - 1, -1, -1):
            self.room[i] = self.room[i + 1] + self.caps[i]
        self._memo: Dict[Tuple[int, int], int] = {}

    def count(self, i: int, m: int) -> int:
        if i == self.q:
            return 1 if m == 0 else 0
        if m > self.room[i]:
            return 0
        key = (i, m)
        if key not in self._memo:
            low = max(0, m - self.room[i + 1])
            self._memo[key] = sum(
                math.comb(m, c) * self.count(i + 1, m - c)
                for c in range(low, min(self.caps[i], m) + 1)
            )
        return self._memo[key]


def _first_symbol_chunk(args: Tuple[Tuple[int, ...], int, List[int]]) -> int:
    """Pool worker: contribution of a block of ``c_0`` values."""
    caps, n, c0_values = args
    counter = _BoundedWordCounter(caps)
    return sum(math.comb(n, c0) * counter.count(1, n - c0) for c0 in c0_values)


def count_with_thresholds_violated(
    p: HammingParams, t: ThresholdVector, workers: Optional[int] = None
) -> int:
    """Number of words with ``count_i(x) < t_i`` for every symbol ``i``.

    These are exactly the words outside ``∪_i {x : count_i(x) >= t_i}``. The sum
    runs over bounded compositions of ``n``, never over the q^n words.
    """
    if len(t.t) != p.q:
        raise InputError(f"threshold vector has {len(t.t)} entries, expected q={p.q}")
    caps = t.caps(p.n)
    if any(c < 0 for c in caps) or sum(caps) < p.n:
        return 0

    workers = workers if workers is not None else settings.workers
    low = max(0, p.n - sum(caps[1:]))
    c0_values = list(range(low, caps[0] + 1))
    if workers <= 1 or len(c0_values) < 2:
        return _first_symbol_chunk((caps, p.n, c0_values))

    chunks = [c0_values[i::workers] for i in range(workers)]
    jobs = [(caps, p.n, chunk) for chunk in chunks if chunk]
    logger.debug(f"Splitting {len(c0_values)} values of c_0 across {len(jobs)} workers")
    with Pool(len(jobs)) as pool:
        return sum(pool.map(_first_symbol_chunk, jobs))


def count_vectors(p: HammingParams) -> Iterator[CountVector]:
    """Every count vector of H(n, q) in lexicographic order."""
    for counts in bounded_compositions(p.n, p.q):
        yield CountVector(counts, p.n)


def words_of(p: HammingParams) -> Iterator[Word]:
    """All q^n words, in little-endian index order."""
    for index in range(p.vertex_count):
        yield index_to_word(p, index)
