"""Strings over the alphabet {0, ..., a-1} and their ranking.

A string is a plain ``tuple`` of small non-negative integers; the empty
tuple is the empty string.  Every vertex set handled by this package is
the set of all strings with length in ``[k1, k2]``, enumerated by length
first and lexicographically within a length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

LevString = tuple[int, ...]

EMPTY: LevString = ()
EMPTY_LITERAL = "-"


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 2:
            raise ValueError(f"alphabet size must be an integer >= 2, got {self.size!r}")

    def check(self, w: Sequence[int]) -> None:
        for s in w:
            if not 0 <= s < self.size:
                raise ValueError(f"symbol {s} outside alphabet {{0..{self.size - 1}}}")


@dataclass(frozen=True)
class GraphSpec:
    """Parameters ``(k1, k2, a)`` of a Levenshtein graph."""

    k1: int
    k2: int
    a: int

    def __post_init__(self):
        if self.k1 < 0:
            raise ValueError(f"k1 must be >= 0, got {self.k1}")
        if self.k2 < self.k1:
            raise ValueError(f"k2 must be >= k1, got k1={self.k1}, k2={self.k2}")
        Alphabet(self.a)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.a)

    @property
    def delta(self) -> int:
        """Number of distinct string lengths, ``k2 - k1 + 1``."""
        return self.k2 - self.k1 + 1

    @property
    def vertex_count(self) -> int:
        return sum(self.a**k for k in range(self.k1, self.k2 + 1))

    def length_offset(self, k: int) -> int:
        """Rank of the first string of length ``k``."""
        return sum(self.a**j for j in range(self.k1, k))

    def contains(self, w: Sequence[int]) -> bool:
        return self.k1 <= len(w) <= self.k2 and all(0 <= s < self.a for s in w)

    def as_dict(self) -> dict:
        return {"k1": self.k1, "k2": self.k2, "a": self.a}


def count_symbol(w: Sequence[int], alpha: int, a: int | None = None) -> int:
    """Number of occurrences of ``alpha`` in ``w``."""
    if alpha < 0 or (a is not None and alpha >= a):
        raise ValueError(f"symbol {alpha} outside alphabet")
    return tuple(w).count(alpha)


def run_count(w: Sequence[int]) -> int:
    """Number of maximal blocks of a repeated symbol (0 for the empty string)."""
    if not w:
        return 0
    return 1 + sum(1 for x, y in zip(w, w[1:]) if x != y)


def runs(w: Sequence[int]) -> list[tuple[int, int]]:
    """Run-length encoding as ``[(symbol, length), ...]``."""
    return [(s, len(list(g))) for s, g in itertools.groupby(w)]


def prefix(w: Sequence[int], n: int) -> LevString:
    if not 0 <= n <= len(w):
        raise ValueError(f"prefix length {n} outside [0, {len(w)}]")
    return tuple(w[:n])


def suffix(w: Sequence[int], n: int) -> LevString:
    if not 0 <= n <= len(w):
        raise ValueError(f"suffix length {n} outside [0, {len(w)}]")
    return tuple(w[len(w) - n:])


def rank(w: Sequence[int], spec: GraphSpec) -> int:
    """Index of ``w`` in the (length, lexicographic) enumeration of ``spec``."""
    k = len(w)
    if not spec.k1 <= k <= spec.k2:
        raise ValueError(f"string length {k} outside [{spec.k1}, {spec.k2}]")
    code = 0
    for s in w:
        if not 0 <= s < spec.a:
            raise ValueError(f"symbol {s} outside alphabet {{0..{spec.a - 1}}}")
        code = code * spec.a + s
    return spec.length_offset(k) + code


def unrank(r: int, spec: GraphSpec) -> LevString:
    if r < 0:
        raise ValueError(f"rank {r} is negative")
    for k in range(spec.k1, spec.k2 + 1):
        block = spec.a**k
        if r < block:
            return code_to_string(r, k, spec.a)
        r -= block
    raise ValueError("rank exceeds the vertex count")


def code_to_string(code: int, k: int, a: int) -> LevString:
    """Length-``k`` string whose base-``a`` value is ``code``."""
    out = [0] * k
    for i in range(k - 1, -1, -1):
        code, out[i] = divmod(code, a)
    return tuple(out)


def enumerate_strings(spec: GraphSpec) -> Iterator[LevString]:
    for k in range(spec.k1, spec.k2 + 1):
        yield from itertools.product(range(spec.a), repeat=k)


def strings_of_length(k: int, a: int) -> Iterator[LevString]:
    return itertools.product(range(a), repeat=k)


def format_string(w: Sequence[int], a: int) -> str:
    """Textual literal: digits for ``a <= 10``, comma separated otherwise, ``-`` for empty."""
    if not w:
        return EMPTY_LITERAL
    if a <= 10:
        return "".join(str(s) for s in w)
    return ",".join(str(s) for s in w)


def parse_string(text: str, a: int) -> LevString:
    text = text.strip()
    if text == EMPTY_LITERAL:
        return EMPTY
    if not text:
        raise ValueError("empty literal; use '-' for the empty string")
    try:
        if a <= 10 and "," not in text:
            w = tuple(int(ch) for ch in text)
        else:
            w = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"invalid string literal {text!r}") from None
    Alphabet(a).check(w)
    return w
