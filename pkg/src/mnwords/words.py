"""(m, n)-words.

An (m, n)-word is a length-n sequence over ``0..m+1`` whose first letter is
not ``m+1`` and which becomes weakly decreasing once every ``m+1`` is
deleted.  Letters are plain ints, so ``m >= 9`` needs no special handling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ._backend import kernels
from .errors import (
    InvalidDecomposition,
    LetterOutOfRange,
    ViolatesMN1,
    ViolatesMN2,
)

__all__ = [
    "MNWord",
    "WordDecomposition",
    "validate_word",
    "enumerate_words",
    "decompose",
    "recompose",
]


def _check_m(m):
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ValueError(f"m must be a nonnegative integer, got {m!r}")


@dataclass(frozen=True, order=True)
class MNWord:
    """A validated (m, n)-word; ``n`` is the number of letters."""

    m: int
    letters: tuple[int, ...]

    def __post_init__(self):
        _check_m(self.m)
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        status, pos = kernels.scan_word(self.m, letters)
        if status == kernels.OUT_OF_RANGE:
            raise LetterOutOfRange(pos, letters[pos - 1], self.m)
        if status == kernels.MN1:
            raise ViolatesMN1(self.m)
        if status == kernels.MN2:
            raise ViolatesMN2(pos, letters[pos - 1])

    @classmethod
    def _trusted(cls, m: int, letters: tuple[int, ...]) -> MNWord:
        # Skips validation; only for letters produced by the kernels.
        self = object.__new__(cls)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "letters", letters)
        return self

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def is_topless(self) -> bool:
        return (self.m + 1) not in self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


@dataclass(frozen=True)
class WordDecomposition:
    """Topless letters ``w_1..w_k`` and the run length of ``m+1`` after each."""

    m: int
    topless: tuple[int, ...]
    gaps: tuple[int, ...]

    def __post_init__(self):
        _check_m(self.m)
        object.__setattr__(self, "topless", tuple(self.topless))
        object.__setattr__(self, "gaps", tuple(self.gaps))
        if len(self.topless) != len(self.gaps):
            raise InvalidDecomposition(
                f"{len(self.topless)} topless letters but {len(self.gaps)} gaps"
            )
        prev = self.m
        for i, c in enumerate(self.topless, 1):
            if not 0 <= c <= self.m:
                raise InvalidDecomposition(f"topless letter {c} at {i} outside 0..{self.m}")
            if c > prev:
                raise InvalidDecomposition(f"topless letters increase at position {i}")
            prev = c
        for i, g in enumerate(self.gaps, 1):
            if g < 0:
                raise InvalidDecomposition(f"negative gap {g} at position {i}")

    @property
    def k(self) -> int:
        return len(self.topless)

    @property
    def n(self) -> int:
        return len(self.topless) + sum(self.gaps)


def validate_word(m: int, letters: Sequence[int]) -> MNWord:
    """Return ``letters`` as an :class:`MNWord` or raise the first violation.

    >>> validate_word(2, [2, 3, 1]).letters
    (2, 3, 1)
    >>> validate_word(2, [0, 3, 1])
    Traceback (most recent call last):
    ...
    mnwords.errors.ViolatesMN2: letter 1 at position 3 is preceded by a smaller letter
    """
    return MNWord(m, tuple(letters))


def enumerate_words(m: int, n: int) -> Iterator[MNWord]:
    """Lazily yield all of W(m, n) in lexicographic order.

    Generation respects both defining conditions at every position, so no
    candidate is ever built and discarded.
    """
    _check_m(m)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    trusted = MNWord._trusted
    for letters in kernels.iter_words(m, n):
        yield trusted(m, letters)


def decompose(w: MNWord) -> WordDecomposition:
    topless, gaps = kernels.split_word(w.m, w.letters)
    d = object.__new__(WordDecomposition)
    object.__setattr__(d, "m", w.m)
    object.__setattr__(d, "topless", topless)
    object.__setattr__(d, "gaps", gaps)
    return d


def recompose(d: WordDecomposition) -> MNWord:
    if not isinstance(d, WordDecomposition):
        raise InvalidDecomposition(f"expected WordDecomposition, got {type(d).__name__}")
    return MNWord._trusted(d.m, kernels.join_word(d.m, d.topless, d.gaps))
