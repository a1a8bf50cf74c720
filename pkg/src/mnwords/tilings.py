"""Two-toned tilings of a 1 x (m+n) strip.

A tiling uses exactly ``m`` red squares and any number of blue strips whose
lengths sum to ``n``.  Red runs are always stored as individual squares, so
two tilings are equal exactly when their tile sequences are.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from ._backend import kernels
from .errors import EmptyBlueStrip, RedCountMismatch, RedNotSquare, TilingError

__all__ = [
    "Color",
    "Tile",
    "RED",
    "TwoTonedTiling",
    "validate_tiling",
    "enumerate_tilings",
    "blue_profile",
]


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"


@dataclass(frozen=True)
class Tile:
    color: Color
    length: int = 1

    def __post_init__(self):
        color = Color(self.color)
        object.__setattr__(self, "color", color)
        if color is Color.RED and self.length != 1:
            raise RedNotSquare(None, self.length)
        if self.length < 1:
            raise EmptyBlueStrip(None)

    @classmethod
    def red(cls) -> Tile:
        return RED

    @classmethod
    def blue(cls, length: int) -> Tile:
        return _blue(length)

    @property
    def code(self) -> int:
        """0 for a red square, the length for a blue strip."""
        return 0 if self.color is Color.RED else self.length

    @classmethod
    def from_code(cls, code: int) -> Tile:
        return RED if code == 0 else _blue(code)

    def __lt__(self, other):
        if not isinstance(other, Tile):
            return NotImplemented
        return self.code < other.code

    def __repr__(self):
        return "R" if self.color is Color.RED else f"B{self.length}"


RED = Tile(Color.RED, 1)
_BLUES: dict[int, Tile] = {}


def _blue(length):
    tile = _BLUES.get(length)
    if tile is None:
        tile = Tile(Color.BLUE, length)
        if length <= 64:
            _BLUES[length] = tile
    return tile


TileLike = Union[Tile, tuple, str]


@dataclass(frozen=True, eq=False)
class TwoTonedTiling:
    """An element of T(m, n); ``n`` is derived from the blue lengths."""

    m: int
    codes: tuple[int, ...]

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 0:
            raise ValueError(f"m must be a nonnegative integer, got {self.m!r}")
        codes = tuple(self.codes)
        object.__setattr__(self, "codes", codes)
        for i, c in enumerate(codes, 1):
            if c < 0:
                raise EmptyBlueStrip(i)
        reds = codes.count(0)
        if reds != self.m:
            raise RedCountMismatch(self.m, reds)

    @classmethod
    def _trusted(cls, m: int, codes: tuple[int, ...]) -> TwoTonedTiling:
        self = object.__new__(cls)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "codes", codes)
        return self

    @classmethod
    def from_tiles(cls, m: int, tiles: Iterable[TileLike]) -> TwoTonedTiling:
        return validate_tiling(m, tiles)

    @property
    def tiles(self) -> tuple[Tile, ...]:
        return tuple(Tile.from_code(c) for c in self.codes)

    @property
    def n(self) -> int:
        return sum(self.codes)

    @property
    def size(self) -> int:
        return self.m + sum(self.codes)

    def __len__(self):
        return len(self.codes)

    def __iter__(self):
        return iter(self.tiles)

    def __eq__(self, other):
        if not isinstance(other, TwoTonedTiling):
            return NotImplemented
        return self.m == other.m and self.codes == other.codes

    def __hash__(self):
        return hash((self.m, self.codes))

    def __lt__(self, other):
        if not isinstance(other, TwoTonedTiling):
            return NotImplemented
        return (self.m, self.codes) < (other.m, other.codes)

    def __repr__(self):
        body = " ".join("R" if c == 0 else f"B{c}" for c in self.codes)
        return f"TwoTonedTiling(m={self.m}, [{body}])"


def _tile_code(item, position):
    # Accepts Tile, ("R", 1) / ("B", 3) pairs, or "R" / "B3" tokens.
    if isinstance(item, Tile):
        return item.code
    if isinstance(item, str):
        color, length = item[:1], item[1:]
        length = int(length) if length else 1
    else:
        color, length = item
    color = Color(color.value if isinstance(color, Color) else color)
    if color is Color.RED:
        if length != 1:
            raise RedNotSquare(position, length)
        return 0
    if length < 1:
        raise EmptyBlueStrip(position)
    return length


def validate_tiling(m: int, tiles: Iterable[TileLike]) -> TwoTonedTiling:
    """Check that ``tiles`` is an element of T(m, n) for some n.

    Raises the error for the first bad tile; the red count is checked last.
    """
    try:
        codes = tuple(_tile_code(t, i) for i, t in enumerate(tiles, 1))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, TilingError):
            raise
        raise TilingError(f"not a tile: {exc}") from exc
    return TwoTonedTiling(m, codes)


def enumerate_tilings(m: int, n: int) -> Iterator[TwoTonedTiling]:
    """Lazily yield all of T(m, n).

    Order is lexicographic on tiles with R < B1 < B2 < ..., which is the
    order of the 25 tilings of length 2+3 as usually listed.
    """
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be nonnegative, got {m}, {n}")
    trusted = TwoTonedTiling._trusted
    for codes in kernels.iter_tiles(m, n):
        yield trusted(m, codes)


def blue_profile(t: TwoTonedTiling) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Blue strip lengths and the red counts around them.

    Returns ``(blues, gaps)`` where ``gaps[0]`` counts reds before the first
    blue strip, ``gaps[i]`` reds between strips i and i+1, and ``gaps[-1]``
    reds after the last one; ``len(gaps) == len(blues) + 1``.
    """
    return kernels.blue_profile(t.codes)
