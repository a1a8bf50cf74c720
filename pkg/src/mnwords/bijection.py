"""The bijection between W(m, n) and T(m, n).

``xi`` reads a word as topless letters ``w_1 >= ... >= w_k`` separated by
runs of ``m+1``.  Each topless letter opens a blue strip one cell longer than
the run after it, and the drop ``w_i - w_{i+1}`` (with ``w_0 = m`` and
``w_{k+1} = 0``) becomes that many red squares.  ``xi_inverse`` reads the red
counts back off the tiling: ``w_i = m - (r_0 + ... + r_{i-1})``.

The empty word and the all-red tiling are paired with each other.
"""

from __future__ import annotations

from ._backend import kernels
from .tilings import TwoTonedTiling
from .words import MNWord

__all__ = ["xi", "xi_inverse"]


def xi(w: MNWord) -> TwoTonedTiling:
    """Map an (m, n)-word to its two-toned tiling of length m+n.

    >>> from mnwords.words import validate_word
    >>> xi(validate_word(2, [2, 3, 1]))
    TwoTonedTiling(m=2, [B2 R B1 R])
    """
    return TwoTonedTiling._trusted(w.m, kernels.word_to_tiles(w.m, w.letters))


def xi_inverse(t: TwoTonedTiling) -> MNWord:
    """Map a two-toned tiling back to its (m, n)-word."""
    return MNWord._trusted(t.m, kernels.tiles_to_word(t.m, t.codes))
