"""(m,n)-words, two-toned tilings, and an explicit bijection between them."""

from ._backend import BACKEND
from .bijection import xi, xi_inverse
from .counting import (
    IntSeries,
    binomial,
    closed_form_count,
    gf_coefficient,
    series_geometric,
    series_mul,
    series_pow,
)
from .errors import (
    EmptyBlueStrip,
    InvalidDecomposition,
    LetterOutOfRange,
    MNError,
    ParseError,
    RedCountMismatch,
    RedNotSquare,
    TruncationTooShort,
    ViolatesMN1,
    ViolatesMN2,
)
from .textio import (
    format_tiling,
    format_word,
    parse_tiling,
    parse_word,
    render_ascii,
    render_svg,
)
from .tilings import (
    Color,
    Tile,
    TwoTonedTiling,
    blue_profile,
    enumerate_tilings,
    validate_tiling,
)
from .words import (
    MNWord,
    WordDecomposition,
    decompose,
    enumerate_words,
    recompose,
    validate_word,
)

__version__ = "0.1.0"
