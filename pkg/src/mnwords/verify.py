"""Exhaustive cross-checks over a grid of (m, n)."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bijection import xi, xi_inverse
from .counting import closed_form_count, gf_coefficient
from .errors import MNError
from .tilings import TwoTonedTiling, enumerate_tilings
from .textio import format_tiling, format_word
from .words import enumerate_words, validate_word


@dataclass(frozen=True)
class GridRow:
    m: int
    n: int
    enum_word_count: int
    enum_tiling_count: int
    closed_form: int
    gf_coeff: int
    roundtrip_ok: bool
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.roundtrip_ok and (
            self.enum_word_count == self.enum_tiling_count == self.closed_form == self.gf_coeff
        )


@dataclass
class VerificationReport:
    grid: list[GridRow] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(row.ok for row in self.grid)

    def first_failure(self) -> GridRow | None:
        return next((row for row in self.grid if not row.ok), None)


def _is_tiling(t, m, n):
    # Rebuild through the validating constructor; kernel output is trusted.
    try:
        TwoTonedTiling(t.m, t.codes)
    except MNError:
        return False
    return t.m == m and t.n == n and all(c >= 0 for c in t.codes)


def _is_word(w, m, n):
    try:
        validate_word(w.m, w.letters)
    except MNError:
        return False
    return w.m == m and w.n == n


def check_cell(m: int, n: int) -> GridRow:
    """Count W(m, n) and T(m, n) every way and run both roundtrips."""
    counterexample = None
    images = set()
    n_words = 0
    for w in enumerate_words(m, n):
        n_words += 1
        t = xi(w)
        if counterexample is None:
            if not _is_tiling(t, m, n):
                counterexample = f"xi({format_word(w)}) = {format_tiling(t)!r} is not in T({m},{n})"
            elif xi_inverse(t) != w:
                counterexample = f"xi_inverse(xi({format_word(w)})) = {format_word(xi_inverse(t))}"
        images.add(t)

    n_tilings = 0
    for t in enumerate_tilings(m, n):
        n_tilings += 1
        if counterexample is None:
            w = xi_inverse(t)
            if not _is_word(w, m, n):
                counterexample = f"xi_inverse({format_tiling(t)!r}) = {w.letters} is not in W({m},{n})"
            elif xi(w) != t:
                counterexample = f"xi(xi_inverse({format_tiling(t)!r})) = {format_tiling(xi(w))!r}"
            elif t not in images:
                counterexample = f"tiling {format_tiling(t)!r} is not hit by xi"

    if counterexample is None and len(images) != n_words:
        counterexample = f"xi is not injective on W({m},{n})"

    return GridRow(
        m,
        n,
        n_words,
        n_tilings,
        closed_form_count(m, n),
        gf_coefficient(m, n),
        counterexample is None,
        counterexample,
    )


def _cell(args):
    return check_cell(*args)


def verify_grid(max_m: int, max_n: int, jobs: int = 1) -> VerificationReport:
    """Check every cell with ``0 <= m <= max_m`` and ``0 <= n <= max_n``.

    Rows come back ordered by (m, n) regardless of ``jobs``.
    """
    cells = [(m, n) for m in range(max_m + 1) for n in range(max_n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_cell, cells))
    else:
        rows = [check_cell(m, n) for m, n in cells]
    return VerificationReport(rows)
