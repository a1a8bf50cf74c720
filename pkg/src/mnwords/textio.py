"""Text formats, JSON-lines records, and renderers.

Words
    canonical ``m=8:7,7,9,3,2,9,9,1,9,9,0,0``; the compact digit string
    ``779329919900`` is accepted on input when ``m`` is supplied separately
    and ``m + 1 <= 9``.
Tilings
    space-separated tokens, ``R`` for a red square and ``B<len>`` for a blue
    strip, e.g. ``R B1 B2 R``.  The empty tiling (m = n = 0) is ``""``.
JSON lines
    ``{"m": 2, "letters": [2, 3, 1]}`` and
    ``{"m": 2, "tiles": [["B", 1], ["R", 1], ["B", 2], ["R", 1]]}``.
"""

from __future__ import annotations

import json
import re

from .errors import EmptyBlueStrip, ParseError, RedNotSquare
from .tilings import TwoTonedTiling, validate_tiling
from .words import MNWord, validate_word

__all__ = [
    "parse_word",
    "format_word",
    "parse_tiling",
    "format_tiling",
    "to_record",
    "from_record",
    "dumps_record",
    "loads_record",
    "render_ascii",
    "render_svg",
    "RED_FILL",
    "BLUE_FILL",
]

RED_FILL = "#f2b8b8"
BLUE_FILL = "#b8c4f2"

_CANONICAL = re.compile(r"m=(\d+):")
_LETTER = re.compile(r"\s*(\d+)\s*")
_TOKEN = re.compile(r"\S+")
_TILE = re.compile(r"([RB])(\d+)?")


def parse_word(text: str, m: int | None = None) -> MNWord:
    """Parse canonical or compact word text.

    >>> parse_word("m=2:2,3,1").letters
    (2, 3, 1)
    >>> parse_word("779329919900", m=8).letters[:4]
    (7, 7, 9, 3)
    """
    lead = len(text) - len(text.lstrip())
    body = text.strip()
    head = _CANONICAL.match(body)
    if head:
        declared = int(head.group(1))
        if m is not None and m != declared:
            raise ParseError(f"text declares m={declared} but m={m} was given", lead + 1)
        m = declared
        start = head.end()
        rest = body[start:]
        letters = []
        if rest.strip():
            offset = start
            for item in rest.split(","):
                match = _LETTER.fullmatch(item)
                if not match:
                    raise ParseError(f"expected a decimal letter, got {item!r}", lead + offset + 1)
                letters.append(int(match.group(1)))
                offset += len(item) + 1
        return validate_word(m, letters)

    if body.startswith("m="):
        raise ParseError("malformed header, expected 'm=<m>:'", lead + 1)
    if m is None:
        raise ParseError("compact word text needs m supplied separately")
    if m + 1 > 9:
        raise ParseError(
            f"compact digit form is ambiguous for m={m}; use 'm={m}:a,b,...'"
        )
    for i, ch in enumerate(body):
        if not "0" <= ch <= "9":
            raise ParseError(f"expected a digit, got {ch!r}", lead + i + 1)
    return validate_word(m, [int(ch) for ch in body])


def format_word(w: MNWord) -> str:
    return f"m={w.m}:" + ",".join(map(str, w.letters))


def parse_tiling(text: str, m: int | None = None) -> TwoTonedTiling:
    """Parse ``R``/``B<len>`` tokens; ``m`` defaults to the number of ``R``s."""
    tiles = []
    for index, match in enumerate(_TOKEN.finditer(text), 1):
        tok = _TILE.fullmatch(match.group())
        if not tok:
            raise ParseError(f"bad tile token {match.group()!r}", match.start() + 1)
        color, digits = tok.groups()
        length = int(digits) if digits is not None else 1
        if color == "R" and length != 1:
            raise RedNotSquare(index, length)
        if color == "B":
            if digits is None:
                raise ParseError("blue strip needs a length, e.g. 'B2'", match.start() + 1)
            if length < 1:
                raise EmptyBlueStrip(index)
        tiles.append((color, length))
    if m is None:
        m = sum(1 for color, _ in tiles if color == "R")
    return validate_tiling(m, tiles)


def format_tiling(t: TwoTonedTiling) -> str:
    return " ".join("R" if c == 0 else f"B{c}" for c in t.codes)


def to_record(obj: MNWord | TwoTonedTiling) -> dict:
    if isinstance(obj, MNWord):
        return {"m": obj.m, "letters": list(obj.letters)}
    if isinstance(obj, TwoTonedTiling):
        return {
            "m": obj.m,
            "tiles": [["R", 1] if c == 0 else ["B", c] for c in obj.codes],
        }
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def from_record(record: dict) -> MNWord | TwoTonedTiling:
    try:
        m = record["m"]
        if "letters" in record:
            return validate_word(m, record["letters"])
        if "tiles" in record:
            return validate_tiling(m, [tuple(t) for t in record["tiles"]])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed record: {exc}") from exc
    raise ParseError("record has neither 'letters' nor 'tiles'")


def dumps_record(obj: MNWord | TwoTonedTiling) -> str:
    return json.dumps(to_record(obj), separators=(",", ":"))


def loads_record(line: str) -> MNWord | TwoTonedTiling:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos + 1) from exc
    if not isinstance(record, dict):
        raise ParseError("record must be a JSON object")
    return from_record(record)


def render_ascii(t: TwoTonedTiling) -> str:
    """One line, ``[r]`` per red square and ``[bb..b]`` per blue strip."""
    return "".join("[r]" if c == 0 else "[" + "b" * c + "]" for c in t.codes)


def render_svg(t: TwoTonedTiling, unit: int = 20) -> str:
    """SVG drawing with one outlined rectangle per tile.

    Output depends only on the tiling and ``unit``, byte for byte.
    """
    if isinstance(unit, bool) or not isinstance(unit, int) or unit < 1:
        raise ValueError(f"unit must be a positive integer, got {unit!r}")
    width = t.size * unit
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width + 2}" height="{unit + 2}" viewBox="-1 -1 {width + 2} {unit + 2}">',
    ]
    x = 0
    for c in t.codes:
        cells = 1 if c == 0 else c
        fill = RED_FILL if c == 0 else BLUE_FILL
        lines.append(
            f'  <rect x="{x * unit}" y="0" width="{cells * unit}" height="{unit}" '
            f'fill="{fill}" stroke="black" stroke-width="1"/>'
        )
        x += cells
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
