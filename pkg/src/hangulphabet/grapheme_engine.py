"""Composition of feature bundles into graphemes, and the PUA layout.

Codepoint layout (frozen)::

    consonants  U+E000 + (manner * 13 + place) * 2 + voiced      U+E000..U+E0E9
    vowels      U+E400 + 2 * anchor_index + rounded

``anchor_index`` counts distinct (height, backness) pairs in vowels.tsv
row order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CoordinateOutOfRange,
    IndexOutOfRange,
    NotEncodable,
    UnassignedCodepoint,
)
from .ipa_codec import CONSONANT, VOWEL, IpaTable, Segment, default_table
from .phoneme_model import ConsonantFeatures, Manner, Place, Voicing, VowelFeatures

__all__ = [
    "CONSONANT_BASE",
    "VOWEL_BASE",
    "ConsonantGrapheme",
    "VowelGrapheme",
    "Passthrough",
    "GraphemeUnit",
    "compose",
    "decompose",
    "compose_vowel",
    "compose_segment",
    "compose_segments",
    "codepoint_of",
    "grapheme_of_codepoint",
    "canonical_name",
]

CONSONANT_BASE = 0xE000
VOWEL_BASE = 0xE400
N_CONSONANT_CODES = len(Manner) * len(Place) * len(Voicing)

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class ConsonantGrapheme:
    top_radical: int
    bottom_radical: int
    voicing_bar: bool

    def __post_init__(self):
        if not 0 <= self.top_radical < len(Manner):
            raise IndexOutOfRange("manner radical %r outside 0..%d"
                                  % (self.top_radical, len(Manner) - 1))
        if not 0 <= self.bottom_radical < len(Place):
            raise IndexOutOfRange("place radical %r outside 0..%d"
                                  % (self.bottom_radical, len(Place) - 1))


@dataclass(frozen=True)
class VowelGrapheme:
    anchor: tuple
    rounding_side: str

    def __post_init__(self):
        h, b = (float(c) for c in self.anchor)
        if not (0.0 <= h <= 1.0 and 0.0 <= b <= 1.0):
            raise CoordinateOutOfRange("vowel anchor %r outside [0, 1]^2" % (self.anchor,))
        if self.rounding_side not in (LEFT, RIGHT):
            raise ValueError("rounding_side must be 'left' or 'right'")
        object.__setattr__(self, "anchor", (h, b))

    @property
    def rounded(self) -> bool:
        return self.rounding_side == RIGHT


@dataclass(frozen=True)
class Passthrough:
    scalar: str


@dataclass(frozen=True)
class GraphemeUnit:
    """A grapheme plus the marks it carries in running text."""

    glyph: object
    diacritics: tuple = ()
    tie_link: int | None = None
    tie: str | None = None


def compose(f: ConsonantFeatures) -> ConsonantGrapheme:
    # Total over the grid: unofficial and impossible cells compose too.
    return ConsonantGrapheme(int(f.manner), int(f.place), f.voicing is Voicing.VOICED)


def decompose(g: ConsonantGrapheme) -> ConsonantFeatures:
    if not (0 <= g.top_radical < len(Manner) and 0 <= g.bottom_radical < len(Place)):
        raise IndexOutOfRange("radical indices (%r, %r) out of range"
                              % (g.top_radical, g.bottom_radical))
    return ConsonantFeatures(Manner(g.top_radical), Place(g.bottom_radical),
                             Voicing.VOICED if g.voicing_bar else Voicing.VOICELESS)


def compose_vowel(v: VowelFeatures) -> VowelGrapheme:
    return VowelGrapheme((v.height, v.backness), RIGHT if v.rounded else LEFT)


def decompose_vowel(g: VowelGrapheme) -> VowelFeatures:
    return VowelFeatures(g.anchor[0], g.anchor[1], g.rounded)


def compose_segment(segment: Segment) -> GraphemeUnit:
    if segment.kind == CONSONANT:
        glyph = compose(segment.value)
    elif segment.kind == VOWEL:
        glyph = compose_vowel(segment.value)
    else:
        glyph = Passthrough(segment.value)
    return GraphemeUnit(glyph, segment.diacritics, segment.link, segment.tie)


def compose_segments(segments) -> list[GraphemeUnit]:
    return [compose_segment(s) for s in segments]


def _glyph(g):
    return g.glyph if isinstance(g, GraphemeUnit) else g


def codepoint_of(g, table: IpaTable | None = None) -> int:
    """Private-use codepoint of a consonant or anchored vowel grapheme."""
    g = _glyph(g)
    if isinstance(g, ConsonantGrapheme):
        return CONSONANT_BASE + (g.top_radical * len(Place) + g.bottom_radical) * 2 + int(g.voicing_bar)
    if isinstance(g, VowelGrapheme):
        table = table or default_table()
        try:
            index = table.anchor_index(g.anchor)
        except ValueError:
            raise NotEncodable("vowel anchor %r is not a named anchor" % (g.anchor,)) from None
        return VOWEL_BASE + 2 * index + int(g.rounded)
    raise NotEncodable("passthrough %r has no codepoint" % (getattr(g, "scalar", g),))


def grapheme_of_codepoint(cp, table: IpaTable | None = None):
    """Inverse of :func:`codepoint_of`. Accepts an int or a one-char string."""
    if isinstance(cp, str):
        if len(cp) != 1:
            raise UnassignedCodepoint("expected a single scalar, got %r" % cp)
        cp = ord(cp)
    offset = cp - CONSONANT_BASE
    if 0 <= offset < N_CONSONANT_CODES:
        cell, bar = divmod(offset, 2)
        top, bottom = divmod(cell, len(Place))
        return ConsonantGrapheme(top, bottom, bool(bar))
    table = table or default_table()
    offset = cp - VOWEL_BASE
    if 0 <= offset < 2 * len(table.anchors):
        index, rounded = divmod(offset, 2)
        return VowelGrapheme(table.anchors[index], RIGHT if rounded else LEFT)
    raise UnassignedCodepoint("U+%04X is not an assigned Hangulphabet codepoint" % cp)


def is_assigned(cp: int, table: IpaTable | None = None) -> bool:
    try:
        grapheme_of_codepoint(cp, table)
    except UnassignedCodepoint:
        return False
    return True


def canonical_name(g) -> str:
    """ASCII name such as ``PLO.BLB.VLS``; passthrough renders as ``<U+0021>``."""
    g = _glyph(g)
    if isinstance(g, ConsonantGrapheme):
        return decompose(g).name
    if isinstance(g, VowelGrapheme):
        return decompose_vowel(g).name
    return "<U+%04X>" % ord(g.scalar)
