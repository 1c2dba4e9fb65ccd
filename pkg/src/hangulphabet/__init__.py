"""Hangulphabet: a featural alphabet for IPA transcription.

Consonant graphemes stack a manner radical over a place radical, with a
bar through the place radical for voicing; vowels are excerpts of a
tilted vowel trapezoid with a rounding tick on the left (unrounded) or
right (rounded).
"""

__version__ = "0.1.0"

from .errors import HangulphabetError  # noqa: E402
from .estimator import HangulphabetTransliterator, decode_text  # noqa: E402
from .glyph_renderer import GlyphRenderer, RenderStyle, load_geometry  # noqa: E402
from .grapheme_engine import (  # noqa: E402
    ConsonantGrapheme,
    GraphemeUnit,
    VowelGrapheme,
    codepoint_of,
    compose,
    compose_vowel,
    decompose,
    grapheme_of_codepoint,
)
from .ipa_codec import features_of, ipa_of, load_table, tokenize, vowel_features_of  # noqa: E402
from .phoneme_model import (  # noqa: E402
    AttestationStatus,
    ConsonantFeatures,
    Manner,
    Place,
    Voicing,
    VowelFeatures,
    attestation_of,
    grid_dimensions,
)

__all__ = [
    "HangulphabetError",
    "HangulphabetTransliterator",
    "decode_text",
    "GlyphRenderer",
    "RenderStyle",
    "load_geometry",
    "ConsonantGrapheme",
    "GraphemeUnit",
    "VowelGrapheme",
    "codepoint_of",
    "compose",
    "compose_vowel",
    "decompose",
    "grapheme_of_codepoint",
    "features_of",
    "ipa_of",
    "load_table",
    "tokenize",
    "vowel_features_of",
    "AttestationStatus",
    "ConsonantFeatures",
    "Manner",
    "Place",
    "Voicing",
    "VowelFeatures",
    "attestation_of",
    "grid_dimensions",
]
