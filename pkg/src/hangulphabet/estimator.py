"""IPA <-> Hangulphabet transliteration with a scikit-learn transformer API."""

from __future__ import annotations

import unicodedata
import warnings

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_option, check_text_input, is_code_stream, parse_code
from .errors import NoOfficialSymbol
from .grapheme_engine import (
    ConsonantGrapheme,
    canonical_name,
    codepoint_of,
    compose_segment,
    decompose,
    decompose_vowel,
    grapheme_of_codepoint,
)
from .ipa_codec import IpaTable, Segment, default_table, load_table

__all__ = [
    "OUTPUT_FORMATS",
    "UnknownSymbolWarning",
    "segment_scalars",
    "encode_segments",
    "decode_text",
    "HangulphabetTransliterator",
]

OUTPUT_FORMATS = ("text", "codes", "names")

PUA_FIRST, PUA_LAST = 0xE000, 0xF8FF


class UnknownSymbolWarning(UserWarning):
    pass


def segment_scalars(segment: Segment, table: IpaTable) -> list[int]:
    """Output scalars for one segment: the grapheme codepoint (or the
    passthrough scalar) followed by its diacritics and tie bar, unchanged."""
    unit = compose_segment(segment)
    if segment.is_passthrough:
        head = [ord(segment.value)]
    else:
        head = [codepoint_of(unit, table)]
    tail = [ord(d.scalar) for d in segment.diacritics]
    if segment.tie is not None:
        tail.append(ord(segment.tie))
    return head + tail


def segment_name(segment: Segment) -> str:
    parts = [canonical_name(compose_segment(segment))]
    parts.extend(d.name.replace(" ", "-") for d in segment.diacritics)
    if segment.tie is not None:
        parts.append("tie")
    return "+".join(parts)


def encode_segments(segments, table: IpaTable, output: str = "text") -> str:
    if output == "names":
        return " ".join(segment_name(s) for s in segments)
    scalars = [cp for s in segments for cp in segment_scalars(s, table)]
    if output == "codes":
        return " ".join("U+%04X" % cp for cp in scalars)
    return "".join(chr(cp) for cp in scalars)


def _decode_scalar(cp: int, table: IpaTable) -> str:
    if not PUA_FIRST <= cp <= PUA_LAST:
        return chr(cp)
    g = grapheme_of_codepoint(cp, table)
    features = decompose(g) if isinstance(g, ConsonantGrapheme) else decompose_vowel(g)
    try:
        return table.ipa_of(features)
    except NoOfficialSymbol:
        return "[%s]" % features.name


def decode_text(text: str, table: IpaTable | None = None) -> str:
    """Hangulphabet text (raw PUA characters or ``U+XXXX`` codes) to IPA.

    Graphemes without an IPA symbol come back as ``[NAME]``. Anything
    outside the private use area is copied through.
    """
    table = table or default_table()
    if is_code_stream(text):
        scalars = [parse_code(t) for t in text.split()]
    else:
        scalars = [ord(ch) for ch in text]
    out = "".join(_decode_scalar(cp, table) for cp in scalars)
    return unicodedata.normalize("NFC", out)


class HangulphabetTransliterator(TransformerMixin, BaseEstimator):
    """Transliterate IPA strings to Hangulphabet and back.

    Parameters
    ----------
    data_dir : str or Path, optional
        Directory holding consonants.tsv, vowels.tsv, impossible.tsv and
        diacritics.tsv. Defaults to the tables shipped with the package.
    strict : bool, default False
        Raise :class:`~hangulphabet.errors.UnknownSymbol` on symbols that
        are not in the tables instead of passing them through with an
        :class:`UnknownSymbolWarning`.
    output : {"text", "codes", "names"}, default "text"
        ``text`` gives private-use characters, ``codes`` space-separated
        ``U+XXXX`` tokens and ``names`` canonical names such as
        ``PLO.BLB.VLS``. Only ``text`` and ``codes`` are invertible.

    Attributes
    ----------
    table_ : IpaTable
        The loaded symbol tables.
    n_consonants_, n_vowels_ : int
        Number of symbols in the loaded tables.

    Examples
    --------
    >>> from hangulphabet import HangulphabetTransliterator
    >>> tr = HangulphabetTransliterator(output="codes").fit()
    >>> tr.transform(["pb"])
    ['U+E01A U+E01B']
    >>> tr.inverse_transform(["U+E01A U+E01B"])
    ['pb']
    """

    def __init__(self, data_dir=None, strict=False, output="text"):
        self.data_dir = data_dir
        self.strict = strict
        self.output = output

    def fit(self, X=None, y=None):
        """Load the symbol tables. ``X`` and ``y`` are ignored."""
        check_option("output", self.output, OUTPUT_FORMATS)
        self.table_ = default_table() if self.data_dir is None else load_table(self.data_dir)
        self.n_consonants_ = len(self.table_.consonants)
        self.n_vowels_ = len(self.table_.vowels)
        return self

    def tokenize(self, text: str) -> list[Segment]:
        check_is_fitted(self, "table_")
        segments = self.table_.tokenize(text, strict=self.strict)
        for seg in segments:
            if not seg.known:
                warnings.warn("passing through unknown symbol %r (U+%04X)"
                              % (seg.value, ord(seg.value)), UnknownSymbolWarning, stacklevel=3)
        return segments

    def transform(self, X):
        check_is_fitted(self, "table_")
        return [encode_segments(self.tokenize(text), self.table_, self.output)
                for text in check_text_input(X)]

    def inverse_transform(self, X):
        check_is_fitted(self, "table_")
        if self.output == "names":
            raise ValueError("names output cannot be inverted; use 'text' or 'codes'")
        return [decode_text(text, self.table_) for text in check_text_input(X)]

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        tags.input_tags.string = True
        return tags

