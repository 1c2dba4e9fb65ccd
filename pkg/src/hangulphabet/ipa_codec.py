"""IPA tables and tokenizer.

The symbol inventories are plain tab-separated files under ``data/``::

    consonants.tsv   <hex scalar> <symbol> <manner> <place> <voicing>
    vowels.tsv       <hex scalar> <symbol> <height> <backness> <rounded 0|1>
    impossible.tsv   <manner> <place> [<voicing>|*]
    diacritics.tsv   <hex scalar> <name>

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import functools
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    DataFileError,
    LeadingCombiningMark,
    NoOfficialSymbol,
    UnknownSymbol,
    UnpairedTieBar,
)
from .phoneme_model import (
    AttestationStatus,
    ConsonantFeatures,
    Manner,
    Place,
    Voicing,
    VowelFeatures,
)

__all__ = [
    "DATA_DIR",
    "TIE_BARS",
    "SUPRASEGMENTALS",
    "Diacritic",
    "Segment",
    "IpaTable",
    "load_table",
    "default_table",
    "tokenize",
    "features_of",
    "ipa_of",
    "vowel_features_of",
]

DATA_DIR = Path(__file__).parent / "data"

TIE_BARS = frozenset("͜͡")

# Stress, length-free prosody, tone letters and tone diacritics: passed
# through untouched and never reported as unknown.
SUPRASEGMENTALS = frozenset(
    "ˈˌ.|‖‿↗↘ꜛꜜ"
    "˥˦˧˨˩"
    "̋́̄̀̏̌̂᷄᷅᷈"
)

CONSONANT = "consonant"
VOWEL = "vowel"
PASSTHROUGH = "passthrough"


@dataclass(frozen=True)
class Diacritic:
    scalar: str
    name: str

    @property
    def is_combining(self) -> bool:
        return unicodedata.combining(self.scalar) != 0

    @property
    def below(self) -> bool:
        # Canonical combining classes 202..220 attach below the base.
        return 202 <= unicodedata.combining(self.scalar) <= 220


@dataclass(frozen=True)
class Segment:
    """One unit of tokenized IPA text.

    ``value`` is a :class:`ConsonantFeatures`, a :class:`VowelFeatures` or,
    for passthrough segments, the original scalar. Members of a tie-barred
    pair share ``link``; the first member carries the tie scalar in ``tie``.
    """

    kind: str
    value: object
    source: str
    diacritics: tuple = ()
    link: int | None = None
    tie: str | None = None

    @property
    def is_passthrough(self) -> bool:
        return self.kind == PASSTHROUGH

    @property
    def known(self) -> bool:
        """False for passthrough scalars that are neither whitespace nor prosody."""
        if self.kind != PASSTHROUGH:
            return True
        return self.value.isspace() or self.value in SUPRASEGMENTALS


@dataclass(frozen=True)
class IpaTable:
    consonants: dict
    vowels: dict
    impossible: frozenset
    diacritics: dict
    source: Path | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_by_features", {f: s for s, f in self.consonants.items()})
        object.__setattr__(
            self, "_vowel_by_features", {f: s for s, f in self.vowels.items()})
        anchors = []
        for vf in self.vowels.values():
            if vf.anchor not in anchors:
                anchors.append(vf.anchor)
        object.__setattr__(self, "anchors", tuple(anchors))

    # -- lookups ---------------------------------------------------------

    def attestation_of(self, f: ConsonantFeatures) -> AttestationStatus:
        if f in self._by_features:
            return AttestationStatus.OFFICIAL
        if (f.manner, f.place, None) in self.impossible or \
                (f.manner, f.place, f.voicing) in self.impossible:
            return AttestationStatus.IMPOSSIBLE
        return AttestationStatus.UNOFFICIAL

    def features_of(self, symbol: str):
        symbol = unicodedata.normalize("NFC", symbol)
        if symbol in self.consonants:
            return self.consonants[symbol]
        if symbol in self.vowels:
            return self.vowels[symbol]
        raise UnknownSymbol(symbol)

    def vowel_features_of(self, symbol: str) -> VowelFeatures:
        try:
            return self.vowels[unicodedata.normalize("NFC", symbol)]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def ipa_of(self, features) -> str:
        if isinstance(features, VowelFeatures):
            try:
                return self._vowel_by_features[features]
            except KeyError:
                raise NoOfficialSymbol("no IPA vowel at %s" % features.name) from None
        try:
            return self._by_features[features]
        except KeyError:
            raise NoOfficialSymbol("no IPA symbol for %s (%s)" % (
                features.name, self.attestation_of(features))) from None

    def symbol_for(self, features) -> str | None:
        """IPA symbol for a feature bundle, or None when unattested."""
        if isinstance(features, VowelFeatures):
            return self._vowel_by_features.get(features)
        return self._by_features.get(features)

    def anchor_index(self, anchor) -> int:
        return self.anchors.index(tuple(anchor))

    def diacritic(self, scalar: str) -> Diacritic | None:
        return self.diacritics.get(scalar)

    # -- tokenizer -------------------------------------------------------

    def _classify(self, scalar):
        """(kind, value, diacritics) for one NFC scalar."""
        if scalar in self.consonants:
            return CONSONANT, self.consonants[scalar], ()
        if scalar in self.vowels:
            return VOWEL, self.vowels[scalar], ()
        # Precomposed letters such as U+00E3 split into base + known marks.
        decomposed = unicodedata.normalize("NFD", scalar)
        if len(decomposed) > 1:
            base, marks = decomposed[0], decomposed[1:]
            if all(m in self.diacritics for m in marks):
                dias = tuple(self.diacritics[m] for m in marks)
                if base in self.consonants:
                    return CONSONANT, self.consonants[base], dias
                if base in self.vowels:
                    return VOWEL, self.vowels[base], dias
        return PASSTHROUGH, scalar, ()

    def tokenize(self, text: str, strict: bool = False) -> list[Segment]:
        text = unicodedata.normalize("NFC", text)
        segments = []
        # Working state of the segment under construction.
        cur = None
        link_counter = 0
        pending_link = None

        def flush():
            if cur is not None:
                segments.append(Segment(**cur))

        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch in TIE_BARS:
                if cur is None or cur["kind"] == PASSTHROUGH or cur["tie"] is not None:
                    raise UnpairedTieBar("tie bar at offset %d has no base before it" % i)
                nxt = text[i + 1] if i + 1 < n else None
                if nxt is None or self._classify(nxt)[0] == PASSTHROUGH:
                    raise UnpairedTieBar("tie bar at offset %d has no base after it" % i)
                if cur["link"] is None:
                    link_counter += 1
                    cur["link"] = link_counter
                cur["tie"] = ch
                cur["source"] += ch
                pending_link = cur["link"]
                i += 1
                continue
            dia = self.diacritics.get(ch)
            if dia is not None or unicodedata.combining(ch):
                if cur is None:
                    raise LeadingCombiningMark(
                        "combining mark U+%04X at offset %d has no base" % (ord(ch), i))
                if dia is not None:
                    cur["diacritics"] += (dia,)
                    cur["source"] += ch
                    i += 1
                    continue
            flush()
            kind, value, dias = self._classify(ch)
            if kind == PASSTHROUGH and strict and not (ch.isspace() or ch in SUPRASEGMENTALS):
                raise UnknownSymbol(ch)
            cur = dict(kind=kind, value=value, source=ch, diacritics=dias,
                       link=pending_link, tie=None)
            pending_link = None
            i += 1
        flush()
        return segments


def _read_records(path: Path, min_fields: int, max_fields: int):
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise DataFileError(path, 0, "cannot read: %s" % exc.strerror) from None
    except UnicodeDecodeError:
        raise DataFileError(path, 0, "not UTF-8") from None
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = [f.strip() for f in line.rstrip("\r\n").split("\t")]
        if not min_fields <= len(fields) <= max_fields:
            raise DataFileError(path, lineno, "expected %d-%d tab-separated fields, got %d"
                                % (min_fields, max_fields, len(fields)))
        yield lineno, fields


def _scalar(path, lineno, hexcode, symbol=None):
    try:
        ch = chr(int(hexcode, 16))
    except (ValueError, OverflowError):
        raise DataFileError(path, lineno, "bad hex scalar %r" % hexcode) from None
    if symbol is not None and symbol != ch:
        raise DataFileError(path, lineno, "symbol %r does not match U+%s" % (symbol, hexcode))
    return ch


def _enum(path, lineno, cls, text):
    try:
        return cls.parse(text)
    except ValueError as exc:
        raise DataFileError(path, lineno, str(exc)) from None


def _unit(path, lineno, text, what):
    try:
        value = float(text)
    except ValueError:
        raise DataFileError(path, lineno, "%s is not a number: %r" % (what, text)) from None
    if not 0.0 <= value <= 1.0:
        raise DataFileError(path, lineno, "%s %r outside [0, 1]" % (what, value))
    return value


def load_table(data_dir=None) -> IpaTable:
    """Load and cross-check the four IPA data files."""
    data_dir = Path(data_dir) if data_dir is not None else DATA_DIR

    path = data_dir / "diacritics.tsv"
    diacritics = {}
    for lineno, (hexcode, name) in _read_records(path, 2, 2):
        ch = _scalar(path, lineno, hexcode)
        diacritics[ch] = Diacritic(ch, name)

    path = data_dir / "impossible.tsv"
    impossible = set()
    for lineno, fields in _read_records(path, 2, 3):
        manner = _enum(path, lineno, Manner, fields[0])
        place = _enum(path, lineno, Place, fields[1])
        voicing = None
        if len(fields) == 3 and fields[2] != "*":
            voicing = _enum(path, lineno, Voicing, fields[2])
        impossible.add((manner, place, voicing))

    path = data_dir / "consonants.tsv"
    consonants = {}
    seen = {}
    for lineno, (hexcode, symbol, m, p, v) in _read_records(path, 5, 5):
        ch = _scalar(path, lineno, hexcode, symbol)
        f = ConsonantFeatures(_enum(path, lineno, Manner, m), _enum(path, lineno, Place, p),
                              _enum(path, lineno, Voicing, v))
        if ch in consonants:
            raise DataFileError(path, lineno, "duplicate symbol %r" % ch)
        if f in seen:
            raise DataFileError(path, lineno, "%s already taken by %r" % (f.name, seen[f]))
        if (f.manner, f.place, None) in impossible or (f.manner, f.place, f.voicing) in impossible:
            raise DataFileError(path, lineno, "%r sits in an impossible cell" % ch)
        consonants[ch] = f
        seen[f] = ch

    path = data_dir / "vowels.tsv"
    vowels = {}
    vseen = {}
    for lineno, (hexcode, symbol, h, b, r) in _read_records(path, 5, 5):
        ch = _scalar(path, lineno, hexcode, symbol)
        if r not in ("0", "1"):
            raise DataFileError(path, lineno, "rounded must be 0 or 1, got %r" % r)
        vf = VowelFeatures(_unit(path, lineno, h, "height"), _unit(path, lineno, b, "backness"),
                           r == "1")
        if ch in vowels or ch in consonants:
            raise DataFileError(path, lineno, "duplicate symbol %r" % ch)
        if vf in vseen:
            raise DataFileError(path, lineno, "%s already taken by %r" % (vf.name, vseen[vf]))
        vowels[ch] = vf
        vseen[vf] = ch

    overlap = set(diacritics) & (set(consonants) | set(vowels))
    if overlap:
        raise DataFileError(data_dir / "diacritics.tsv", 0,
                            "diacritics shadow base symbols: %s" % sorted(overlap))
    return IpaTable(consonants, vowels, frozenset(impossible), diacritics, source=data_dir)


@functools.lru_cache(maxsize=None)
def default_table() -> IpaTable:
    return load_table()


def tokenize(text: str, strict: bool = False, table: IpaTable | None = None) -> list[Segment]:
    """Split IPA text into segments.

    Combining diacritics attach to the preceding segment; a tie bar links
    the bases on either side of it. Scalars outside the tables come back
    as passthrough segments, or raise :class:`UnknownSymbol` when
    ``strict`` (whitespace and prosodic marks are always allowed).
    """
    return (table or default_table()).tokenize(text, strict=strict)


def features_of(symbol: str, table: IpaTable | None = None):
    return (table or default_table()).features_of(symbol)


def vowel_features_of(symbol: str, table: IpaTable | None = None) -> VowelFeatures:
    return (table or default_table()).vowel_features_of(symbol)


def ipa_of(features, table: IpaTable | None = None) -> str:
    return (table or default_table()).ipa_of(features)
