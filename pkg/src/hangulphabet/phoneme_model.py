"""Articulatory feature vocabulary.

Consonants live on a manner x place grid (9 rows, 13 columns) with a
voicing flag; vowels live on a normalized height/backness plane with a
rounding flag. The enum index order is a compatibility contract: the
private-use codepoint layout is computed from it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import CoordinateOutOfRange

__all__ = [
    "Manner",
    "Place",
    "MacroClass",
    "Voicing",
    "ConsonantFeatures",
    "VowelFeatures",
    "AttestationStatus",
    "attestation_of",
    "grid_dimensions",
    "all_consonant_features",
]


class MacroClass(enum.Enum):
    LABIAL = "Labial"
    CORONAL = "Coronal"
    DORSAL = "Dorsal"
    RADICAL = "Radical"
    LARYNGEAL = "Laryngeal"


class _Coded(enum.IntEnum):
    """IntEnum carrying a three-letter code and a display label."""

    def __new__(cls, value, code, label):
        obj = int.__new__(cls, value)
        obj._value_ = value
        obj.code = code
        obj.label = label
        return obj

    @classmethod
    def parse(cls, text):
        """Look a member up by enum name, label or three-letter code."""
        key = text.strip().replace("-", "").replace(" ", "").replace(",", "").lower()
        for member in cls:
            if key in (member.name.lower(), member.code.lower(),
                       member.label.replace("-", "").replace(" ", "").replace(",", "").lower()):
                return member
        raise ValueError("not a %s: %r" % (cls.__name__, text))


class Manner(_Coded):
    # Table row order: nasal first, unlike the IPA chart.
    NASAL = 0, "NAS", "Nasal"
    PLOSIVE = 1, "PLO", "Plosive"
    FRICATIVE = 2, "FRI", "Fricative"
    APPROXIMANT = 3, "APR", "Approximant"
    TAP_FLAP = 4, "TAP", "Tap, flap"
    TRILL = 5, "TRL", "Trill"
    LATERAL_FRICATIVE = 6, "LFR", "Lateral fricative"
    LATERAL_APPROXIMANT = 7, "LAP", "Lateral approximant"
    LATERAL_FLAP = 8, "LFL", "Lateral flap"


class Place(_Coded):
    BILABIAL = 0, "BLB", "Bilabial"
    LABIODENTAL = 1, "LBD", "Labio-dental"
    DENTAL = 2, "DEN", "Dental"
    ALVEOLAR = 3, "ALV", "Alveolar"
    PALATO_ALVEOLAR = 4, "PAV", "Palato-alveolar"
    RETROFLEX = 5, "RFX", "Retroflex"
    ALVEOLO_PALATAL = 6, "AVP", "Alveolo-palatal"
    PALATAL = 7, "PAL", "Palatal"
    VELAR = 8, "VEL", "Velar"
    UVULAR = 9, "UVL", "Uvular"
    PHARYNGEAL = 10, "PHR", "Pharyngeal"
    EPIGLOTTAL = 11, "EPG", "Epiglottal"
    GLOTTAL = 12, "GLT", "Glottal"

    @property
    def macro_class(self) -> MacroClass:
        return _MACRO[self]


_MACRO = {
    Place.BILABIAL: MacroClass.LABIAL,
    Place.LABIODENTAL: MacroClass.LABIAL,
    Place.DENTAL: MacroClass.CORONAL,
    Place.ALVEOLAR: MacroClass.CORONAL,
    Place.PALATO_ALVEOLAR: MacroClass.CORONAL,
    Place.RETROFLEX: MacroClass.CORONAL,
    Place.ALVEOLO_PALATAL: MacroClass.CORONAL,
    Place.PALATAL: MacroClass.DORSAL,
    Place.VELAR: MacroClass.DORSAL,
    Place.UVULAR: MacroClass.DORSAL,
    Place.PHARYNGEAL: MacroClass.RADICAL,
    Place.EPIGLOTTAL: MacroClass.LARYNGEAL,
    Place.GLOTTAL: MacroClass.LARYNGEAL,
}


class Voicing(_Coded):
    VOICELESS = 0, "VLS", "Voiceless"
    VOICED = 1, "VCD", "Voiced"


class AttestationStatus(enum.Enum):
    OFFICIAL = "Official"
    UNOFFICIAL = "Unofficial"
    IMPOSSIBLE = "Impossible"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConsonantFeatures:
    manner: Manner
    place: Place
    voicing: Voicing

    def __post_init__(self):
        object.__setattr__(self, "manner", Manner(self.manner))
        object.__setattr__(self, "place", Place(self.place))
        object.__setattr__(self, "voicing", Voicing(self.voicing))

    @property
    def name(self) -> str:
        """Canonical ASCII name, e.g. ``PLO.BLB.VLS``."""
        return "%s.%s.%s" % (self.manner.code, self.place.code, self.voicing.code)

    @classmethod
    def from_name(cls, name: str) -> ConsonantFeatures:
        parts = name.strip().split(".")
        if len(parts) != 3:
            raise ValueError("not a consonant name: %r" % name)
        return cls(Manner.parse(parts[0]), Place.parse(parts[1]), Voicing.parse(parts[2]))

    def describe(self) -> str:
        return "%s %s %s" % (self.voicing.label, self.place.label, self.manner.label)


@dataclass(frozen=True)
class VowelFeatures:
    height: float
    backness: float
    rounded: bool

    def __post_init__(self):
        for field in ("height", "backness"):
            value = float(getattr(self, field))
            if not 0.0 <= value <= 1.0:
                raise CoordinateOutOfRange("%s %r outside [0, 1]" % (field, value))
            object.__setattr__(self, field, value)
        object.__setattr__(self, "rounded", bool(self.rounded))

    @property
    def anchor(self) -> tuple[float, float]:
        return (self.height, self.backness)

    @property
    def name(self) -> str:
        """Canonical ASCII name, e.g. ``VOW.H000.B100.RND`` (percent grid)."""
        return "VOW.H%03d.B%03d.%s" % (
            round(self.height * 100), round(self.backness * 100),
            "RND" if self.rounded else "UNR")

    def describe(self) -> str:
        return "height %.3f, backness %.3f, %s" % (
            self.height, self.backness, "rounded" if self.rounded else "unrounded")


def grid_dimensions() -> tuple[int, int]:
    return len(Manner), len(Place)


def all_consonant_features():
    """Every (manner, place, voicing) triple in grid order."""
    return [ConsonantFeatures(m, p, v) for m in Manner for p in Place for v in Voicing]


def attestation_of(features: ConsonantFeatures, table=None) -> AttestationStatus:
    """Classify a consonant triple against the IPA tables.

    ``table`` defaults to the shipped :class:`~hangulphabet.ipa_codec.IpaTable`.
    """
    if table is None:
        from .ipa_codec import default_table
        table = default_table()
    return table.attestation_of(features)
