"""Command-line interface.

    hangulphabet encode [TEXT] [--format names|codes|svg|tsv|pua] [--strict]
    hangulphabet decode [TEXT]
    hangulphabet inspect SYMBOL
    hangulphabet chart consonants|vowels [--output FILE]
    hangulphabet fontmap [--output FILE]

TEXT defaults to standard input. Exit status: 0 success, 2 input error,
3 data or geometry error.
"""

from __future__ import annotations

import argparse
import sys
import unicodedata
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .errors import DataError, HangulphabetError, InputError, UnknownSymbol
from .estimator import decode_text, encode_segments, segment_scalars
from .glyph_renderer import GlyphRenderer, default_geometry, load_geometry
from .grapheme_engine import (
    canonical_name,
    codepoint_of,
    compose,
    compose_segments,
    compose_vowel,
)
from .ipa_codec import default_table, load_table
from .phoneme_model import AttestationStatus, ConsonantFeatures, VowelFeatures

ENCODE_FORMATS = ("names", "codes", "svg", "tsv", "pua")


@dataclass
class RunConfig:
    strict: bool = False
    format: str | None = None
    data_dir: Path | None = None
    geometry: Path | None = None
    tilt: float | None = None
    output: Path | None = None

    def table(self):
        return default_table() if self.data_dir is None else load_table(self.data_dir)

    def renderer(self, table):
        geometry = default_geometry() if self.geometry is None else load_geometry(self.geometry)
        if self.tilt is not None:
            try:
                geometry = geometry.with_tilt(self.tilt)
            except ValueError as exc:
                raise InputError(str(exc)) from None
        return GlyphRenderer(geometry, table=table)


def _read_text(arg):
    if arg is not None:
        return arg
    text = sys.stdin.read()
    return text[:-1] if text.endswith("\n") else text


def _emit(config, text):
    if not text.endswith("\n"):
        text += "\n"
    if config.output is not None:
        config.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _warn(message):
    print("warning: %s" % message, file=sys.stderr)


def cmd_encode(text, config: RunConfig):
    fmt = config.format or "names"
    if fmt not in ENCODE_FORMATS:
        raise InputError("encode: unsupported format %r (choose from %s)"
                         % (fmt, ", ".join(ENCODE_FORMATS)))
    table = config.table()
    renderer = config.renderer(table) if fmt == "svg" else None
    segments = table.tokenize(text, strict=config.strict)
    for seg in segments:
        if not seg.known:
            _warn("passing through unknown symbol %r (U+%04X)" % (seg.value, ord(seg.value)))
    if fmt == "svg":
        return renderer.render_text(compose_segments(segments))
    if fmt == "tsv":
        lines = []
        for seg, unit in zip(segments, compose_segments(segments)):
            codes = " ".join("U+%04X" % cp for cp in segment_scalars(seg, table))
            lines.append("%s\t%s\t%s" % (seg.source.replace("\t", "\\t").replace("\n", "\\n"),
                                         codes, canonical_name(unit)))
        return "\n".join(lines)
    return encode_segments(segments, table, "text" if fmt == "pua" else fmt)


def cmd_decode(text, config: RunConfig):
    return decode_text(text, config.table())


def _lookup(symbol, table):
    """(source symbol or None, features) for an IPA symbol or canonical name."""
    if symbol.upper().startswith("VOW."):
        for vf in table.vowels.values():
            for rounded in (False, True):
                cand = VowelFeatures(vf.height, vf.backness, rounded)
                if cand.name == symbol.upper():
                    return table.symbol_for(cand), cand
        raise UnknownSymbol(symbol, "unknown vowel name %r" % symbol)
    if symbol.count(".") == 2:
        try:
            f = ConsonantFeatures.from_name(symbol)
        except ValueError:
            raise UnknownSymbol(symbol, "unknown grapheme name %r" % symbol) from None
        return table.symbol_for(f), f
    symbol = unicodedata.normalize("NFC", symbol)
    return symbol, table.features_of(symbol)


def cmd_inspect(symbol, config: RunConfig):
    table = config.table()
    source, features = _lookup(symbol, table)
    lines = []
    if source is not None:
        lines.append("symbol:      %s (U+%04X)" % (source, ord(source)))
    else:
        lines.append("symbol:      (no IPA symbol)")
    if isinstance(features, ConsonantFeatures):
        g = compose(features)
        status = table.attestation_of(features)
        lines += [
            "kind:        consonant",
            "manner:      %s (top radical %d)" % (features.manner.label, g.top_radical),
            "place:       %s, %s (bottom radical %d)" % (
                features.place.label, features.place.macro_class.value, g.bottom_radical),
            "voicing:     %s (voicing bar %s)" % (features.voicing.label,
                                                  "yes" if g.voicing_bar else "no"),
        ]
    else:
        g = compose_vowel(features)
        status = AttestationStatus.OFFICIAL if source is not None else AttestationStatus.UNOFFICIAL
        lines += [
            "kind:        vowel",
            "height:      %.3f (0 close, 1 open)" % features.height,
            "backness:    %.3f (0 front, 1 back)" % features.backness,
            "rounded:     %s (rounding line on the %s)" % (
                "yes" if features.rounded else "no", g.rounding_side),
        ]
    lines += [
        "attestation: %s" % status.value,
        "codepoint:   U+%04X" % codepoint_of(g, table),
        "name:        %s" % canonical_name(g),
    ]
    return "\n".join(lines)


def cmd_chart(which, config: RunConfig):
    table = config.table()
    renderer = config.renderer(table)
    if which == "consonants":
        return renderer.render_consonant_chart()
    return renderer.render_vowel_chart()


def fontmap_rows(table):
    rows = []
    for symbol, f in table.consonants.items():
        g = compose(f)
        rows.append((codepoint_of(g, table), symbol, canonical_name(g)))
    for symbol, vf in table.vowels.items():
        g = compose_vowel(vf)
        rows.append((codepoint_of(g, table), symbol, canonical_name(g)))
    rows.sort()
    return rows


def cmd_fontmap(config: RunConfig):
    table = config.table()
    return "\n".join("%04X\t%04X\t%s" % (ord(symbol), cp, name)
                     for cp, symbol, name in fontmap_rows(table))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--data-dir", type=Path, default=argparse.SUPPRESS,
                        help="directory with consonants/vowels/impossible/diacritics .tsv")
    common.add_argument("--geometry", type=Path, default=argparse.SUPPRESS,
                        help="radical geometry JSON file")
    common.add_argument("--tilt", type=float, default=argparse.SUPPRESS,
                        help="vowel trapezoid tilt in degrees (non-zero)")
    common.add_argument("--output", "-o", type=Path, default=argparse.SUPPRESS,
                        help="write to FILE instead of standard output")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="strict", action="store_true", default=argparse.SUPPRESS,
                      help="fail on the first unknown symbol")
    mode.add_argument("--lenient", dest="strict", action="store_false",
                      default=argparse.SUPPRESS,
                      help="pass unknown symbols through with a warning (default)")

    parser = argparse.ArgumentParser(
        prog="hangulphabet", parents=[common],
        description="Transliterate IPA to the Hangulphabet and render its glyphs.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="IPA text to Hangulphabet")
    p.add_argument("text", nargs="?", help="IPA text (default: standard input)")
    p.add_argument("--format", "-f", choices=ENCODE_FORMATS, default=argparse.SUPPRESS)

    p = sub.add_parser("decode", parents=[common], help="Hangulphabet codes or text to IPA")
    p.add_argument("text", nargs="?", help="U+ codes or PUA text (default: standard input)")

    p = sub.add_parser("inspect", parents=[common], help="describe one symbol or grapheme name")
    p.add_argument("symbol")

    p = sub.add_parser("chart", parents=[common], help="render a chart as SVG")
    p.add_argument("which", choices=("consonants", "vowels"))

    sub.add_parser("fontmap", parents=[common], help="IPA to PUA mapping as TSV")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        strict=getattr(args, "strict", False),
        format=getattr(args, "format", None),
        data_dir=getattr(args, "data_dir", None),
        geometry=getattr(args, "geometry", None),
        tilt=getattr(args, "tilt", None),
        output=getattr(args, "output", None),
    )
    try:
        if args.command == "encode":
            result = cmd_encode(_read_text(args.text), config)
        elif args.command == "decode":
            result = cmd_decode(_read_text(args.text), config)
        elif args.command == "inspect":
            result = cmd_inspect(args.symbol, config)
        elif args.command == "chart":
            result = cmd_chart(args.which, config)
        else:
            result = cmd_fontmap(config)
        _emit(config, result)
    except (InputError, DataError) as exc:
        print("hangulphabet: error: %s" % exc, file=sys.stderr)
        return exc.exit_code
    except HangulphabetError as exc:
        print("hangulphabet: error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("hangulphabet: error: %s" % exc, file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
