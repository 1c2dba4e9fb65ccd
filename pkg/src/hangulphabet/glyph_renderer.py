"""SVG rendering of graphemes, text runs and the two charts.

Radical shapes are data: ``geometry.json`` maps radical ids
(``manner:<i>``, ``place:<i>``) to stroke lists in the unit box
(y grows downward) and carries the vowel trapezoid. Every stroke becomes
one ``<polyline>``; the voicing bar is a ``<line class="voicing-bar">``
so the voiced/voiceless difference is a single extra primitive.

All output is built with ElementTree from fixed-precision numbers, so
identical input gives byte-identical documents.
"""

from __future__ import annotations

import functools
import json
import math
import unicodedata
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import CoordinateOutOfRange, DataFileError, MissingGeometry
from .grapheme_engine import (
    ConsonantGrapheme,
    GraphemeUnit,
    Passthrough,
    VowelGrapheme,
    canonical_name,
    compose,
    compose_vowel,
)
from .ipa_codec import default_table
from .phoneme_model import (
    AttestationStatus,
    ConsonantFeatures,
    Manner,
    Place,
    Voicing,
)

__all__ = [
    "GEOMETRY_PATH",
    "RadicalGeometry",
    "TrapezoidSpec",
    "Geometry",
    "GlyphLayout",
    "RenderStyle",
    "GlyphRenderer",
    "load_geometry",
    "default_geometry",
]

GEOMETRY_PATH = Path(__file__).parent / "data" / "geometry.json"
SVG_NS = "http://www.w3.org/2000/svg"
XML_DECL = '<?xml version="1.0" encoding="UTF-8"?>\n'


def fmt(value: float) -> str:
    text = "%.4f" % value
    text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _points(points) -> str:
    return " ".join("%s,%s" % (fmt(x), fmt(y)) for x, y in points)


# ---------------------------------------------------------------------------
# geometry


@dataclass(frozen=True)
class RadicalGeometry:
    id: str
    strokes: tuple
    name: str = ""
    tongue_marker_x: float | None = None


@dataclass(frozen=True)
class TrapezoidSpec:
    """Vowel trapezoid in unit coordinates before tilting.

    Corners run close-front, close-back, open-back, open-front. The tilt
    rotates the outline clockwise on the page about its centroid.
    """

    corners: tuple = ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.5, 1.0))
    tilt_degrees: float = 8.0

    def __post_init__(self):
        corners = tuple((float(x), float(y)) for x, y in self.corners)
        if len(corners) != 4:
            raise ValueError("trapezoid needs four corners")
        object.__setattr__(self, "corners", corners)
        object.__setattr__(self, "tilt_degrees", float(self.tilt_degrees))
        if self.tilt_degrees == 0.0:
            raise ValueError("the vowel trapezoid must be tilted (tilt_degrees != 0)")
        if abs(_polygon_area(corners)) < 1e-9:
            raise ValueError("trapezoid corners are degenerate")

    @property
    def centroid(self):
        return (sum(x for x, _ in self.corners) / 4, sum(y for _, y in self.corners) / 4)

    def _rotate(self, point):
        cx, cy = self.centroid
        theta = math.radians(self.tilt_degrees)
        c, s = math.cos(theta), math.sin(theta)
        dx, dy = point[0] - cx, point[1] - cy
        return (cx + dx * c - dy * s, cy + dx * s + dy * c)

    def tilted_corners(self):
        return tuple(self._rotate(p) for p in self.corners)

    def point(self, height: float, backness: float):
        """Tilted position of a (height, backness) anchor."""
        if not (0.0 <= height <= 1.0 and 0.0 <= backness <= 1.0):
            raise CoordinateOutOfRange("anchor (%r, %r) outside [0, 1]^2" % (height, backness))
        tl, tr, br, bl = self.corners
        left = _lerp(tl, bl, height)
        right = _lerp(tr, br, height)
        return self._rotate(_lerp(left, right, backness))

    def edges(self):
        c = self.tilted_corners()
        return [(c[i], c[(i + 1) % 4]) for i in range(4)]


def _lerp(a, b, t):
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def _polygon_area(pts):
    return 0.5 * sum(pts[i][0] * pts[(i + 1) % len(pts)][1] - pts[(i + 1) % len(pts)][0] * pts[i][1]
                     for i in range(len(pts)))


@dataclass(frozen=True)
class Geometry:
    radicals: dict
    trapezoid: TrapezoidSpec
    source: Path | None = field(default=None, compare=False)

    def radical(self, radical_id: str) -> RadicalGeometry:
        try:
            return self.radicals[radical_id]
        except KeyError:
            raise MissingGeometry("no geometry for radical %r" % radical_id) from None

    def with_tilt(self, tilt_degrees: float) -> Geometry:
        return replace(self, trapezoid=replace(self.trapezoid, tilt_degrees=tilt_degrees))

    def tongue_markers(self):
        """{place index: tongue_marker_x} for places that have one."""
        out = {}
        for place in Place:
            rad = self.radicals.get("place:%d" % place)
            if rad is not None and rad.tongue_marker_x is not None:
                out[int(place)] = rad.tongue_marker_x
        return out


def load_geometry(path=None) -> Geometry:
    path = Path(path) if path is not None else GEOMETRY_PATH
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise DataFileError(path, 0, "cannot read: %s" % exc.strerror) from None
    except (ValueError, UnicodeDecodeError) as exc:
        raise DataFileError(path, 0, "invalid JSON: %s" % exc) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("radicals"), dict):
        raise DataFileError(path, 0, "missing 'radicals' object")

    radicals = {}
    for rid, entry in doc["radicals"].items():
        try:
            strokes = tuple(tuple((float(x), float(y)) for x, y in stroke)
                            for stroke in entry["strokes"])
        except (KeyError, TypeError, ValueError):
            raise DataFileError(path, 0, "radical %r: malformed strokes" % rid) from None
        for stroke in strokes:
            if len(stroke) < 2:
                raise DataFileError(path, 0, "radical %r: stroke needs two points" % rid)
            for x, y in stroke:
                if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
                    raise DataFileError(path, 0, "radical %r: point (%g, %g) outside unit box"
                                        % (rid, x, y))
        marker = entry.get("tongue_marker_x")
        if marker is not None:
            marker = float(marker)
            if not 0.0 <= marker <= 1.0:
                raise DataFileError(path, 0, "radical %r: tongue_marker_x outside [0, 1]" % rid)
            if not (rid.startswith("place:") and rid[6:].isdigit() and int(rid[6:]) >= 2):
                raise DataFileError(path, 0, "radical %r cannot carry a tongue marker" % rid)
        radicals[rid] = RadicalGeometry(rid, strokes, entry.get("name", ""), marker)

    trap = doc.get("trapezoid", {})
    try:
        trapezoid = TrapezoidSpec(tuple(tuple(c) for c in trap.get("corners", TrapezoidSpec.corners)),
                                  trap.get("tilt_degrees", 8.0))
    except (TypeError, ValueError) as exc:
        raise DataFileError(path, 0, "trapezoid: %s" % exc) from None

    geometry = Geometry(radicals, trapezoid, source=path)
    markers = [x for _, x in sorted(geometry.tongue_markers().items())]
    if any(b <= a for a, b in zip(markers, markers[1:])):
        raise DataFileError(path, 0, "tongue_marker_x must increase with place index")
    return geometry


@functools.lru_cache(maxsize=None)
def default_geometry() -> Geometry:
    return load_geometry()


# ---------------------------------------------------------------------------
# layout


@dataclass(frozen=True)
class GlyphLayout:
    """Design-unit layout of one glyph cell; boxes are (x, y, width, height)."""

    advance: float = 60.0
    height: float = 120.0
    top_box: tuple = (10.0, 15.0, 40.0, 40.0)
    bottom_box: tuple = (10.0, 65.0, 40.0, 40.0)
    figure_box: tuple = (10.0, 40.0, 40.0, 40.0)
    above: tuple = (30.0, 9.0)
    below: tuple = (30.0, 117.0)
    right: tuple = (55.0, 62.0)

    @property
    def voicing_bar_segment(self):
        x, y, w, h = self.bottom_box
        mid = y + h / 2
        return ((x, mid), (x + w, mid))

    @property
    def midline_x(self) -> float:
        return self.advance / 2


@dataclass(frozen=True)
class RenderStyle:
    stroke_width: float = 2.0
    color: str = "#000000"
    scale: float = 1.0
    breakout_radius: float = 0.4
    tick_length: float = 6.0
    tick_gap: float = 2.0
    show_labels: bool = True


def _svg_root(width, height, view_w, view_h, title=None):
    root = ET.Element("svg", {
        "xmlns": SVG_NS,
        "version": "1.1",
        "width": fmt(width),
        "height": fmt(height),
        "viewBox": "0 0 %s %s" % (fmt(view_w), fmt(view_h)),
    })
    if title:
        ET.SubElement(root, "title").text = title
    return root


def _serialize(root) -> str:
    return XML_DECL + ET.tostring(root, encoding="unicode") + "\n"


def _printable(ch: str) -> str:
    return "U+%04X" % ord(ch) if unicodedata.category(ch).startswith("C") else ch


class GlyphRenderer:
    """Draws Hangulphabet graphemes as SVG.

    Parameters
    ----------
    geometry : Geometry, optional
        Radical shapes; defaults to the shipped geometry file.
    style : RenderStyle, optional
    table : IpaTable, optional
        Used by the charts to decide which cells are attested.
    tilt_degrees : float, optional
        Overrides the trapezoid tilt from the geometry file.
    """

    def __init__(self, geometry=None, style=None, table=None, tilt_degrees=None):
        geometry = geometry or default_geometry()
        if tilt_degrees is not None:
            geometry = geometry.with_tilt(tilt_degrees)
        self.geometry = geometry
        self.style = style or RenderStyle()
        self.table = table or default_table()
        self.layout = GlyphLayout()

    # -- primitives ------------------------------------------------------

    def _stroke_attrs(self):
        return {"fill": "none", "stroke": self.style.color,
                "stroke-width": fmt(self.style.stroke_width),
                "stroke-linecap": "round", "stroke-linejoin": "round"}

    def _radical_group(self, parent, kind, index, box):
        rad = self.geometry.radical("%s:%d" % (kind, index))
        x0, y0, w, h = box
        group = ET.SubElement(parent, "g", {"class": "radical %s" % kind})
        ET.SubElement(group, "desc").text = rad.id
        for stroke in rad.strokes:
            pts = [(x0 + u * w, y0 + v * h) for u, v in stroke]
            ET.SubElement(group, "polyline", {"points": _points(pts), **self._stroke_attrs()})
        return group

    def _diacritics(self, parent, diacritics):
        if not diacritics:
            return
        stacks = {"above": 0, "below": 0, "right": 0}
        for dia in diacritics:
            if not dia.is_combining:
                slot = "right"
            elif dia.below:
                slot = "below"
            else:
                slot = "above"
            x, y = getattr(self.layout, slot)
            k = stacks[slot]
            stacks[slot] += 1
            if slot == "right":
                y -= 10 * k
            elif slot == "above":
                y -= 7 * k
            else:
                y += 7 * k
            text = ("◌" + dia.scalar) if dia.is_combining else dia.scalar
            el = ET.SubElement(parent, "text", {
                "class": "diacritic", "x": fmt(x), "y": fmt(y),
                "font-size": "10", "text-anchor": "middle", "fill": self.style.color,
            })
            el.text = text
            ET.SubElement(el, "title").text = dia.name

    def _consonant(self, parent, g: ConsonantGrapheme):
        group = ET.SubElement(parent, "g", {"class": "glyph consonant"})
        ET.SubElement(group, "title").text = canonical_name(g)
        self._radical_group(group, "manner", g.top_radical, self.layout.top_box)
        bottom = self._radical_group(group, "place", g.bottom_radical, self.layout.bottom_box)
        if g.voicing_bar:
            (x1, y1), (x2, y2) = self.layout.voicing_bar_segment
            ET.SubElement(bottom, "line", {
                "class": "voicing-bar", "x1": fmt(x1), "y1": fmt(y1),
                "x2": fmt(x2), "y2": fmt(y2), **self._stroke_attrs()})
        return group

    def breakout(self, g: VowelGrapheme):
        """Clipped trapezoid outline around the vowel anchor.

        Returns ``(pieces, point, radius)`` in tilted trapezoid units; each
        piece is a two-point segment of the outline inside the window.
        """
        trap = self.geometry.trapezoid
        point = trap.point(*g.anchor)
        edges = trap.edges()
        nearest = min(_point_segment_distance(point, a, b) for a, b in edges)
        radius = max(self.style.breakout_radius, 1.25 * nearest)
        pieces = []
        for a, b in edges:
            piece = _clip_segment_to_disk(a, b, point, radius)
            if piece is not None:
                pieces.append(piece)
        return pieces, point, radius

    def _vowel(self, parent, g: VowelGrapheme):
        pieces, point, radius = self.breakout(g)
        fx, fy, fw, fh = self.layout.figure_box
        k = min(fw, fh) / (2 * radius)
        cx, cy = fx + fw / 2, fy + fh / 2

        def to_glyph(p):
            return (cx + (p[0] - point[0]) * k, cy + (p[1] - point[1]) * k)

        mapped = [tuple(to_glyph(p) for p in piece) for piece in pieces]
        xs = [x for piece in mapped for x, _ in piece] + [cx]
        # Center the figure's bounding box on the glyph midline.
        shift = self.layout.midline_x - (min(xs) + max(xs)) / 2
        mapped = [tuple((x + shift, y) for x, y in piece) for piece in mapped]
        ax, ay = cx + shift, cy
        xmin, xmax = min(xs) + shift, max(xs) + shift

        group = ET.SubElement(parent, "g", {"class": "glyph vowel"})
        ET.SubElement(group, "title").text = canonical_name(g)
        fig = ET.SubElement(group, "g", {"class": "breakout"})
        for piece in mapped:
            ET.SubElement(fig, "polyline", {"points": _points(piece), **self._stroke_attrs()})
        ET.SubElement(fig, "circle", {"class": "tongue-point", "cx": fmt(ax), "cy": fmt(ay),
                                      "r": fmt(self.style.stroke_width * 1.25),
                                      "fill": self.style.color})
        gap, length = self.style.tick_gap, self.style.tick_length
        if g.rounded:
            x1, x2 = xmax + gap, xmax + gap + length
        else:
            x1, x2 = xmin - gap - length, xmin - gap
        ET.SubElement(group, "line", {
            "class": "rounding-tick %s" % g.rounding_side, "x1": fmt(x1), "y1": fmt(ay),
            "x2": fmt(x2), "y2": fmt(ay), **self._stroke_attrs()})
        return group

    def _passthrough(self, parent, p: Passthrough):
        group = ET.SubElement(parent, "g", {"class": "glyph passthrough"})
        ET.SubElement(group, "title").text = "passthrough U+%04X" % ord(p.scalar)
        ET.SubElement(group, "rect", {
            "class": "flag", "x": "6", "y": "30", "width": "48", "height": "60",
            "fill": "none", "stroke": "#cc0000", "stroke-width": "1",
            "stroke-dasharray": "3,2"})
        text = ET.SubElement(group, "text", {
            "x": fmt(self.layout.midline_x), "y": "68", "font-size": "24",
            "text-anchor": "middle", "fill": "#cc0000"})
        text.text = _printable(p.scalar)
        return group

    def _unit(self, parent, unit):
        if not isinstance(unit, GraphemeUnit):
            unit = GraphemeUnit(unit)
        g = unit.glyph
        if isinstance(g, ConsonantGrapheme):
            group = self._consonant(parent, g)
        elif isinstance(g, VowelGrapheme):
            group = self._vowel(parent, g)
        elif isinstance(g, Passthrough):
            group = self._passthrough(parent, g)
        else:
            raise TypeError("cannot render %r" % (g,))
        self._diacritics(group, unit.diacritics)
        return group

    # -- documents -------------------------------------------------------

    def _glyph_document(self, unit, title):
        lay = self.layout
        root = _svg_root(lay.advance * self.style.scale, lay.height * self.style.scale,
                         lay.advance, lay.height, title)
        self._unit(root, unit)
        return _serialize(root)

    def render_grapheme(self, unit) -> str:
        g = unit.glyph if isinstance(unit, GraphemeUnit) else unit
        return self._glyph_document(unit, canonical_name(g))

    def render_vowel(self, g: VowelGrapheme) -> str:
        return self._glyph_document(g, canonical_name(g))

    def render_text(self, units) -> str:
        units = [u if isinstance(u, GraphemeUnit) else GraphemeUnit(u) for u in units]
        lay = self.layout
        width = lay.advance * len(units)
        root = _svg_root(width * self.style.scale, lay.height * self.style.scale,
                         width, lay.height)
        for i, unit in enumerate(units):
            try:
                group = self._unit(root, unit)
            except MissingGeometry as exc:
                raise MissingGeometry("unit %d: %s" % (i, exc)) from None
            group.set("transform", "translate(%s,0)" % fmt(i * lay.advance))
        for i in range(len(units) - 1):
            a, b = units[i], units[i + 1]
            if a.tie is not None and a.tie_link is not None and a.tie_link == b.tie_link:
                x1 = i * lay.advance + lay.midline_x
                x2 = x1 + lay.advance
                ET.SubElement(root, "path", {
                    "class": "tie",
                    "d": "M%s,12 Q%s,0 %s,12" % (fmt(x1), fmt((x1 + x2) / 2), fmt(x2)),
                    **self._stroke_attrs()})
        return _serialize(root)

    def render_consonant_chart(self) -> str:
        lay = self.layout
        cell_w, cell_h = 76.0, 80.0
        glyph_scale = 0.5
        left, top = 150.0, 110.0
        n_manner, n_place = len(Manner), len(Place)
        width = left + n_place * cell_w + 10
        height = top + n_manner * cell_h + 10
        root = _svg_root(width * self.style.scale, height * self.style.scale, width, height,
                         "The Hangulphabet Consonant Chart")
        ET.SubElement(root, "rect", {"x": "0", "y": "0", "width": fmt(width),
                                     "height": fmt(height), "fill": "#ffffff"})
        text_attrs = {"font-family": "sans-serif", "text-anchor": "middle", "fill": "#000000"}

        heading = ET.SubElement(root, "text", {"class": "chart-title", "x": fmt(width / 2),
                                               "y": "24", "font-size": "18", **text_attrs})
        heading.text = "The Hangulphabet Consonant Chart"

        # Macro-class headers span their contiguous place columns.
        spans = []
        for place in Place:
            if spans and spans[-1][0] is place.macro_class:
                spans[-1][2] = int(place)
            else:
                spans.append([place.macro_class, int(place), int(place)])
        for macro, first, last in spans:
            x = left + first * cell_w
            w = (last - first + 1) * cell_w
            ET.SubElement(root, "rect", {"class": "macro-header-box", "x": fmt(x), "y": "40",
                                         "width": fmt(w), "height": "28", "fill": "#eeeeee",
                                         "stroke": "#000000", "stroke-width": "1"})
            label = ET.SubElement(root, "text", {"class": "macro-header", "x": fmt(x + w / 2),
                                                 "y": "59", "font-size": "13", **text_attrs})
            label.text = macro.name
        for place in Place:
            label = ET.SubElement(root, "text", {
                "class": "place-header", "x": fmt(left + (int(place) + 0.5) * cell_w),
                "y": "90", "font-size": "10", **text_attrs})
            label.text = place.label
        for manner in Manner:
            label = ET.SubElement(root, "text", {
                "class": "manner-header", "x": fmt(left - 8),
                "y": fmt(top + (int(manner) + 0.5) * cell_h + 4), "font-size": "12",
                "font-family": "sans-serif", "text-anchor": "end", "fill": "#000000"})
            label.text = manner.label

        shade = "#b0b0b0"
        for manner in Manner:
            for place in Place:
                x = left + int(place) * cell_w
                y = top + int(manner) * cell_h
                statuses = {v: self.table.attestation_of(ConsonantFeatures(manner, place, v))
                            for v in Voicing}
                values = set(statuses.values())
                if values == {AttestationStatus.IMPOSSIBLE}:
                    status = AttestationStatus.IMPOSSIBLE
                elif AttestationStatus.OFFICIAL in values:
                    status = AttestationStatus.OFFICIAL
                else:
                    status = AttestationStatus.UNOFFICIAL
                ET.SubElement(root, "rect", {
                    "class": "cell %s" % status.value.lower(),
                    "id": "cell-%s-%s" % (manner.code, place.code),
                    "x": fmt(x), "y": fmt(y), "width": fmt(cell_w), "height": fmt(cell_h),
                    "fill": shade if status is AttestationStatus.IMPOSSIBLE else "none",
                    "stroke": "#000000", "stroke-width": "1"})
                if status is AttestationStatus.IMPOSSIBLE:
                    continue
                for voicing in Voicing:
                    half_x = x + int(voicing) * cell_w / 2
                    st = statuses[voicing]
                    if st is AttestationStatus.IMPOSSIBLE:
                        ET.SubElement(root, "rect", {
                            "class": "half-shade", "x": fmt(half_x), "y": fmt(y),
                            "width": fmt(cell_w / 2), "height": fmt(cell_h), "fill": shade})
                        continue
                    if st is not AttestationStatus.OFFICIAL:
                        continue
                    f = ConsonantFeatures(manner, place, voicing)
                    gx = half_x + (cell_w / 2 - lay.advance * glyph_scale) / 2
                    slot = ET.SubElement(root, "g", {
                        "class": "cell-glyph",
                        "transform": "translate(%s,%s) scale(%s)" % (
                            fmt(gx), fmt(y), fmt(glyph_scale))})
                    self._consonant(slot, compose(f))
                    if self.style.show_labels:
                        label = ET.SubElement(root, "text", {
                            "class": "ipa-label", "x": fmt(half_x + cell_w / 4),
                            "y": fmt(y + cell_h - 6), "font-size": "11", **text_attrs})
                        label.text = self.table.ipa_of(f)
        return _serialize(root)

    def render_vowel_chart(self) -> str:
        size = 360.0
        margin = 70.0
        trap = self.geometry.trapezoid
        corners = trap.tilted_corners()
        xs = [x for x, _ in corners]
        ys = [y for _, y in corners]
        ox = margin - min(xs) * size
        oy = margin + 30 - min(ys) * size

        def to_chart(p):
            return (ox + p[0] * size, oy + p[1] * size)

        width = (max(xs) - min(xs)) * size + 2 * margin
        height = (max(ys) - min(ys)) * size + 2 * margin + 30
        root = _svg_root(width * self.style.scale, height * self.style.scale, width, height,
                         "The Hangulphabet Vowel Chart")
        ET.SubElement(root, "rect", {"x": "0", "y": "0", "width": fmt(width),
                                     "height": fmt(height), "fill": "#ffffff"})
        heading = ET.SubElement(root, "text", {
            "class": "chart-title", "x": fmt(width / 2), "y": "24", "font-size": "18",
            "font-family": "sans-serif", "text-anchor": "middle", "fill": "#000000"})
        heading.text = "The Hangulphabet Vowel Chart"
        ET.SubElement(root, "polygon", {
            "class": "trapezoid", "points": _points(to_chart(c) for c in corners),
            "fill": "none", "stroke": "#000000", "stroke-width": "1.5"})

        dx = 11.0
        glyph_scale = 0.5
        lay = self.layout
        for symbol, vf in self.table.vowels.items():
            px, py = to_chart(trap.point(vf.height, vf.backness))
            mx = px + (dx if vf.rounded else -dx)
            ET.SubElement(root, "circle", {
                "class": "anchor-marker %s" % ("rounded" if vf.rounded else "unrounded"),
                "id": "vowel-%04X" % ord(symbol), "cx": fmt(mx), "cy": fmt(py), "r": "2.5",
                "fill": "#000000"})
            g = compose_vowel(vf)
            gx = mx - lay.advance * glyph_scale / 2
            slot = ET.SubElement(root, "g", {
                "class": "chart-glyph",
                "transform": "translate(%s,%s) scale(%s)" % (
                    fmt(gx), fmt(py + 2 - lay.figure_box[1] * glyph_scale), fmt(glyph_scale))})
            self._vowel(slot, g)
            if self.style.show_labels:
                label = ET.SubElement(root, "text", {
                    "class": "ipa-label", "x": fmt(mx), "y": fmt(py - 5), "font-size": "12",
                    "font-family": "sans-serif", "text-anchor": "middle", "fill": "#000000"})
                label.text = symbol
        return _serialize(root)


def _point_segment_distance(p, a, b):
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    length2 = dx * dx + dy * dy
    t = 0.0 if length2 == 0 else max(0.0, min(1.0, ((p[0] - ax) * dx + (p[1] - ay) * dy) / length2))
    return math.hypot(ax + t * dx - p[0], ay + t * dy - p[1])


def _clip_segment_to_disk(a, b, center, radius):
    """Part of segment ab inside the disk, or None."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    fx, fy = a[0] - center[0], a[1] - center[1]
    qa = dx * dx + dy * dy
    qb = 2 * (fx * dx + fy * dy)
    qc = fx * fx + fy * fy - radius * radius
    disc = qb * qb - 4 * qa * qc
    if qa == 0 or disc <= 0:
        return None
    root = math.sqrt(disc)
    t0 = max(0.0, (-qb - root) / (2 * qa))
    t1 = min(1.0, (-qb + root) / (2 * qa))
    if t1 - t0 <= 1e-12:
        return None
    return (_lerp(a, b, t0), _lerp(a, b, t1))
