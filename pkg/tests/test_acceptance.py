"""Acceptance criteria, one test each, timed against their stated bounds.

A PASS/FAIL line per criterion is printed in the pytest terminal summary.
"""

import contextlib
import itertools
import random
import time
import unicodedata
from collections import Counter

from conftest import ACCEPTANCE_RESULTS, NS, classes, find_class, parse_svg, primitives
from hangulphabet.cli import RunConfig, cmd_chart, cmd_decode, cmd_encode, cmd_fontmap
from hangulphabet.glyph_renderer import GlyphLayout, GlyphRenderer, load_geometry
from hangulphabet.grapheme_engine import (
    ConsonantGrapheme,
    VowelGrapheme,
    codepoint_of,
    compose,
    compose_vowel,
    decompose,
    grapheme_of_codepoint,
)
from hangulphabet.ipa_codec import default_table, load_table
from hangulphabet.phoneme_model import (
    AttestationStatus,
    Manner,
    Place,
    all_consonant_features,
    attestation_of,
    grid_dimensions,
)


@contextlib.contextmanager
def criterion(number, title, budget_s):
    start = time.perf_counter()
    ok, detail = False, ""
    try:
        yield
        elapsed = time.perf_counter() - start
        detail = "%.3fs of %gs" % (elapsed, budget_s)
        assert elapsed < budget_s, "took %.3fs, budget %gs" % (elapsed, budget_s)
        ok = True
    except AssertionError as exc:
        detail = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        raise
    finally:
        ACCEPTANCE_RESULTS.append((number, title, ok, detail))
        print("AC%d %s %s (%s)" % (number, "PASS" if ok else "FAIL", title, detail))


def test_ac01_radical_economy():
    with criterion(1, "radical economy: 9 manner + 13 place = 22", 1):
        manners, places = grid_dimensions()
        assert (manners, places) == (9, 13)
        assert manners + places == 22
        assert len(Manner) + len(Place) == 22


def test_ac02_grid_shape():
    with criterion(2, "consonant chart is 9 x 13 with five macro-class headers", 1):
        root = parse_svg(GlyphRenderer().render_consonant_chart())
        cells = find_class(root, "cell", "rect")
        assert len(cells) == 117
        rows = {float(c.get("y")) for c in cells}
        cols = {float(c.get("x")) for c in cells}
        assert (len(rows), len(cols)) == (9, 13)
        headers = [el.text for el in find_class(root, "macro-header")]
        assert headers == ["LABIAL", "CORONAL", "DORSAL", "RADICAL", "LARYNGEAL"]


def test_ac03_bijective_roundtrip():
    with criterion(3, "ipa -> features -> grapheme -> codepoint -> ... -> ipa is identity", 1):
        table = load_table()
        assert len(table.consonants) >= 58
        for symbol in table.consonants:
            f = table.features_of(symbol)
            g = compose(f)
            cp = codepoint_of(g, table)
            g2 = grapheme_of_codepoint(cp, table)
            assert g2 == g
            assert decompose(g2) == f
            assert table.ipa_of(decompose(g2)) == symbol


def test_ac04_voicing_minimal_pair():
    with criterion(4, "voiced glyph = voiceless glyph + one bar on the bottom midline", 5):
        renderer = GlyphRenderer()
        x, y, w, h = GlyphLayout().bottom_box
        midline = y + h / 2
        for m, p in itertools.product(range(9), range(13)):
            vl = parse_svg(renderer.render_grapheme(ConsonantGrapheme(m, p, False)))
            vd = parse_svg(renderer.render_grapheme(ConsonantGrapheme(m, p, True)))
            pv, pd = primitives(vl), primitives(vd)
            assert not pv - pd, (m, p)
            extra = pd - pv
            assert sum(extra.values()) == 1, (m, p)
            ((tag, coords),) = extra
            assert tag == "line"
            x1, y1, x2, y2 = coords
            assert y1 == y2, (m, p)
            assert abs(y1 - midline) <= 1e-9 * h, (m, p)


def test_ac05_rounding_side_rule():
    with criterion(5, "unrounded tick left of midline, rounded tick right", 1):
        table = default_table()
        renderer = GlyphRenderer()
        midline = GlyphLayout().midline_x
        by_anchor = {}
        for vf in table.vowels.values():
            by_anchor.setdefault(vf.anchor, {})[vf.rounded] = vf
        pairs = [members for members in by_anchor.values() if len(members) == 2]
        assert pairs
        for members in pairs:
            for rounded, vf in members.items():
                root = parse_svg(renderer.render_vowel(compose_vowel(vf)))
                assert float(root.get("viewBox").split()[2]) / 2 == midline
                (tick,) = find_class(root, "rounding-tick")
                xs = (float(tick.get("x1")), float(tick.get("x2")))
                if rounded:
                    assert min(xs) > midline
                else:
                    assert max(xs) < midline


def test_ac06_tongue_marker_monotonicity():
    with criterion(6, "tongue marker strictly increasing over places 2..12, absent on 0..1", 1):
        geometry = load_geometry()
        rads = [geometry.radical("place:%d" % i) for i in range(13)]
        assert rads[0].tongue_marker_x is None and rads[1].tongue_marker_x is None
        xs = [r.tongue_marker_x for r in rads[2:]]
        assert None not in xs
        assert all(a < b for a, b in zip(xs, xs[1:]))


def test_ac07_codepoint_injectivity():
    with criterion(7, "no codepoint collisions; fontmap has no duplicate PUA entries", 1):
        table = default_table()
        cps = [codepoint_of(ConsonantGrapheme(m, p, v))
               for m, p, v in itertools.product(range(9), range(13), (False, True))]
        cps += [codepoint_of(VowelGrapheme(a, side), table)
                for a in table.anchors for side in ("left", "right")]
        assert len(cps) == 234 + 2 * len(table.anchors)
        assert len(set(cps)) == len(cps)
        lines = cmd_fontmap(RunConfig()).splitlines()
        puas = [line.split("\t")[1] for line in lines]
        assert len(set(puas)) == len(puas) == len(table.consonants) + len(table.vowels)


def test_ac08_attestation_partition():
    with criterion(8, "Official/Unofficial/Impossible partition the 234 triples", 1):
        table = default_table()
        triples = all_consonant_features()
        assert len(set(triples)) == 234
        statuses = {f: attestation_of(f, table) for f in triples}
        counts = Counter(statuses.values())
        assert sum(counts.values()) == 234
        for f, status in statuses.items():
            symbols = [s for s, g in table.consonants.items() if g == f]
            if status is AttestationStatus.OFFICIAL:
                assert len(symbols) == 1
            else:
                assert symbols == []
            shaded = (f.manner, f.place, None) in table.impossible or \
                (f.manner, f.place, f.voicing) in table.impossible
            assert (status is AttestationStatus.IMPOSSIBLE) == (shaded and not symbols)
        assert counts[AttestationStatus.OFFICIAL] == len(table.consonants)


def test_ac09_text_roundtrip():
    with criterion(9, "1000 random strings survive encode -> decode", 10):
        table = default_table()
        rng = random.Random(20261018)
        symbols = sorted(table.consonants) + sorted(table.vowels)
        marks = sorted(table.diacritics)
        config = RunConfig(format="codes")
        checked = 0
        for _ in range(1000):
            parts = []
            for k in range(rng.randint(0, 12)):
                if k:
                    # tie bars only ever join two base symbols
                    parts.append(rng.choice(("", "", "", " ", "\u0361")))
                parts.append(rng.choice(symbols))
                parts.extend(rng.choice(marks) for _ in range(rng.choice((0, 0, 1, 2))))
            s = "".join(parts)
            assert cmd_decode(cmd_encode(s, config), RunConfig()) == \
                unicodedata.normalize("NFC", s), s
            checked += 1
        assert checked == 1000


def test_ac10_determinism():
    with criterion(10, "charts and glyph renders are byte-identical across runs", 5):
        config = RunConfig()
        for which in ("consonants", "vowels"):
            assert cmd_chart(which, config) == cmd_chart(which, config)
        a, b = GlyphRenderer(load_geometry()), GlyphRenderer(load_geometry())
        table = default_table()
        for f in table.consonants.values():
            assert a.render_grapheme(compose(f)) == b.render_grapheme(compose(f))
        for vf in table.vowels.values():
            assert a.render_vowel(compose_vowel(vf)) == b.render_vowel(compose_vowel(vf))
        svg = cmd_encode("t͡ʃa̰ŋ!", RunConfig(format="svg"))
        assert svg == cmd_encode("t͡ʃa̰ŋ!", RunConfig(format="svg"))
        assert all(el.tag.startswith(NS) for el in parse_svg(svg).iter())
        assert "glyph" in classes(next(iter(find_class(parse_svg(svg), "glyph"))))
