import xml.etree.ElementTree as ET
from collections import Counter

import pytest

from hangulphabet.glyph_renderer import GlyphRenderer, default_geometry
from hangulphabet.ipa_codec import default_table

NS = "{http://www.w3.org/2000/svg}"

# Filled in by test_acceptance; printed after the run.
ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def table():
    return default_table()


@pytest.fixture(scope="session")
def geometry():
    return default_geometry()


@pytest.fixture(scope="session")
def renderer():
    return GlyphRenderer()


def parse_svg(text):
    return ET.fromstring(text.encode("utf-8"))


def classes(el):
    return set(el.get("class", "").split())


def find_class(root, cls, tag=None):
    tag = "*" if tag is None else NS + tag
    return [el for el in root.iter(tag) if cls in classes(el)]


def primitives(el):
    """Multiset of drawn primitives: (tag, geometry) for polylines and lines."""
    out = Counter()
    for node in el.iter():
        if node.tag == NS + "polyline":
            out[("polyline", node.get("points"))] += 1
        elif node.tag == NS + "line":
            out[("line", tuple(float(node.get(a)) for a in ("x1", "y1", "x2", "y2")))] += 1
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line("AC%-2d %s  %s%s" % (
            number, "PASS" if ok else "FAIL", title, ("  (%s)" % detail) if detail else ""))
