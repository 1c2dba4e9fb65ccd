import io
import json
import subprocess
import sys
import unicodedata

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import find_class, parse_svg
from hangulphabet.cli import RunConfig, cmd_decode, cmd_encode, main
from hangulphabet.glyph_renderer import GEOMETRY_PATH
from hangulphabet.ipa_codec import DATA_DIR, default_table


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_encode_names(capsys):
    assert run(capsys, "encode", "pb", "--format", "names") == (0, "PLO.BLB.VLS PLO.BLB.VCD\n", "")


def test_encode_default_format_is_names(capsys):
    assert run(capsys, "encode", "m")[1] == "NAS.BLB.VCD\n"


def test_encode_codes(capsys):
    assert run(capsys, "encode", "m", "--format", "codes")[1] == "U+E001\n"


def test_encode_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "encode", "-f", "codes", stdin="pb\n", monkeypatch=monkeypatch)
    assert (code, out) == (0, "U+E01A U+E01B\n")


def test_encode_strict_unknown(capsys):
    code, out, err = run(capsys, "--strict", "encode", "!")
    assert code == 2 and out == ""
    assert "U+0021" in err


def test_encode_lenient_warns_on_stderr_only(capsys):
    code, out, err = run(capsys, "encode", "p!", "-f", "codes", "--lenient")
    assert code == 0
    assert out == "U+E01A U+0021\n"
    assert "warning" in err and "U+0021" in err


def test_encode_tsv(capsys):
    code, out, _ = run(capsys, "encode", "pb̥", "-f", "tsv")
    assert out.splitlines() == ["p\tU+E01A\tPLO.BLB.VLS", "b̥\tU+E01B U+0325\tPLO.BLB.VCD"]


def test_encode_svg(capsys):
    code, out, _ = run(capsys, "encode", "pa", "-f", "svg")
    root = parse_svg(out)
    assert len(find_class(root, "glyph")) == 2


def test_encode_input_errors(capsys):
    assert run(capsys, "encode", "̥a")[0] == 2
    assert run(capsys, "encode", "t͡")[0] == 2


def test_decode(capsys):
    assert run(capsys, "decode", "U+E01A") == (0, "p\n", "")
    cp = 0xE000 + (5 * 13 + 7) * 2
    assert run(capsys, "decode", "U+%04X" % cp)[1] == "[TRL.PAL.VLS]\n"
    code, out, err = run(capsys, "decode", "U+E3FF")
    assert code == 2 and out == "" and "E3FF" in err


def test_inspect(capsys):
    code, out, _ = run(capsys, "inspect", "ɳ")
    assert code == 0
    for word in ("Nasal", "Retroflex", "Voiced"):
        assert word in out
    assert "Official" in run(capsys, "inspect", "p")[1]
    assert "Impossible" in run(capsys, "inspect", "TRL.VEL.VCD")[1]
    assert "Unofficial" in run(capsys, "inspect", "TRL.PAL.VLS")[1]
    out = run(capsys, "inspect", "u")[1]
    assert "vowel" in out and "U+E405" in out and "right" in out
    assert "Unofficial" in run(capsys, "inspect", "VOW.H050.B050.RND")[1]


def test_inspect_unknown(capsys):
    assert run(capsys, "inspect", "w")[0] == 2
    assert run(capsys, "inspect", "XXX.BLB.VLS")[0] == 2


def test_chart_consonants(capsys, tmp_path):
    target = tmp_path / "c.svg"
    assert run(capsys, "chart", "consonants", "--output", str(target))[0] == 0
    root = parse_svg(target.read_text(encoding="utf-8"))
    assert len(find_class(root, "cell", "rect")) == 117


def test_chart_vowels(capsys):
    code, out, _ = run(capsys, "chart", "vowels", "--tilt", "12")
    assert code == 0
    assert len(find_class(parse_svg(out), "anchor-marker")) == len(default_table().vowels)
    assert run(capsys, "chart", "vowels", "--tilt", "0")[0] == 2


def test_chart_missing_geometry_exit_3(capsys, tmp_path):
    doc = json.loads(GEOMETRY_PATH.read_text(encoding="utf-8"))
    del doc["radicals"]["manner:3"]
    path = tmp_path / "g.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, err = run(capsys, "chart", "consonants", "--geometry", str(path))
    assert code == 3 and out == "" and "manner:3" in err


def test_malformed_data_exit_3(capsys, tmp_path):
    for p in DATA_DIR.glob("*.tsv"):
        (tmp_path / p.name).write_text(p.read_text(encoding="utf-8"), encoding="utf-8")
    with open(tmp_path / "consonants.tsv", "a", encoding="utf-8") as fh:
        fh.write("zz\n")
    assert run(capsys, "encode", "p", "--data-dir", str(tmp_path))[0] == 3
    assert run(capsys, "encode", "p", "--geometry", str(tmp_path / "nope.json"), "-f", "svg")[0] == 3


def test_fontmap(capsys):
    code, out, _ = run(capsys, "fontmap")
    lines = out.splitlines()
    assert "0070\tE01A\tPLO.BLB.VLS" in lines
    table = default_table()
    assert len(lines) == len(table.consonants) + len(table.vowels)
    puas = [line.split("\t")[1] for line in lines]
    assert len(set(puas)) == len(puas)
    assert puas == sorted(puas, key=lambda h: int(h, 16))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hangulphabet", "encode", "pb"],
                          capture_output=True, text=True, encoding="utf-8")
    assert proc.returncode == 0 and proc.stdout == "PLO.BLB.VLS PLO.BLB.VCD\n"


OFFICIAL = sorted(default_table().consonants) + sorted(default_table().vowels)
MARKS = sorted(default_table().diacritics)


@st.composite
def ipa_strings(draw):
    parts = []
    for _ in range(draw(st.integers(0, 8))):
        parts.append(draw(st.sampled_from(OFFICIAL)))
        parts.extend(draw(st.lists(st.sampled_from(MARKS), max_size=2)))
    return "".join(parts)


@settings(max_examples=200, deadline=None)
@given(ipa_strings())
def test_encode_decode_roundtrip(s):
    config = RunConfig(format="codes")
    assert cmd_decode(cmd_encode(s, config), RunConfig()) == unicodedata.normalize("NFC", s)
