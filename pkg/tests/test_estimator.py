import doctest
import warnings

import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

import hangulphabet.estimator
from hangulphabet import HangulphabetTransliterator
from hangulphabet.errors import UnassignedCodepoint, UnknownSymbol
from hangulphabet.estimator import UnknownSymbolWarning, decode_text


def test_doctests():
    result = doctest.testmod(hangulphabet.estimator)
    assert result.attempted > 0 and result.failed == 0


def test_get_params_and_clone():
    tr = HangulphabetTransliterator(strict=True, output="codes")
    assert tr.get_params() == {"data_dir": None, "strict": True, "output": "codes"}
    cloned = clone(tr)
    assert cloned.get_params() == tr.get_params()
    assert not hasattr(cloned, "table_")


def test_not_fitted():
    with pytest.raises(NotFittedError):
        HangulphabetTransliterator().transform(["p"])


def test_bad_output_option():
    with pytest.raises(ValueError):
        HangulphabetTransliterator(output="xml").fit()


def test_rejects_bare_string():
    tr = HangulphabetTransliterator().fit()
    with pytest.raises(ValueError):
        tr.transform("pb")
    with pytest.raises(ValueError):
        tr.transform([1, 2])


def test_transform_text_roundtrip():
    tr = HangulphabetTransliterator()
    out = tr.fit_transform(["pb", "t͡sa̰"])
    assert out[0] == "\ue01a\ue01b"
    assert tr.inverse_transform(out) == ["pb", "t͡sa̰"]


def test_names_output():
    tr = HangulphabetTransliterator(output="names").fit()
    assert tr.transform(["pb"]) == ["PLO.BLB.VLS PLO.BLB.VCD"]
    assert tr.transform(["b̥"]) == ["PLO.BLB.VCD+voiceless"]
    with pytest.raises(ValueError):
        tr.inverse_transform(["x"])


def test_unknown_symbol_warning_and_strict():
    tr = HangulphabetTransliterator(output="codes").fit()
    with pytest.warns(UnknownSymbolWarning):
        assert tr.transform(["p!"]) == ["U+E01A U+0021"]
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        tr.transform(["pa ta"])
    with pytest.raises(UnknownSymbol):
        HangulphabetTransliterator(strict=True).fit().transform(["p!"])


def test_in_pipeline():
    pipe = make_pipeline(FunctionTransformer(lambda xs: [x.strip("/") for x in xs]),
                         HangulphabetTransliterator(output="codes"))
    assert pipe.fit_transform(["/m/"]) == ["U+E001"]


def test_custom_data_dir(tmp_path):
    from hangulphabet.ipa_codec import DATA_DIR
    for path in DATA_DIR.glob("*.tsv"):
        (tmp_path / path.name).write_text(path.read_text(encoding="utf-8"), encoding="utf-8")
    tr = HangulphabetTransliterator(data_dir=tmp_path).fit()
    assert tr.n_consonants_ == 65


def test_decode_unofficial_and_unassigned(table):
    # (Trill, Palatal, Voiceless): manner 5, place 7
    cp = 0xE000 + (5 * 13 + 7) * 2
    assert decode_text("U+%04X" % cp) == "[TRL.PAL.VLS]"
    assert decode_text(chr(cp)) == "[TRL.PAL.VLS]"
    with pytest.raises(UnassignedCodepoint):
        decode_text("U+E3FF")
    with pytest.raises(UnassignedCodepoint):
        decode_text("a\ue0eab")


def test_decode_passes_non_pua_through():
    assert decode_text("U+E01A U+0020 U+0021") == "p !"
