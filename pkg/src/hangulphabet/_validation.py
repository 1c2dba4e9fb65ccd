"""Input checking shared by the estimator and the CLI."""

from __future__ import annotations

import re
from collections.abc import Iterable

from .errors import InputError

_CODE = re.compile(r"^[Uu]\+([0-9A-Fa-f]{4,6})$")


def check_text_input(X) -> list[str]:
    """Coerce an iterable of strings (list, array, Series) to a list.

    A bare string is rejected, as scikit-learn does for 1-D text input,
    because iterating it would silently transliterate one character per
    sample.
    """
    if isinstance(X, (str, bytes)):
        raise ValueError("expected an iterable of strings, got a single string; "
                         "wrap it in a list")
    if not isinstance(X, Iterable):
        raise ValueError("expected an iterable of strings, got %s" % type(X).__name__)
    out = []
    for i, item in enumerate(X):
        if not isinstance(item, str):
            raise ValueError("sample %d is %s, not str" % (i, type(item).__name__))
        out.append(item)
    return out


def parse_code(token: str) -> int:
    """``"U+E01A"`` -> 0xE01A."""
    m = _CODE.match(token)
    if m is None:
        raise InputError("not a U+ code: %r" % token)
    value = int(m.group(1), 16)
    if value > 0x10FFFF or 0xD800 <= value <= 0xDFFF:
        raise InputError("not a Unicode scalar value: %r" % token)
    return value


def is_code_stream(text: str) -> bool:
    tokens = text.split()
    return bool(tokens) and all(_CODE.match(t) for t in tokens)


def check_option(name, value, allowed):
    if value not in allowed:
        raise ValueError("%s must be one of %s, got %r" % (name, sorted(allowed), value))
    return value
