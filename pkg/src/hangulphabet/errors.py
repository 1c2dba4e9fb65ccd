"""Exception hierarchy.

Everything the library raises derives from :class:`HangulphabetError`.
:class:`InputError` covers bad user input (CLI exit code 2) and
:class:`DataError` covers broken data or geometry files (exit code 3).
"""


class HangulphabetError(Exception):
    exit_code = 1


class InputError(HangulphabetError, ValueError):
    exit_code = 2


class DataError(HangulphabetError):
    exit_code = 3


class UnknownSymbol(InputError):
    def __init__(self, symbol, message=None):
        self.symbol = symbol
        if message is None:
            message = "unknown symbol %r (%s)" % (symbol, scalar_label(symbol))
        super().__init__(message)


class LeadingCombiningMark(InputError):
    pass


class UnpairedTieBar(InputError):
    pass


class NoOfficialSymbol(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class CoordinateOutOfRange(InputError):
    pass


class NotEncodable(InputError):
    pass


class UnassignedCodepoint(InputError):
    pass


class DataFileError(DataError):
    def __init__(self, path, lineno, message):
        self.path = path
        self.lineno = lineno
        where = "%s:%d" % (path, lineno) if lineno else str(path)
        super().__init__("%s: %s" % (where, message))


class MissingGeometry(DataError):
    pass


def scalar_label(text):
    return " ".join("U+%04X" % ord(ch) for ch in text)
