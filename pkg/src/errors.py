class UVBError(Exception):
    """Base class for every error raised by the engine"""


class BraidWordError(UVBError, ValueError):
    """Malformed input text: bad token, bad index, size limit exceeded"""


class StrandCountError(UVBError, ValueError):
    """Operands live over different strand counts, or an index pair is out of range"""


class PreconditionError(UVBError, ValueError):
    """An operation was called outside its precondition"""
