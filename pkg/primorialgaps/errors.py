"""
Errors raised by primorialgaps
"""


class PrimorialGapsError(Exception):
    """
    Base class of every primorialgaps error
    """



class NonCoprimeModuli(PrimorialGapsError, ValueError):
    pass



class DuplicateModulus(PrimorialGapsError, ValueError):
    pass



class NotACovering(PrimorialGapsError, ValueError):
    pass



class EvenModulusPresent(PrimorialGapsError, ValueError):
    pass



class NoEvenClass(PrimorialGapsError, ValueError):
    pass



class EvenLength(PrimorialGapsError, ValueError):
    pass



class NotRestricted(PrimorialGapsError, ValueError):
    pass



class InvalidPair(PrimorialGapsError, ValueError):
    pass



class ConstructionFailed(PrimorialGapsError, RuntimeError):
    """
    A construction which is proven to succeed did not verify.
    Always an implementation bug.
    """



class PeriodTooLarge(PrimorialGapsError, MemoryError):
    pass



class OddGap(PrimorialGapsError, ValueError):
    pass



class GapInReportSequence(PrimorialGapsError, ValueError):
    pass



class SearchTimeout(PrimorialGapsError, TimeoutError):
    """
    A search ran past its deadline
    """
