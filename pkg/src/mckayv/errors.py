"""Exception types shared across the verifier."""


class VerifierError(Exception):
    pass


class EvenPrime(VerifierError):
    """The regime machinery only handles odd primes."""


class NotADivisor(VerifierError):
    """ell does not divide the group order."""


class NonIntegralResult(VerifierError):
    """A degree polynomial evaluated to a non-integer (corrupt table data)."""


class ExcludedIndex(VerifierError):
    """Index violates the exclusion rules of its index set."""


class MalformedShape(VerifierError):
    """Centralizer shape fails the dimension constraint."""


class RadicalNotInRegime(VerifierError):
    """Requested radical subgroup does not exist for this regime."""


class InvalidSeries(VerifierError):
    pass


class Unassigned(VerifierError):
    """A character matched no block rule; signals a transcription bug."""


class RegimeNotTabulated(VerifierError):
    """No Brauer-character row covers this regime."""


class DataFileMissing(VerifierError):
    pass


class DataFileMalformed(VerifierError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno
