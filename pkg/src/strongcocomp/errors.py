"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph text or a graph that violates its kind's invariants."""


class CertificateError(ValueError):
    """A certificate is structurally malformed (as opposed to merely invalid)."""


class OracleGuardError(ValueError):
    """An input exceeds the size guard of a brute-force oracle."""


class InternalError(RuntimeError):
    """A constructed certificate failed its own verifier.

    This never signals bad input; it means an algorithm in this package is wrong.
    """
