"""Exception types shared across the package."""


class WfcombError(Exception):
    """Base class; the CLI maps these to structured diagnostics."""


class NotAPartition(WfcombError, ValueError):
    pass


class BoundExceeded(WfcombError, ValueError):
    pass


class NotSpecial(WfcombError, ValueError):
    pass


class WrongClass(WfcombError, ValueError):
    pass


class InvalidTriple(WfcombError, ValueError):
    pass


class DifferentFamilies(WfcombError, ValueError):
    pass


class InvalidDatum(WfcombError, ValueError):
    pass


class NoSuchPartition(WfcombError, ValueError):
    pass


class InvalidChi(WfcombError, ValueError):
    pass


class HypothesesViolated(WfcombError, ValueError):
    pass


class PreconditionViolated(WfcombError, ValueError):
    pass


class OddPart(WfcombError, ValueError):
    pass
