"""Exception types shared across the package.

The CLI maps these onto exit codes: OSError -> 2 (I/O),
ParseError / ValueError -> 3 (bad data or arguments),
DegenerateResultError -> 4 (algorithm produced no usable result).
"""


class ParseError(ValueError):
    """Malformed edge-list or label document.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class DegenerateResultError(RuntimeError):
    """Clustering produced no exemplars at any probed preference.

    ``probes`` records the (preference, community_count) pairs tried,
    so callers can see what range was explored.
    """

    def __init__(self, message, probes=()):
        super().__init__(message)
        self.probes = list(probes)
