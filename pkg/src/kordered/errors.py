class InvariantViolation(RuntimeError):
    """A construction step produced something its correctness argument rules out.

    Raised instead of silently repairing the output, so that a failure points at
    the exact case/step that went wrong.
    """


class SearchBoundExceeded(RuntimeError):
    """The exhaustive oracle refused an instance larger than its configured bound."""
