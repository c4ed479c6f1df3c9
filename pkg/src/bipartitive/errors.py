"""Exception types shared across modules."""


class AxiomError(ValueError):
    """An input failed the closure axioms an operation requires.

    ``report`` is the full :class:`~bipartitive.families.AxiomReport`.
    """

    def __init__(self, message: str, report):
        first = report.violations[0].describe() if report.violations else ""
        super().__init__(f"{message}: {first}" if first else message)
        self.report = report


class NotIrreducibleError(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    """A construction failed its own verification; always a bug, never bad input."""
