"""Exception hierarchy for plumblat.

Exit-code mapping used by the CLI: ``UsageError`` subclasses map to exit
code 2, ``BoxTooLarge`` to exit code 3.
"""


class PlumblatError(Exception):
    """Base class for all plumblat errors."""


class UsageError(PlumblatError):
    """Bad input: syntax, validation, or precondition failure (CLI exit 2)."""


class GraphSyntaxError(UsageError):
    """Malformed graph or cycle text (bad line, duplicate vertex/edge)."""


class ValidationError(UsageError):
    """Structurally well-formed input violating a graph invariant."""


class EmptySubset(UsageError):
    """A vertex subset argument was empty."""


class GraphMismatch(UsageError):
    """Cycles living on different graphs were combined."""


class UnknownVertex(UsageError):
    """A vertex name not present in the graph."""


class NotAnEdge(UsageError):
    """The named vertex pair is not an edge of the graph."""


class PreconditionFailed(UsageError):
    """An operation's stated precondition does not hold."""


class HypothesisFailed(UsageError):
    """A theorem hypothesis check failed; the message names the vertex."""


class NegativeCoefficient(UsageError):
    """A derived cycle acquired a negative coefficient."""


class OracleIncomplete(UsageError):
    """An h1 oracle table does not cover its whole box."""


class BoxTooLarge(PlumblatError):
    """A certified search region exceeds the node budget (CLI exit 3)."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"search box has {required} nodes, exceeding the budget of {budget}"
        )


class InternalError(PlumblatError):
    """An internal cross-check failed; indicates a bug, not bad input."""
