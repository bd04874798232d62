"""Exception hierarchy shared by every module of the package."""


class CBCError(Exception):
    """Base class for all package errors."""


class InvalidEdge(CBCError, ValueError):
    pass


class InvalidVertex(CBCError, ValueError):
    pass


class BackboneNotSubgraph(CBCError, ValueError):
    pass


class BackboneNotLinearForest(CBCError, ValueError):
    pass


class InconsistentRotation(CBCError, ValueError):
    pass


class PreconditionViolated(CBCError, ValueError):
    """An operation was called outside the hypotheses it is defined for."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(msg)


class PreconditionC4(PreconditionViolated):
    def __init__(self, detail: str = ""):
        super().__init__("c4_free", detail)


class PartialColoring(CBCError, ValueError):
    pass


class InstanceTooLarge(CBCError, ValueError):
    pass


class NotHamiltonianPath(CBCError, ValueError):
    pass


class NotReducible(CBCError):
    pass


class NotInClass(CBCError, ValueError):
    pass


class ProofGapError(CBCError):
    """Raised when a proof-derived colorer finds no reducible configuration.

    The offending instance is attached as ``witness``.
    """

    def __init__(self, witness):
        self.witness = witness
        super().__init__(witness.reason)


class BudgetExceeded(CBCError):
    pass


class GiveUp(CBCError):
    pass


class KindUnavailable(CBCError, ValueError):
    pass


class SearchExhausted(CBCError):
    """cbc/bbc search hit its safety cut-off without finding a coloring."""


class ExtensionFailed(CBCError):
    """A recorded reduction could not be undone; the reduction was not extendable."""
