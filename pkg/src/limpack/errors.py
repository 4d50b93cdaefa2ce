"""Exception types shared by all limpack modules.

The CLI maps these onto exit codes: input and precondition problems are
exit 3, resource limits exit 3, infeasibility exit 1.
"""


class LimpackError(Exception):
    """Base class for all errors raised by limpack."""


class GraphInputError(LimpackError, ValueError):
    """Malformed input: bad file syntax, out-of-range vertex, bad parameter."""


class PreconditionError(LimpackError, ValueError):
    """An algorithm's structural precondition does not hold for the input."""


class ResourceLimitError(LimpackError, RuntimeError):
    """Instance exceeds a configured size limit or retry budget."""


class InfeasibleError(LimpackError, ValueError):
    """The requested optimization problem has no feasible solution."""
