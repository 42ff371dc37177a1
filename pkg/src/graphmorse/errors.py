"""Exception hierarchy shared by all graphmorse modules."""

from __future__ import annotations


class GraphMorseError(Exception):
    """Base class; ``module`` names the pipeline stage that raised."""

    module = "graphmorse"


class GraphError(GraphMorseError, ValueError):
    module = "graph_model"


class Disconnected(GraphError):
    pass


class NotATree(GraphError):
    pass


class BadRoot(GraphError):
    pass


class TooSmall(GraphMorseError, ValueError):
    module = "config_complex"


class MissingValue(GraphMorseError, KeyError):
    module = "discrete_morse"

    def __str__(self) -> str:
        return Exception.__str__(self)


class NotMorse(GraphMorseError):
    module = "discrete_morse"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(f"function is not a discrete Morse function ({len(self.violations)} violations)")


class CyclicField(GraphMorseError):
    module = "discrete_morse"


class NonTermination(GraphMorseError):
    module = "morse_homology"


class UnsolvableOrder(GraphMorseError):
    module = "gauge"


class NotAClosedCycle(GraphMorseError, ValueError):
    module = "gauge"


class InputError(GraphMorseError, ValueError):
    """Malformed graph input; ``line`` is 1-based when known."""

    module = "cli"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
