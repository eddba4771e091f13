"""Shared exception types.

``ResourceLimitError`` marks refusals by the built-in resource guards
(character tables above the configured weight, series caps exceeded);
the CLI reports it with a dedicated exit code, distinct from bad input.
"""


class ResourceLimitError(RuntimeError):
    pass
