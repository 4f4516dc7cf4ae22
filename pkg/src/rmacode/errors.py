class ParameterError(ValueError):
    """Code or sub-code parameters outside their admissible range."""


class DimensionError(ValueError):
    """A vector or message has the wrong length for the configured code."""


class GuardrailError(RuntimeError):
    """An exhaustive computation would exceed its configured size limit."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: {size} exceeds limit {limit}")


class NoWitnessError(LookupError):
    """The closed form has no prefix-form codeword weight to maximise over.

    Use the brute-force evaluation for such parameters.
    """
