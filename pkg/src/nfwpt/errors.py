"""Exception types shared across the package."""


class SingularGeometryError(ValueError):
    """An evaluation point coincides with a radiating element."""


class RadiatorInsideSphereError(ValueError):
    """A sampling sphere touches or contains a radiating element."""


class UnreachableTargetError(ValueError):
    """No configuration can deliver the requested power."""


class OptimizationError(RuntimeError):
    """The optimizer hit a non-finite objective value."""


class ScenarioError(ValueError):
    """Bad scenario configuration text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
