class ConfigurationError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class TorsionInput(ValueError):
    pass


class DimensionExceeded(ValueError):
    pass


class NonDivisor(ValueError):
    pass


class ResourceCapExceeded(RuntimeError):
    pass
