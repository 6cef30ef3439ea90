"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A caller-supplied parameter is outside its documented domain."""


class StructuralError(RuntimeError):
    """An internal invariant or an operation precondition was violated."""


class OrientationError(StructuralError):
    """An arc insertion was attempted against the key order."""


class ParseError(ValueError):
    """An input file could not be read as one decimal value per line."""

    def __init__(self, path: str, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no
