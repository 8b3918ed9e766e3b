"""
Exception hierarchy

Every error raised on purpose by the engine derives from WkbEngineError so the
CLI can map it to an exit status.
"""


class WkbEngineError(Exception):
    """Base class for engine errors."""


class DimensionMismatchError(WkbEngineError, ValueError):
    """Operands live in different numbers of variables."""

    def __init__(self, left: int, right: int, what: str = "operands"):
        super().__init__(f"dimension mismatch between {what}: {left} != {right}")
        self.left = left
        self.right = right


class IndexOutOfRangeError(WkbEngineError, ValueError):
    """A variable index exceeds the dimension."""

    def __init__(self, name: str, index: int, dim: int):
        super().__init__(f"index out of range: {name}{index} with dim {dim}")
        self.name = name
        self.index = index
        self.dim = dim


class NotClosedFormError(WkbEngineError):
    """A differential form fails a compatibility condition."""

    def __init__(self, pair: tuple[str, ...], detail: str = ""):
        label = ", ".join(pair)
        message = f"form is not closed: compatibility ({label}) fails"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.pair = pair


class NotInvertibleError(WkbEngineError):
    """Principal symbol is zero or not a constant."""


class SquareRootError(WkbEngineError):
    """Square root preconditions are not met."""


class NotSymplecticError(WkbEngineError):
    """A symplectic map fails a bracket or inverse identity."""

    def __init__(self, identity: str):
        super().__init__(f"map is not symplectic: {identity}")
        self.identity = identity


class QuantizationError(WkbEngineError):
    """The correction solver could not cancel the commutator defects."""

    def __init__(self, order: int, defects: dict[str, str]):
        listing = "; ".join(f"{name} = {value}" for name, value in defects.items())
        super().__init__(f"quantization failed at tau-order {order}: {listing}")
        self.order = order
        self.defects = defects


class NotInnerError(WkbEngineError):
    """An automorphism is not Ad(P) within the window."""

    def __init__(self, order: int, reason: str):
        super().__init__(f"not an inner automorphism at tau-order {order}: {reason}")
        self.order = order
        self.reason = reason


class DepthExhaustedError(WkbEngineError):
    """The reliability window of a result is empty."""


class CoveringInconsistentError(WkbEngineError):
    """Descent data do not satisfy the structural preconditions."""


class NonCentralDefectError(WkbEngineError):
    """A defect that must be central has a non-constant part."""

    def __init__(self, check: str, indices: tuple, residual: str):
        super().__init__(f"{check} defect at {indices} is not central: residual {residual}")
        self.check = check
        self.indices = indices
        self.residual = residual


class ExpressionSyntaxError(WkbEngineError, ValueError):
    """The expression text does not match the grammar."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class DocumentError(WkbEngineError, ValueError):
    """A JSON document is malformed."""


class NotHomogeneousError(WkbEngineError, ValueError):
    """A polynomial in (x, ξ, τ) is not homogeneous of the requested degree."""
