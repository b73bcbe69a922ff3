"""Exception types shared across the package."""


class PTLiouvilleError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(PTLiouvilleError, ValueError):
    """Operands act on different qubit counts or incompatible shapes."""


class ModelConfigError(PTLiouvilleError, ValueError):
    """Malformed model specification or configuration document."""


class LinearDependenceError(PTLiouvilleError, RuntimeError):
    """The adjoint channel set is linearly dependent; the reflection matrix is not unique."""


class UncertifiedModelError(PTLiouvilleError, RuntimeError):
    """The operation needs certified channel constants or symmetry status the model lacks."""


class BrokenPhaseError(PTLiouvilleError, RuntimeError):
    """The model sits in the broken phase where the requested analysis is undefined."""
