"""Exception taxonomy.

The CLI maps these onto exit codes: invalid input -> 2, contract
violation -> 3, internal inconsistency -> 4.
"""


class ZigzagError(Exception):
    exit_code = 1


class InvalidInputError(ZigzagError):
    """Malformed or out-of-domain input (bad file, invalid filtration...)."""

    exit_code = 2


class NotAManifoldError(InvalidInputError):
    """The complex fails the closed-manifold requirements."""


class ContractViolationError(ZigzagError):
    """An operation was called outside its stated precondition."""

    exit_code = 3


class NotNonRepetitiveError(ContractViolationError):
    """A simplex is re-added after being deleted."""


class NotUpDownError(ContractViolationError):
    pass


class NotStandardizedError(ContractViolationError):
    pass


class InvalidDiamondError(ContractViolationError):
    """Attempt to switch the deletion and addition of the same simplex."""


class InvalidSwitchError(ContractViolationError):
    """A switch whose result would not be a valid filtration."""


class InvalidConeError(ContractViolationError):
    """Coning a simplex over an apex it already contains."""


class ContextMismatchError(ContractViolationError):
    """Barcodes compared across different module lengths or kinds."""


class InternalInconsistencyError(ZigzagError):
    """Computed data contradicts itself; indicates an upstream bug."""

    exit_code = 4
