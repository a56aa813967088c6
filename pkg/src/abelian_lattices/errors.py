"""Exception types shared by the package.

The CLI maps these onto process exit codes: UsageError and its
subclasses exit with 2, InternalInvariantError with 3.
"""

from __future__ import annotations


class UsageError(ValueError):
    'A caller violated a documented precondition (bad input, bad shape).'


class InvalidOrderError(UsageError):
    'A relation failed to be a partial order (antisymmetry broke under closure).'


class NotALatticeError(UsageError):
    'A poset is missing a meet or a join; args carry a witness pair of ids.'

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(UsageError):
    'A computation was refused because it exceeds a configured size bound.'


class InternalInvariantError(RuntimeError):
    """Something the implementation guarantees failed to hold.

    Raised, for example, when a quotient that is provably integral once the
    preceding divisibility conditions passed turns out not to be.  Seeing
    this exception means a bug, not bad input.
    """
