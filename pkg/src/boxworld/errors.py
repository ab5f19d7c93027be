"""Typed exceptions raised by the exact core and the protocol engine."""


class BoxworldError(Exception):
    """Base class for all library errors."""


class NonDyadicDivisionError(BoxworldError):
    """Division of a dyadic rational by something other than a power of two."""


class ShapeMismatchError(BoxworldError):
    """Operands live on different numbers of parties."""


class RoleMismatchError(BoxworldError):
    """State/effect role of an operand is not the one required."""


class InvalidTensorError(BoxworldError):
    """Tensor rejected at construction (bad length, zero tensor, N = 0)."""


class NotNormalizedError(InvalidTensorError):
    """State tensor whose pairing with the deterministic effect is not 1."""


class InvalidTableError(BoxworldError):
    """Conditional probability table violating positivity or normalization."""


class SignallingTableError(BoxworldError):
    """Table whose fiducial inversion is inconsistent across inputs."""


class InvalidConventionError(BoxworldError):
    """Fiducial convention whose effects do not form tests spanning R^3."""


class CatalogIndexError(BoxworldError, IndexError):
    """Catalog selector out of range."""


class DiscardsAllPartiesError(BoxworldError):
    """Marginalization that would leave no parties (a scalar)."""


class UnsupportedSystemError(BoxworldError):
    """Operation requested outside its supported party count."""


class NonDeterministicParityError(BoxworldError):
    """Box table without a deterministic global output parity at some input."""


class NoSeparatingInputError(BoxworldError):
    """No input string distinguishes the two tables' output parities."""
