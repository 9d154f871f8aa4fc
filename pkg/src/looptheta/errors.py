"""Exception types shared across the library."""


class LoopThetaError(Exception):
    """Base class for all library errors."""


class WindowOverflow(LoopThetaError):
    """An operation needed Laurent coefficients outside the configured window.

    The caller should widen the global truncation depth and retry.
    """


class InvalidParams(LoopThetaError):
    """Unipotent parameters violate a symmetry or order-of-t constraint."""


class NotInU(LoopThetaError):
    """Matrix does not stabilize the flag defining the unipotent radical."""


class NonzeroC(LoopThetaError):
    """The lower-left block of the element is nonzero; only c = 0 operators
    are supported."""


class UnsupportedElement(LoopThetaError):
    """Element is not one of the pure unipotent generator types."""


class NotInStabilizer(LoopThetaError):
    """The element does not fix the given tensor vector."""


class PrecisionFailure(LoopThetaError):
    """A numerical oracle did not stabilize within its precision ladder."""


class UnsupportedTwoAdic(LoopThetaError):
    """Dyadic data outside the supported range."""


class MassMismatch(LoopThetaError):
    """Ideal class enumeration terminated without meeting the mass formula."""


class NormalizationFailure(LoopThetaError):
    """Brandt row sums differ from l + 1, signalling a bad lattice scaling."""


class IrrationalEigenvalue(LoopThetaError):
    """A Brandt characteristic polynomial does not split over the rationals."""


class UnsupportedPrime(LoopThetaError):
    """Prime outside the supported congruence class."""


class InvalidShape(LoopThetaError):
    """Standard-form parameters violate the shape constraints."""


class DivergentTail(LoopThetaError):
    """The imaginary part of the evaluation point is not positive definite."""


class DepthOverflow(LoopThetaError):
    """The requested tail accuracy is unreachable within the depth cap."""


class ModulesDiffer(LoopThetaError):
    """Diagnostic: the torsion module invariants differ."""


class TensorsDiffer(LoopThetaError):
    """Diagnostic: the modules agree but the symmetric tensors differ."""
