"""Exception types shared across the toolkit."""


class IsoflowError(Exception):
    """Base class for all toolkit errors."""


class InvalidIntervalError(IsoflowError):
    """An interval was given with lo >= hi."""


class InvalidParameterError(IsoflowError):
    """A scalar parameter is outside its admissible range."""


class InvalidProfileError(IsoflowError):
    """A 1-D profile violates a structural requirement (e.g. positivity)."""


class OutOfChartError(IsoflowError):
    """A point lies outside the coordinate chart it was evaluated in."""


class OutOfRangeError(IsoflowError):
    """A level value lies outside the range covered by a piece."""


class StencilError(IsoflowError):
    """A finite-difference stencil does not fit inside the grid."""


class InvalidConnectionError(IsoflowError):
    """A connection sample is not skew-symmetric."""


class InvalidFamilyError(IsoflowError):
    """A metric family sample is not positive definite."""


class UnbalancedMassError(IsoflowError):
    """Two densities that must have equal total mass do not."""


class InvalidDensityError(IsoflowError):
    """A density field is not strictly positive."""


class CollarMismatchError(IsoflowError):
    """Densities that must agree on the boundary collar do not."""


class SolverFailureError(IsoflowError):
    """An iterative or spectral solve did not reach its tolerance."""


class CannotBalanceError(IsoflowError):
    """The level-average of the source Laplacian varies across the
    cross-section, so no single target profile can balance it."""


class BalanceViolationError(IsoflowError):
    """The cumulative correction fails to vanish on the far collar."""


class LaplacianShiftIdentityError(IsoflowError):
    """The conformal Laplacian shift identity failed its cross-check."""


class SeamError(IsoflowError):
    """Boundary data of two pieces disagree beyond tolerance at a seam."""


class NotTransnormalError(IsoflowError):
    """The gradient norm is not a single-valued function of the level."""


class NotIsoparametricError(IsoflowError):
    """The Laplacian is not a single-valued function of the level."""


class GeodesicRoutingError(IsoflowError):
    """A geodesic failed to reach its target region."""


class NumericFailure(IsoflowError):
    """An integration or solve blew up; carries a diagnostic report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotMorseBottError(IsoflowError):
    """A critical-set normal Hessian is rank deficient or indefinite."""


class InvalidCurvatureProfileError(IsoflowError):
    """A principal-curvature profile has a non-removable singularity."""


class OrientationError(IsoflowError):
    """A map's Jacobian determinant is non-positive somewhere."""


class PreconditionError(IsoflowError):
    """A documented operation precondition was violated."""


class ScenarioConfigError(IsoflowError):
    """A scenario configuration file is malformed or inconsistent."""
