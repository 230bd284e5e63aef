"""Error types shared across the package.

The CLI maps UnsupportedInput (and subclasses) to exit code 3; everything
else that escapes is a genuine bug.  Plain ValueError / IndexError keep
their usual meaning for malformed arguments.
"""


class UnsupportedInput(ValueError):
    """Input is well-formed but outside what this package supports."""


class UnsupportedWeight(UnsupportedInput):
    """Weight is odd, too small, or has no rational Hecke eigenbasis."""


class IrrationalEigenspace(UnsupportedWeight):
    """The Hecke eigenvalues of this space generate a nontrivial number field."""


class EmptySpace(UnsupportedInput):
    """The requested space of cusp forms is zero-dimensional."""


class InsufficientPrecision(UnsupportedInput):
    """A q-expansion coefficient beyond the computed precision was requested."""


class NonPrime(UnsupportedInput):
    """A prime argument was not prime."""


class GenusTooLarge(UnsupportedInput):
    """Genus (or derived degree) exceeds the supported cap."""


class ExpansionTooLarge(UnsupportedInput):
    """An expanded coefficient list was requested above the expansion cap."""


class OutOfConvergenceRegion(UnsupportedInput):
    """Evaluation point lies outside the stated half-plane of convergence."""
