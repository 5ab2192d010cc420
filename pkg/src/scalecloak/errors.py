"""Exception hierarchy shared by all scalecloak modules."""


class ScaleCloakError(Exception):
    """Base class for all errors raised by this package."""


class ImagingError(ScaleCloakError):
    """Base class for image I/O and validation errors."""


class UnreadableFileError(ImagingError):
    """The file does not exist or cannot be opened for reading."""


class UnsupportedFormatError(ImagingError):
    """The file is not one of the supported raster formats."""


class CorruptStreamError(ImagingError):
    """The file looks like a supported format but its contents are invalid."""


class DimensionError(ScaleCloakError):
    """Image or operand dimensions violate an operation's contract."""


class SolverError(ScaleCloakError):
    """A quadratic subproblem received malformed inputs."""


class DatasetError(ScaleCloakError):
    """A dataset, manifest, or poisoning configuration is invalid."""


class PlanError(ScaleCloakError):
    """An experiment plan file is missing, malformed, or inconsistent."""
