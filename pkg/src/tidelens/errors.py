"""Exception taxonomy shared across the package.

Everything raised on purpose derives from TidelensError so callers can
catch one base.  DataError covers malformed input files and payloads;
UsageError covers requests that are well-formed data but out of contract
(bad year, bad slider index).  The CLI maps DataError to exit code 1 and
UsageError to exit code 2.
"""


class TidelensError(Exception):
    """Base class for all errors raised by this package."""


class DataError(TidelensError):
    """An input file or payload violates its documented format."""


class UsageError(TidelensError):
    """A request or invocation is malformed or out of range."""


# ---- raster grids

class MissingHeaderKey(DataError):
    """A required ASCII-grid header key is absent."""


class ValueCountMismatch(DataError):
    """The ASCII-grid body holds more or fewer values than nrows*ncols."""


class NonNumericToken(DataError):
    """A grid token could not be read as a number."""


class OutOfExtent(UsageError):
    """A sample point lies outside the grid's bounding box."""


class NoDataNeighborhood(TidelensError):
    """Interpolation would touch a NoData cell; refusing to invent ground."""


# ---- geodesy

class AnchorTooFar(TidelensError):
    """A coordinate is too far from the anchor for the flat-plane projection."""


# ---- projection curves

class DuplicateYear(DataError):
    """The same year appears twice in a projection curve."""


class CoverageGap(DataError):
    """Curve anchors do not span the full timeline."""


class NonNumericField(DataError):
    """A curve field could not be read as a number."""


# ---- timeline

class IndexOutOfRange(UsageError):
    """A slider index is outside the timeline."""


class YearOutOfRange(UsageError):
    """A year is outside the timeline."""


# ---- flooding

class SeedOutOfBounds(TidelensError):
    """A flood seed names a cell outside the grid."""


class DimensionMismatch(TidelensError):
    """Two grids that must share a shape do not."""


# ---- point-of-interest catalogs

class DuplicateId(DataError):
    """Two catalog records share an id."""


class PositionOutsideScene(DataError):
    """A catalog record projects outside the DEM extent."""


class MissingField(DataError):
    """A catalog record lacks a required field."""


# ---- configuration

class ConfigError(DataError):
    """The app configuration file is unusable."""
