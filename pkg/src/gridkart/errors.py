"""Exception types shared across the pipeline stages."""


class GridKartError(Exception):
    """Base class for all gridkart errors."""


class FewerThanThreePoints(GridKartError):
    """Plane fitting was asked to run on a cloud with fewer than 3 points."""


class DegenerateSamples(GridKartError):
    """Every sampled point triple was collinear; no plane could be fitted."""


class ConfigExceedsGrid(GridKartError):
    """Planner expansion count would index past the top row of the grid."""


class GoalAtOrigin(GridKartError):
    """Pure pursuit received a goal at zero distance."""


class InvalidGeometry(GridKartError):
    """Track generator parameters do not describe a buildable track."""


class ParseError(GridKartError):
    """Config text could not be parsed.

    Carries the 1-based line number when known.
    """

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class ValidationError(GridKartError):
    """One or more config values violate a documented constraint.

    ``violations`` is a list of ``(key_path, message)`` pairs, e.g.
    ``("planner.half_width", "must be >= 1 (got 0)")``.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = [f"{path}: {msg}" for path, msg in self.violations]
        super().__init__("invalid configuration:\n  " + "\n  ".join(lines))
