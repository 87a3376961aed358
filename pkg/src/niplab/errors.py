"""Exception types shared across the laboratory.

Configuration problems (bad parameters, unusable grids) are ValueErrors;
failures that appear only at run time inside a numerical routine
(eigensolver breakdown, integration blow-up) are RuntimeErrors.  The CLI
maps the former to exit code 2 and the latter to exit code 3.
"""


class ConfigurationError(ValueError):
    """Invalid parameters, grid, or model configuration."""


class NumericalError(RuntimeError):
    """A numerical routine failed (decomposition breakdown, overflow)."""


class InstabilityError(NumericalError):
    """Time integration left the stable regime; message names the step."""
