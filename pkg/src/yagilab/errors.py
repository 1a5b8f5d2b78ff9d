"""Exception types shared across the toolkit.

Every failure the library raises deliberately derives from YagilabError so
callers (and the CLI) can distinguish domain failures from genuine bugs.
"""


class YagilabError(Exception):
    """Base class for all toolkit errors."""


class DomainError(YagilabError):
    """An argument or precondition is outside the physically valid domain."""


class GeometryError(DomainError):
    """Conductor layout is invalid (overlap, coincident wires, bad taper)."""


class DiscretizationError(DomainError):
    """Wire segmentation violates thin-wire validity or count rules."""


class SolverError(YagilabError):
    """Linear-system or field computation failed (singular matrix, dead feed)."""


class ParseError(YagilabError):
    """An input file (JSON design, CSV pattern or sweep) is malformed."""
