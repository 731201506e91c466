"""Exception types shared across the package."""


class KnotObstructError(Exception):
    """Base class for all errors raised by this package."""


class PDSyntaxError(KnotObstructError):
    """Malformed PD-code text."""


class ValidationError(KnotObstructError):
    """Structurally invalid diagram or matrix data."""


class DiagramTooLarge(KnotObstructError):
    """Brute-force state sum refused; use the twist-region method."""


class NormalizationError(KnotObstructError):
    """Bracket exponents inconsistent with the t = A^-4 substitution.

    This is a convention tripwire: it fires only if the smoothing or
    sign conventions have been broken, never on valid knot diagrams.
    """


class NonNormalizable(KnotObstructError):
    """No unit multiple of the polynomial is symmetric with value 1 at t=1."""


class SingularForm(KnotObstructError):
    """The symmetrized Seifert form V + V^T is singular."""


class PreconditionViolation(KnotObstructError):
    """An operation was called outside its stated domain."""


class InconsistentInput(KnotObstructError):
    """Cross-validation between independent computation routes failed."""
