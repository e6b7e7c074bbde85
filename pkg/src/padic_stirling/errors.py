"""Exception types shared across the package."""


class PadicError(Exception):
    """Base class for all package errors."""


class GuardExceeded(PadicError):
    """A valuation could not be certified below the precision guard."""

    def __init__(self, what: str, guard: int):
        super().__init__(f"{what}: no nonzero residue below p^{guard}")
        self.guard = guard


class NotPLocal(PadicError):
    """A rational value has a denominator divisible by p."""


class DivisibilityViolation(PadicError):
    """An exact division that must succeed left a remainder."""


class CharacterizationMismatch(PadicError):
    """Two equivalent descriptions of a set disagreed."""


class DepthCapExceeded(PadicError):
    """The congruence-class search left classes open at the depth cap."""

    def __init__(self, n: int, p: int, best: int, k_max, open_classes):
        self.n = n
        self.p = p
        self.best = best
        self.k_max = k_max
        self.open_classes = list(open_classes)
        super().__init__(
            f"ebar_{p}({n}): {len(self.open_classes)} classes still open at the depth cap "
            f"(best so far {best} at k={k_max})"
        )


class StabilityNotReached(PadicError):
    """The James-number computation has not stabilized in L."""


class Unsupported(PadicError):
    """The requested case is outside what the library handles."""
