"""p-adic valuations of partial Stirling numbers and the exponents built from them."""

from .errors import (
    CharacterizationMismatch,
    DepthCapExceeded,
    DivisibilityViolation,
    GuardExceeded,
    NotPLocal,
    PadicError,
    StabilityNotReached,
    Unsupported,
)
from .exact_arith import INFINITY, PLocalRational, binom_mod_p, digits, factorial_val, gen_binom, val_p
from .partial_stirling import a_p_exact, a_p_val, e_bar_p, e_p, s_p, stirling2_times_fact, tilde_e_p
from .char_sets import phi, tau, thm2_member, thm3_member

__version__ = "0.1.0"

__all__ = [
    "CharacterizationMismatch", "DepthCapExceeded", "DivisibilityViolation", "GuardExceeded",
    "NotPLocal", "PadicError", "StabilityNotReached", "Unsupported",
    "INFINITY", "PLocalRational", "binom_mod_p", "digits", "factorial_val", "gen_binom", "val_p",
    "a_p_exact", "a_p_val", "e_bar_p", "e_p", "s_p", "stirling2_times_fact", "tilde_e_p",
    "phi", "tau", "thm2_member", "thm3_member",
]
