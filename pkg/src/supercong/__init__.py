"""Exact verification of Franel-number supercongruences and their proof chain."""

__version__ = "0.1.0"

from .exact import NonIntegral, PadicResidue, binomial, fermat_quotient, harmonic, reduce_mod_pk  # noqa: E402
from .gamma_p import GammaArgument, gamma_p, gamma_p_derivative  # noqa: E402
from .quadform import NotRepresentable, PrimeRepresentation, represent  # noqa: E402
from .sequences import bernoulli_number, bernoulli_poly_at, euler_number, franel  # noqa: E402

__all__ = [
    "GammaArgument",
    "NonIntegral",
    "NotRepresentable",
    "PadicResidue",
    "PrimeRepresentation",
    "bernoulli_number",
    "bernoulli_poly_at",
    "binomial",
    "euler_number",
    "fermat_quotient",
    "franel",
    "gamma_p",
    "gamma_p_derivative",
    "harmonic",
    "reduce_mod_pk",
    "represent",
]
