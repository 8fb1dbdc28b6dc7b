"""Coleman maps, local epsilon constants and interpolation maps for characters of Q_p."""

from .padic import PadicNumber, parse_padic, padic_log, padic_exp, teichmuller, DomainError, PrecisionZeroDivisor
from .extensions import unram_ring, cyclo_ring, embedding, normal_basis, Elt
from .powerseries import TruncSeries, TPoly, GroupRingMeasure, mahler, TruncationError
from .characters import Character, gauss_sum, characters_of_conductor_dividing
from .coleman import UnitSystem, family, coleman_series, col_map, L_map, ColemanError
from .epsilon import eps_constant, eps_report, euler_ratio, cohomology_dims, exceptional_qp1_compare, EXCEPTIONAL
from .descent import LatticeM, psi_Mn, xi_Mn, sigma_Mn, verify_descent_square, DescentError

__version__ = "0.1.0"

__all__ = [
    "PadicNumber", "parse_padic", "padic_log", "padic_exp", "teichmuller", "DomainError", "PrecisionZeroDivisor",
    "unram_ring", "cyclo_ring", "embedding", "normal_basis", "Elt",
    "TruncSeries", "TPoly", "GroupRingMeasure", "mahler", "TruncationError",
    "Character", "gauss_sum", "characters_of_conductor_dividing",
    "UnitSystem", "family", "coleman_series", "col_map", "L_map", "ColemanError",
    "eps_constant", "eps_report", "euler_ratio", "cohomology_dims", "exceptional_qp1_compare", "EXCEPTIONAL",
    "LatticeM", "psi_Mn", "xi_Mn", "sigma_Mn", "verify_descent_square", "DescentError",
]
