"""Exact computations on cones of nonnegative forms and sums of powers over the sphere."""
from .errors import ConecalcError
from .poly import HomoForm, format_form, parse_form, r_power
from .sphere import inner_product, integral, norm_squared, sphere_max, sphere_min
from .harmonic import dim_forms, dim_harmonics, dual_point, harmonic_decompose, legendre_harmonic
from .power import apply_t, power_expansion, t_coefficients, volume_ratio_bound
from .cone import (
    certify_nonnegative,
    certify_sum_of_powers,
    john_ball_C,
    lf_loewner,
    loewner_ball_Cstar,
    max_extreme_form,
    symmetry_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "ConecalcError", "HomoForm", "format_form", "parse_form", "r_power",
    "inner_product", "integral", "norm_squared", "sphere_max", "sphere_min",
    "dim_forms", "dim_harmonics", "dual_point", "harmonic_decompose", "legendre_harmonic",
    "apply_t", "power_expansion", "t_coefficients", "volume_ratio_bound",
    "certify_nonnegative", "certify_sum_of_powers", "john_ball_C", "lf_loewner",
    "loewner_ball_Cstar", "max_extreme_form", "symmetry_coefficient",
]
