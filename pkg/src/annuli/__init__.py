"""Free boundary minimal annuli in S^2_+ x S^1 with the product metric.

Rotationally symmetric annuli ``f(theta, t) = (x(r(t), theta), t)`` are
minimal when the profile solves ``r'' = (1 + r'^2) cot r``.  The profiles that
close up over the circle form a discrete family indexed by the number n >= 2
of oscillations per revolution; as n grows the profiles dip toward the pole,
r_min -> 0, and the second fundamental form blows up.
"""

__version__ = "0.1.0"

from .elliptic import agm, complete_elliptic_k, jacobi_cd, jacobi_sn_cn_dn  # noqa: E402
from .profile import (  # noqa: E402
    ProfileConstant,
    ProfileCurve,
    closed_form_profile,
    first_integral,
    integrate_profile,
    measure_period,
    ode_rhs,
)
from .spectrum import ModeSolution, period_of, solve_mode, spectrum  # noqa: E402
from .surface import (  # noqa: E402
    AnnulusSurface,
    area,
    first_variation_check,
    frame_at,
    free_boundary_check,
    mean_curvature,
    noncompactness_report,
    shape_operator,
    sup_second_fundamental_form,
)

__all__ = [
    "agm",
    "complete_elliptic_k",
    "jacobi_sn_cn_dn",
    "jacobi_cd",
    "ProfileConstant",
    "ProfileCurve",
    "ode_rhs",
    "first_integral",
    "closed_form_profile",
    "integrate_profile",
    "measure_period",
    "ModeSolution",
    "period_of",
    "solve_mode",
    "spectrum",
    "AnnulusSurface",
    "frame_at",
    "shape_operator",
    "mean_curvature",
    "sup_second_fundamental_form",
    "free_boundary_check",
    "area",
    "first_variation_check",
    "noncompactness_report",
]
