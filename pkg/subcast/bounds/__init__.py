from .report import (
    BoundReport,
    GaussianBounds,
    TMode,
    Verdict,
    check_sphere_packing,
    gaussian_bounds_check,
    max_m2_bound,
)
from .sweep import TheoremSweep, verify_theorem
from .tvalue import TValue, t_exact, t_lower_trivial, t_upper_greedy

__all__ = [
    "BoundReport",
    "GaussianBounds",
    "TMode",
    "TValue",
    "TheoremSweep",
    "Verdict",
    "check_sphere_packing",
    "gaussian_bounds_check",
    "max_m2_bound",
    "t_exact",
    "t_lower_trivial",
    "t_upper_greedy",
    "verify_theorem",
]
