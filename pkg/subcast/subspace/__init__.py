from .grassmannian import (
    enumerate_grassmannian,
    enumerate_projective_space,
    gaussian_binomial,
    projective_space_size,
    singer_orbits,
)
from .subspace import (
    Subspace,
    apply_matrix,
    contains,
    distance,
    from_generators,
    full,
    intersect,
    subspace_sum,
    zero,
)

__all__ = [
    "Subspace",
    "apply_matrix",
    "contains",
    "distance",
    "enumerate_grassmannian",
    "enumerate_projective_space",
    "from_generators",
    "full",
    "gaussian_binomial",
    "intersect",
    "projective_space_size",
    "singer_orbits",
    "subspace_sum",
    "zero",
]
