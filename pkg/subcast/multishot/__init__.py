from .neighborhood import ball_bruteforce, neighborhood_volume
from .space import WordSpace
from .volume import (
    avg_ball_volume,
    ball_volume,
    grassmannian_ball_volume,
    grassmannian_sphere_volume,
    max_ball_volume,
    min_ball_profile,
    min_ball_volume,
    profiles,
    sphere_volume,
    volume_profile_table,
)
from .word import Code, DimVector, Word, code_min_distance, code_new, profile, word, word_distance

__all__ = [
    "Code",
    "DimVector",
    "Word",
    "WordSpace",
    "avg_ball_volume",
    "ball_bruteforce",
    "ball_volume",
    "code_min_distance",
    "code_new",
    "grassmannian_ball_volume",
    "grassmannian_sphere_volume",
    "max_ball_volume",
    "min_ball_profile",
    "min_ball_volume",
    "neighborhood_volume",
    "profile",
    "profiles",
    "sphere_volume",
    "volume_profile_table",
    "word",
    "word_distance",
]
