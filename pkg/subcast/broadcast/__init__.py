from .clouds import (
    CloudDecomposition,
    cloud_center_min_distance,
    cloud_centers,
    clouds,
    decompose,
)
from .construct import singer_construct
from .decode import MinDistanceDecoder, User, min_distance_decode
from .encoder import (
    BroadcastEncoder,
    Rate,
    SeparationVector,
    code_of,
    dump_encoder,
    encoder_from_table,
    encoder_from_words,
    load_encoder,
    rate_pair,
    separation_vector,
)
from .search import SearchResult, enumerate_encoders, greedy_cloud_search

__all__ = [
    "BroadcastEncoder",
    "CloudDecomposition",
    "MinDistanceDecoder",
    "Rate",
    "SearchResult",
    "SeparationVector",
    "User",
    "cloud_center_min_distance",
    "cloud_centers",
    "clouds",
    "code_of",
    "decompose",
    "dump_encoder",
    "encoder_from_table",
    "encoder_from_words",
    "enumerate_encoders",
    "greedy_cloud_search",
    "load_encoder",
    "min_distance_decode",
    "rate_pair",
    "separation_vector",
    "singer_construct",
]
