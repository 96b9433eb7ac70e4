import itertools

import pytest

from subcast.broadcast import (
    MinDistanceDecoder,
    greedy_cloud_search,
    load_encoder,
    min_distance_decode,
)
from subcast.broadcast.encoder import separation_vector
from subcast.errors import AmbientMismatchError
from subcast.multishot import WordSpace, word, word_distance
from subcast.subspace import zero

from ..fixtures import SubcastFileFixtureFactory


def test_decode_codewords(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("two_clouds"))
    dec = MinDistanceDecoder(e)
    for m1, m2, w in e.entries():
        assert dec.decode(w, 1) == m1
        assert dec.decode(w, 2) == m2
        assert min_distance_decode(e, w, 2) == m2


def test_tie_break(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("singer_lines"))
    # the zero space is at distance 1 from all three lines; <01> is the
    # smallest of them and sits at m2 = 1
    y = word(zero(2, 2))
    assert MinDistanceDecoder(e).nearest(y)[1:] == (1, 1)
    assert min_distance_decode(e, y, 2) == 1


def test_decode_errors(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("two_clouds"))
    with pytest.raises(AmbientMismatchError):
        min_distance_decode(e, word(zero(2, 3)), 1)
    with pytest.raises(ValueError, match="user must be"):
        min_distance_decode(e, word(zero(2, 2)), 3)  # type: ignore[arg-type]


def test_decoding_guarantee_exhaustive() -> None:
    # every received word strictly within half the separation decodes right
    res = greedy_cloud_search(2, 3, 1, None, 1, 2, 2)
    assert res.encoder is not None
    e = res.encoder
    sv = separation_vector(e)
    dec = MinDistanceDecoder(e)
    space = WordSpace(2, 3, 1)
    for (m1, m2, x), yi in itertools.product(list(e.entries()), range(space.size)):
        y = space.word(yi)
        d = word_distance(x, y)
        if sv.s1 is None or 2 * d < sv.s1:
            assert dec.decode(y, 1) == m1
        if sv.s2 is None or 2 * d < sv.s2:
            assert dec.decode(y, 2) == m2
