import pytest

from subcast.broadcast import load_encoder
from subcast.channelsim import (
    ChannelModel,
    RngStream,
    adversarial_channel,
    erasure_channel,
    matrix_channel,
    transmit,
)
from subcast.errors import GuardExceededError
from subcast.multishot import word_distance
from subcast.subspace.subspace import contains

from ..fixtures import SubcastFileFixtureFactory


def test_channel_model_validation() -> None:
    assert str(erasure_channel(0.5)) == "erasure(eps=0.5)"
    assert str(matrix_channel(2)) == "matrix(t=2)"
    assert str(adversarial_channel(1)) == "adversarial(budget=1)"
    assert matrix_channel(0).is_multiplicative
    assert not adversarial_channel(0).is_multiplicative
    assert erasure_channel(0.25).to_json() == {
        "mode": "erasure",
        "t": None,
        "eps": 0.25,
        "budget": None,
    }

    with pytest.raises(ValueError):
        ChannelModel("matrix")
    with pytest.raises(ValueError):
        matrix_channel(-1)
    with pytest.raises(ValueError):
        erasure_channel(1.5)
    with pytest.raises(ValueError):
        adversarial_channel(-1)
    with pytest.raises(ValueError, match="unknown channel mode"):
        ChannelModel("bogus")  # type: ignore[arg-type]


def test_rng_stream() -> None:
    a = RngStream(7).child(3, 1)
    assert a == RngStream(7, (3, 1))
    assert list(a.generator().integers(0, 1000, 8)) == list(a.generator().integers(0, 1000, 8))
    assert list(a.generator().integers(0, 1 << 30, 8)) != list(
        RngStream(7).child(3, 2).generator().integers(0, 1 << 30, 8)
    )


def test_erasure_extremes(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    for _, _, x in e.entries():
        for k in range(5):
            assert transmit(x, erasure_channel(0.0), RngStream(k)) == x
            y = transmit(x, erasure_channel(1.0), RngStream(k))
            assert all(s.dim == 0 for s in y.shots)
            assert word_distance(x, y) == sum(x.profile())


def test_matrix_channel_containment(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    for _, _, x in e.entries():
        for t in range(4):
            for k in range(10):
                y = transmit(x, matrix_channel(t), RngStream(k, (t,)))
                for xs, ys in zip(x.shots, y.shots):
                    assert contains(xs, ys)
                    assert ys.dim <= min(t, xs.dim)
            if t == 0:
                assert all(s.dim == 0 for s in y.shots)


def test_adversarial_budget(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    x = e.word_at(2, 2)
    assert transmit(x, adversarial_channel(0), RngStream(1)) == x
    for k in range(20):
        y = transmit(x, adversarial_channel(2), RngStream(k))
        assert word_distance(x, y) <= 2


def test_adversarial_guard_not_bypassed_by_cache(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    x = e.word_at(1, 1)
    transmit(x, adversarial_channel(1), RngStream(0))
    with pytest.raises(GuardExceededError):
        transmit(x, adversarial_channel(1), RngStream(0), limit=3)
