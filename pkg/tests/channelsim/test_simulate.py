import pytest

from subcast.broadcast import BroadcastEncoder, load_encoder
from subcast.channelsim import (
    ChannelModel,
    adversarial_channel,
    erasure_channel,
    matrix_channel,
    simulate,
)
from subcast.utils.porcelain import dumps_canonical

from ..fixtures import SubcastFileFixtureFactory


def test_noiseless(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    rep = simulate(e, erasure_channel(0.0), 200, seed=1)
    assert rep.violations == []
    for u in (1, 2):
        st = rep.users[u]
        assert st.decode_errors == 0
        assert st.guarantee_violations == 0
        assert st.guarantee_scope_trials == 200
        assert st.histogram == {0: 200}

    doc = rep.to_json()
    assert doc["trials"] == "200"
    assert doc["seed"] == "1"
    assert doc["separation"] == {"s1": "1", "s2": "2"}
    assert doc["users"]["1"]["histogram"] == {"0": "200"}


def test_thread_count_does_not_change_report(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    model = erasure_channel(0.5)
    one = simulate(e, model, 301, seed=3, threads=1)
    four = simulate(e, model, 301, seed=3, threads=4)
    many = simulate(e, model, 301, seed=3, threads=16)
    assert one.to_json() == four.to_json() == many.to_json()
    assert simulate(e, model, 301, seed=3).to_json() == one.to_json()


def test_erasure_histogram(subcast_file: SubcastFileFixtureFactory) -> None:
    # every codeword is a line, so a trial lands at distance 0 or 1
    e = load_encoder(subcast_file.encoder_text("singer_lines"))
    rep = simulate(e, erasure_channel(0.5), 2000, seed=11, threads=2)
    hist = rep.users[2].histogram
    assert set(hist) <= {0, 1}
    assert sum(hist.values()) == 2000
    assert 0.4 < hist.get(1, 0) / 2000 < 0.6
    assert rep.violations == []


def test_matrix_channel_guarantee(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    for t in range(4):
        rep = simulate(e, matrix_channel(t), 300, seed=t, check_containment=True)
        assert rep.violations == []
        for u in (1, 2):
            assert rep.users[u].guarantee_violations == 0
            assert sum(rep.users[u].histogram.values()) == 300


def test_adversarial_guarantee(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    rep = simulate(e, adversarial_channel(2), 500, seed=5, check_containment=True)
    assert rep.violations == []
    for u in (1, 2):
        assert set(rep.users[u].histogram) <= {0, 1, 2}
    # s2 = 2 only covers distance 0 for the second user
    assert rep.users[2].guarantee_scope_trials == rep.users[2].histogram.get(0, 0)


def test_simulate_rejects_bad_counts(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("layered"))
    with pytest.raises(ValueError, match="trial count"):
        simulate(e, erasure_channel(0.1), 0, seed=0)
    with pytest.raises(ValueError, match="thread count"):
        simulate(e, erasure_channel(0.1), 10, seed=0, threads=0)


SWEEP_TRIALS = 10_000
SWEEP_ENCODERS = ("layered", "singer_lines", "two_clouds")


def _sweep_models(e: BroadcastEncoder) -> list[ChannelModel]:
    top = max(s.dim for _, _, w in e.entries() for s in w.shots)
    models = [erasure_channel(eps) for eps in (0.0, 0.25, 0.5, 1.0)]
    return models + [matrix_channel(t) for t in sorted({1, top})]


@pytest.mark.parametrize("name", SWEEP_ENCODERS)
def test_decoding_guarantee_sweep(name: str, subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text(name))
    for i, model in enumerate(_sweep_models(e)):
        rep = simulate(e, model, SWEEP_TRIALS, seed=100 + i, threads=2, check_containment=True)
        assert rep.violations == [], str(model)
        for u in (1, 2):
            st = rep.users[u]
            assert st.guarantee_violations == 0
            assert sum(st.histogram.values()) == SWEEP_TRIALS
            if model.eps == 0.0:
                assert st.decode_errors == 0
                assert st.histogram == {0: SWEEP_TRIALS}


@pytest.mark.parametrize("name", SWEEP_ENCODERS)
def test_sweep_reports_ignore_threads(name: str, subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text(name))
    model = erasure_channel(0.25)
    one = simulate(e, model, SWEEP_TRIALS, seed=42, threads=1)
    three = simulate(e, model, SWEEP_TRIALS, seed=42, threads=3)
    assert dumps_canonical(one.to_json()) == dumps_canonical(three.to_json())
