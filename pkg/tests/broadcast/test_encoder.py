from decimal import Decimal
from fractions import Fraction
import json

import pytest

from subcast.broadcast import (
    BroadcastEncoder,
    SeparationVector,
    dump_encoder,
    encoder_from_table,
    encoder_from_words,
    load_encoder,
    rate_pair,
    separation_vector,
)
from subcast.broadcast.encoder import count_encoders, exact_log, format_rate
from subcast.errors import EncoderError
from subcast.multishot import WordSpace, code_min_distance, word
from subcast.subspace import enumerate_grassmannian, full, zero

from ..fixtures import SubcastFileFixtureFactory


def _two_clouds() -> BroadcastEncoder:
    z, f = word(zero(2, 2)), word(full(2, 2))
    l1, l2, _ = (word(u) for u in enumerate_grassmannian(2, 2, 1))
    return encoder_from_table(2, 2, {(1, 1): z, (2, 1): f, (1, 2): l1, (2, 2): l2})


def test_load_encoder_file(subcast_file: SubcastFileFixtureFactory) -> None:
    e = load_encoder(subcast_file.encoder_text("two_clouds"))
    assert (e.q, e.m, e.n, e.m1_size, e.m2_size) == (2, 2, 1, 2, 2)
    assert e.word_at(1, 1) == word(zero(2, 2))
    assert e.word_at(2, 1) == word(full(2, 2))
    assert e == _two_clouds()
    assert load_encoder(dump_encoder(e)) == e


def test_field_spec_carried() -> None:
    doc = json.loads(dump_encoder(_two_clouds()))
    assert doc["field"] == {"p": 2, "e": 1, "modulus": [0, 1]}

    doc["field"] = {"p": 2, "e": 2, "modulus": [1, 1, 1]}
    with pytest.raises(EncoderError, match=r"entries are over GF\(2\)"):
        load_encoder(json.dumps(doc))

    doc["field"] = {"p": 2}
    with pytest.raises(EncoderError, match="malformed field spec"):
        load_encoder(json.dumps(doc))


def test_injectivity(subcast_file: SubcastFileFixtureFactory) -> None:
    with pytest.raises(EncoderError, match="share the codeword"):
        load_encoder(subcast_file.encoder_text("duplicate_word"))

    z = word(zero(2, 2))
    with pytest.raises(EncoderError, match="share the codeword"):
        encoder_from_words([z, z], 1, 2)


def test_malformed_documents() -> None:
    with pytest.raises(EncoderError, match="not a JSON document"):
        load_encoder("{")
    with pytest.raises(EncoderError, match="JSON object"):
        load_encoder("[]")
    with pytest.raises(EncoderError, match="malformed encoder document"):
        load_encoder('{"q": 2}')

    header = {"q": 2, "m": 2, "n": 1, "m1_size": 1, "m2_size": 1}
    for bad in (5, None, "abc", {"m1": 1}):
        with pytest.raises(EncoderError, match="entries must be a list"):
            load_encoder(json.dumps({**header, "entries": bad}))

    doc = json.loads(dump_encoder(_two_clouds()))
    doc["entries"] = doc["entries"][:3]
    with pytest.raises(EncoderError, match="no entry for messages"):
        load_encoder(json.dumps(doc))

    doc = json.loads(dump_encoder(_two_clouds()))
    doc["entries"].append(doc["entries"][0])
    with pytest.raises(EncoderError, match="duplicate entry"):
        load_encoder(json.dumps(doc))

    doc = json.loads(dump_encoder(_two_clouds()))
    doc["entries"][0]["m1"] = 3
    with pytest.raises(EncoderError):
        load_encoder(json.dumps(doc))


def test_shape_checks() -> None:
    z2, z3 = word(zero(2, 2)), word(zero(2, 3))
    with pytest.raises(EncoderError, match="shape"):
        encoder_from_words([z2, z3], 2, 1)
    with pytest.raises(EncoderError, match="need 4 words"):
        encoder_from_words([z2], 2, 2)


def test_separation_vector() -> None:
    assert separation_vector(_two_clouds()) == SeparationVector(1, 1)

    z, f = word(zero(2, 2)), word(full(2, 2))
    single = encoder_from_words([z, f], 2, 1)
    sv = separation_vector(single)
    assert sv == SeparationVector(2, None)
    assert not sv.is_bounded
    assert str(sv) == "(2, unbounded)"
    assert sv.to_json() == {"s1": "2", "s2": "unbounded"}

    assert separation_vector(encoder_from_words([z, f], 1, 2)).s1 is None


def test_separation_is_bounded_by_code_distance() -> None:
    words = list(WordSpace(2, 2, 1).words())
    e = encoder_from_words(words[:4], 2, 2)
    sv = separation_vector(e)
    assert sv.s1 is not None and sv.s2 is not None
    dmin = min(sv.s1, sv.s2)
    assert dmin == code_min_distance(e.code)


def test_rates() -> None:
    assert rate_pair(_two_clouds()) == (Fraction(1), Fraction(1))

    space = WordSpace(2, 2, 2)
    words = list(space.words())
    e = encoder_from_words(words[:8], 8, 1)
    r1, r2 = rate_pair(e)
    assert r1 == Fraction(3, 2)
    assert r2 == 0
    assert format_rate(r1) == "3/2"
    assert format_rate(r2) == "0"

    e3 = encoder_from_words(words[:3], 3, 1)
    r1, _ = rate_pair(e3)
    assert isinstance(r1, Decimal)
    assert str(r1).startswith("0.79248125036057")

    assert exact_log(1, 2) == 0
    assert exact_log(8, 2) == 3
    assert exact_log(6, 2) is None


def test_count_encoders() -> None:
    assert count_encoders(5, 2, 2) == 120
    assert count_encoders(3, 2, 2) == 0
