import itertools

import pytest

from subcast.errors import AmbientMismatchError
from subcast.multishot import Code, Word, code_min_distance, code_new, profile, word, word_distance
from subcast.subspace import enumerate_grassmannian, enumerate_projective_space, full, zero


def test_word_distance() -> None:
    z, f = zero(2, 2), full(2, 2)
    l1, l2, _ = enumerate_grassmannian(2, 2, 1)

    x = word(z, z)
    assert word_distance(x, x) == 0
    assert word_distance(x, word(f, f)) == 4
    assert word_distance(word(l1, z), word(l2, l1)) == 3

    with pytest.raises(AmbientMismatchError):
        word_distance(word(z), word(z, z))
    with pytest.raises(AmbientMismatchError):
        word(z, zero(2, 3))
    with pytest.raises(ValueError):
        word()


def test_word_metric_axioms_two_shots() -> None:
    alphabet = enumerate_projective_space(2, 2)
    words = [word(a, b) for a in alphabet for b in alphabet]
    d = [[word_distance(x, y) for y in words] for x in words]
    idx = range(len(words))
    for i in idx:
        for j in idx:
            assert d[i][j] == d[j][i]
            assert (d[i][j] == 0) == (i == j)
    for i, j, k in itertools.product(idx, idx, idx):
        assert d[i][j] <= d[i][k] + d[k][j]


def test_profile_and_order() -> None:
    z, f = zero(2, 2), full(2, 2)
    l1, _, _ = enumerate_grassmannian(2, 2, 1)
    w = word(l1, f, z)
    assert profile(w) == (1, 2, 0)
    assert w.n == 3
    assert word(z, f) < word(l1, z)
    assert str(word(z, l1)) == "(<0>, <01>)"
    assert Word.from_json(2, 2, w.to_json()) == w


def test_code_min_distance() -> None:
    z, f = zero(2, 2), full(2, 2)
    lines = enumerate_grassmannian(2, 2, 1)

    everything = code_new(word(u) for u in enumerate_projective_space(2, 2))
    assert len(everything) == 5
    assert code_min_distance(everything) == 1
    assert code_min_distance(code_new([word(z), word(f)])) == 2
    assert code_min_distance([word(u) for u in lines]) == 2

    with pytest.raises(ValueError, match="at least two"):
        code_min_distance(code_new([word(z)]))


def test_code_new() -> None:
    z, f = zero(2, 2), full(2, 2)
    c = code_new([word(f), word(z), word(f)])
    assert isinstance(c, Code)
    assert c.words == (word(z), word(f))
    assert word(z) in c
    assert word(enumerate_grassmannian(2, 2, 1)[0]) not in c
    assert Code.from_json(2, 2, c.to_json()) == c

    with pytest.raises(ValueError):
        code_new([])
    with pytest.raises(AmbientMismatchError):
        code_new([word(z), word(z, z)])
