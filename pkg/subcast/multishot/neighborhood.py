import itertools

from ..config.schema import DEFAULT_ENUMERATION_LIMIT
from ..errors import check_guard
from ..subspace.grassmannian import enumerate_projective_space, projective_space_size
from .space import WordSpace
from .word import Code, Word, code_new, word_distance


def ball_bruteforce(center: Word, r: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Code:
    """Every word within distance ``r`` of ``center``, found by scanning the
    whole of P(F_q^m)^n with the plain word metric."""

    q, m, n = center.q, center.m, center.n
    check_guard("word space", projective_space_size(q, m) ** n, limit)
    alphabet = enumerate_projective_space(q, m, limit)
    found = []
    for shots in itertools.product(alphabet, repeat=n):
        w = Word(q, m, shots)
        if word_distance(center, w) <= r:
            found.append(w)
    return code_new(found)


def neighborhood_volume(
    c: Code,
    r: int,
    l: int | None = None,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> int:
    """Size of the union of radius-``r`` balls around the codewords. With
    ``l``, balls are taken inside P(F_q^m, l)^n."""

    if r < 0:
        return 0
    space = WordSpace(c.q, c.m, c.n, l, limit)
    return space.neighborhood_mask((space.index(w) for w in c.words), r).bit_count()
