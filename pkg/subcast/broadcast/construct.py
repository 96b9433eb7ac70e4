from typing import Sequence

from ..errors import EncoderError
from ..gf.field import field_for_order
from ..gf.matrix import matrix_power
from ..gf.singer import singer_matrix
from ..multishot.word import Code, Word
from ..subspace.subspace import apply_matrix
from .encoder import BroadcastEncoder


def singer_construct(aux: Code, exponents: Sequence[int]) -> BroadcastEncoder:
    """Clouds as Singer translates of a constant-dimension single-shot code.

    Message m1 is the m1-th auxiliary word in canonical order; message m2
    selects the translate by ``S ** exponents[m2 - 1]``."""

    if aux.n != 1:
        raise EncoderError(f"Singer translation needs single-shot words, got n = {aux.n}")
    dims = {w.shots[0].dim for w in aux.words}
    if len(dims) != 1:
        raise EncoderError(f"auxiliary code is not constant-dimension: dimensions {sorted(dims)}")
    if not exponents:
        raise EncoderError("at least one translate exponent is needed")
    group_order = aux.q**aux.m - 1
    if len(set(exponents)) != len(exponents):
        raise EncoderError("translate exponents must be distinct")
    bad = [j for j in exponents if not 0 <= j < group_order]
    if bad:
        raise EncoderError(f"translate exponent {bad[0]} outside [0, {group_order})")

    spec = field_for_order(aux.q)
    s = singer_matrix(spec, aux.m)
    powers = [matrix_power(spec, s, j) for j in exponents]
    table = tuple(
        tuple(Word(aux.q, aux.m, (apply_matrix(p, x.shots[0]),)) for p in powers)
        for x in aux.words
    )
    # injectivity is checked on construction; a collision means two
    # translates coincide
    return BroadcastEncoder(aux.q, aux.m, 1, len(aux.words), len(exponents), table)
