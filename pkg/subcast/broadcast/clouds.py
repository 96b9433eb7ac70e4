"""Superposition structure of a broadcast code.

A cloud collects the codewords sharing one M2 value. When s1 < s2, a cloud
containing a closest codeword pair serves as an auxiliary code through which
every codeword factors: gamma(M1, M2) = gamma2(gamma1(M1), M2).
"""

from dataclasses import dataclass
import itertools

from ..errors import HypothesisError, TheoremViolationError
from ..multishot.word import Code, Word, code_new, word_distance
from .encoder import BroadcastEncoder, SeparationVector, separation_vector


def clouds(e: BroadcastEncoder) -> dict[int, Code]:
    return {
        m2: code_new(e.word_at(m1, m2) for m1 in range(1, e.m1_size + 1))
        for m2 in range(1, e.m2_size + 1)
    }


@dataclass(frozen=True)
class CloudDecomposition:
    encoder: BroadcastEncoder
    separation: SeparationVector
    base_m2: int
    aux_code: Code
    gamma1: tuple[Word, ...]
    """``gamma1[m1 - 1]`` is the auxiliary codeword for message m1."""
    clouds: dict[int, Code]
    centers: dict[int, Word]

    def gamma2(self, x: Word, m2: int) -> Word:
        """The codeword of cloud ``m2`` that corresponds to auxiliary word ``x``."""
        try:
            m1 = self.gamma1.index(x) + 1
        except ValueError:
            raise ValueError(f"{x} is not an auxiliary codeword") from None
        return self.encoder.word_at(m1, m2)


def _min_distance(words: tuple[Word, ...]) -> int | None:
    if len(words) < 2:
        return None
    return min(word_distance(x, y) for x, y in itertools.combinations(words, 2))


def decompose(e: BroadcastEncoder) -> CloudDecomposition:
    sv = separation_vector(e)
    if sv.s1 is None or sv.s2 is None:
        raise HypothesisError("decompose", f"separation vector {sv} has an unbounded component")
    if sv.s1 >= sv.s2:
        raise HypothesisError("decompose", f"needs s1 < s2, got {sv}")
    s1, s2 = sv.s1, sv.s2

    # the first closest pair in table order; it cannot straddle two clouds
    # since cross-cloud distances are at least s2 > s1
    base_m2: int | None = None
    for (a1, a2, x), (b1, b2, y) in itertools.combinations(e.entries(), 2):
        if word_distance(x, y) == s1:
            if a2 != b2:
                raise TheoremViolationError(
                    "cloud factorization",
                    f"closest pair {(a1, a2)}, {(b1, b2)} lies in different clouds",
                )
            base_m2 = a2
            break
    assert base_m2 is not None

    cl = clouds(e)
    gamma1 = tuple(e.word_at(m1, base_m2) for m1 in range(1, e.m1_size + 1))
    d = CloudDecomposition(
        encoder=e,
        separation=sv,
        base_m2=base_m2,
        aux_code=cl[base_m2],
        gamma1=gamma1,
        clouds=cl,
        centers={m2: c.words[0] for m2, c in cl.items()},
    )

    for m1, m2, w in e.entries():
        if d.gamma2(gamma1[m1 - 1], m2) != w:
            raise TheoremViolationError("cloud factorization", f"messages {(m1, m2)}")
    for m2 in range(1, e.m2_size + 1):
        members = tuple(e.word_at(m1, m2) for m1 in range(1, e.m1_size + 1))
        dmin = _min_distance(members)
        if dmin is not None and dmin < s1:
            raise TheoremViolationError(
                "intra-cloud separation", f"cloud {m2} has minimum distance {dmin} < s1 = {s1}"
            )
    for a, b in itertools.combinations(range(1, e.m2_size + 1), 2):
        for x in cl[a]:
            for y in cl[b]:
                if word_distance(x, y) < s2:
                    raise TheoremViolationError(
                        "cross-cloud separation", f"clouds {a} and {b} closer than s2 = {s2}"
                    )
    return d


def cloud_centers(d: CloudDecomposition) -> dict[int, Word]:
    """The lexicographically smallest word of every cloud."""
    return dict(d.centers)


def cloud_center_min_distance(d: CloudDecomposition) -> int | None:
    """Achieved minimum distance among cloud centers; None for a single cloud."""
    return _min_distance(tuple(d.centers[m2] for m2 in sorted(d.centers)))
