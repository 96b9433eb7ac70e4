from dataclasses import dataclass
import itertools
from typing import Iterator, Sequence

from .. import log
from ..config.schema import DEFAULT_ENUMERATION_LIMIT
from ..errors import HypothesisError, check_guard
from ..multishot.space import WordSpace
from ..multishot.word import Word
from .encoder import (
    BroadcastEncoder,
    SeparationVector,
    count_encoders,
    encoder_from_words,
    separation_vector,
)


@dataclass(frozen=True)
class SearchResult:
    encoder: BroadcastEncoder | None
    success: bool
    m1_size: int
    m2_size: int
    separation: SeparationVector | None
    reason: str
    singer: bool = False
    """Whether the clouds are Singer translates of the auxiliary code."""


def _meets(s: int | None, target: int) -> bool:
    return s is None or s >= target


def _first_fit(
    space: WordSpace,
    want: int,
    intra: int,
    avoid: Sequence[int],
    cross: int,
    taken: set[int],
) -> list[int]:
    chosen: list[int] = []
    for i in range(space.size):
        if len(chosen) == want:
            break
        if i in taken:
            continue
        if any(space.distance(i, j) < intra for j in chosen):
            continue
        if any(space.distance(i, j) < cross for j in avoid):
            continue
        chosen.append(i)
    return chosen


def _singer_clouds(
    space: WordSpace,
    aux: list[int],
    s2_target: int,
    m2_limit: int | None,
) -> list[list[int]]:
    perm = space.singer_permutation
    group_order = space.q**space.m - 1
    accepted: list[list[int]] = [aux]
    accepted_flat = list(aux)
    current = list(aux)
    for _ in range(1, group_order):
        if m2_limit is not None and len(accepted) >= m2_limit:
            break
        # n == 1 here, so word indices are alphabet indices
        current = [perm[i] for i in current]
        if all(space.distance(i, j) >= s2_target for i in current for j in accepted_flat):
            accepted.append(current)
            accepted_flat.extend(current)
    return accepted


def _generic_clouds(
    space: WordSpace,
    aux: list[int],
    s1_target: int,
    s2_target: int,
    m2_limit: int | None,
) -> list[list[int]]:
    accepted: list[list[int]] = [aux]
    taken = set(aux)
    while m2_limit is None or len(accepted) < m2_limit:
        cloud = _first_fit(space, len(aux), s1_target, sorted(taken), s2_target, taken)
        if len(cloud) < len(aux):
            break
        accepted.append(cloud)
        taken.update(cloud)
    return accepted


def greedy_cloud_search(
    q: int,
    m: int,
    n: int,
    l: int | None,
    s1_target: int,
    s2_target: int,
    m1_target: int,
    m2_limit: int | None = None,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    singer: bool | None = None,
) -> SearchResult:
    """Deterministic first-fit construction.

    The auxiliary code takes words in canonical order at pairwise distance
    at least ``s1_target``. Further clouds are Singer translates of it when
    n = 1 and ``l`` is given, and first-fit clouds of the same size
    otherwise; a cloud is accepted when all its words lie at distance at
    least ``s2_target`` from every earlier cloud.

    ``singer=True`` insists on Singer translates and ``singer=False`` on
    first-fit clouds; the default picks as above."""

    if s1_target < 1 or s2_target < 1 or m1_target < 1:
        raise ValueError("search targets must be positive")
    if m2_limit is not None and m2_limit < 1:
        raise ValueError("cloud limit must be positive")
    use_singer = n == 1 and l is not None
    if singer and not use_singer:
        raise ValueError("Singer translates need n = 1 and a subspace dimension l")
    if singer is not None:
        use_singer = singer
    if s1_target > s2_target:
        raise HypothesisError(
            "greedy_cloud_search", f"needs s1 <= s2, got ({s1_target}, {s2_target})"
        )

    space = WordSpace(q, m, n, l, limit)
    aux = _first_fit(space, m1_target, s1_target, [], 0, set())
    if len(aux) < m1_target:
        return SearchResult(
            None,
            False,
            len(aux),
            0,
            None,
            f"auxiliary code stopped at {len(aux)} of {m1_target} words",
        )

    if use_singer:
        log.D(f"accreting Singer translates for q={q}, m={m}, l={l}")
        cloud_idx = _singer_clouds(space, aux, s2_target, m2_limit)
    else:
        cloud_idx = _generic_clouds(space, aux, s1_target, s2_target, m2_limit)

    m2_size = len(cloud_idx)
    # row m1 holds the m1-th word of every cloud
    words = [space.word(cloud_idx[c][r]) for r in range(m1_target) for c in range(m2_size)]
    enc = encoder_from_words(words, m1_target, m2_size)
    sv = separation_vector(enc)
    ok = _meets(sv.s1, s1_target) and _meets(sv.s2, s2_target)
    return SearchResult(
        enc,
        ok,
        m1_target,
        m2_size,
        sv,
        "targets met" if ok else f"separation {sv} misses the targets",
        singer=use_singer,
    )


def enumerate_encoders(
    words: Sequence[Word],
    m1_size: int,
    m2_size: int,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> Iterator[BroadcastEncoder]:
    """All injective encoders over ``words``, in lexicographic order of their
    row-major word tuples."""

    check_guard("encoder set", count_encoders(len(words), m1_size, m2_size), limit)
    for perm in itertools.permutations(words, m1_size * m2_size):
        yield encoder_from_words(perm, m1_size, m2_size)
