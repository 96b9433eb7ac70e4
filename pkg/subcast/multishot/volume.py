"""Closed-form sphere and ball volumes in P(F_q^m)^n and P(F_q^m, l)^n.

A ball's volume depends only on the dimension profile of its center. Per-shot
sphere volumes are combined by truncated convolution: the coefficient of h in
the n-fold product counts words at total distance exactly h.
"""

from fractions import Fraction
import functools
import itertools
from typing import Iterator, Sequence

from ..config.schema import DEFAULT_ENUMERATION_LIMIT
from ..errors import check_guard
from ..subspace.grassmannian import gaussian_binomial, projective_space_size
from .word import DimVector


@functools.cache
def sphere_volume(m: int, q: int, k: int, h: int) -> int:
    """Number of subspaces of F_q^m at distance exactly ``h`` from a fixed
    ``k``-dimensional one."""

    if k < 0 or k > m:
        raise ValueError(f"dimension {k} out of range [0, {m}]")
    if h < 0:
        return 0
    return sum(
        gaussian_binomial(m - k, h - j, q) * gaussian_binomial(k, j, q) * q ** (j * (h - j))
        for j in range(h + 1)
    )


@functools.cache
def _sphere_series(m: int, q: int, k: int) -> tuple[int, ...]:
    return tuple(sphere_volume(m, q, k, h) for h in range(m + 1))


def _convolve(a: Sequence[int], b: Sequence[int], cap: int) -> list[int]:
    out = [0] * min(len(a) + len(b) - 1, cap + 1)
    for i, x in enumerate(a):
        if x == 0 or i > cap:
            continue
        for j, y in enumerate(b):
            if i + j > cap:
                break
            out[i + j] += x * y
    return out


def _ball_from_series(series: Sequence[Sequence[int]], r: int) -> int:
    if r < 0:
        return 0
    acc: list[int] = [1]
    for s in series:
        acc = _convolve(acc, s, r)
    return sum(acc[: r + 1])


def ball_volume(m: int, q: int, kvec: Sequence[int], r: int) -> int:
    """Number of words within distance ``r`` of any word with profile ``kvec``."""

    return _ball_from_series([_sphere_series(m, q, k) for k in kvec], r)


def profiles(m: int, n: int) -> Iterator[DimVector]:
    """All dimension profiles in lexicographic order."""
    return itertools.product(range(m + 1), repeat=n)


def avg_ball_volume(q: int, m: int, n: int, r: int) -> Fraction:
    # the profile weights factor per shot, so the weighted sum is the n-th
    # convolution power of one averaged sphere series
    weighted = [
        sum(gaussian_binomial(m, k, q) * _sphere_series(m, q, k)[h] for k in range(m + 1))
        for h in range(m + 1)
    ]
    total = _ball_from_series([weighted] * n, r)
    return Fraction(total, projective_space_size(q, m) ** n)


def _extremal_profile(
    q: int,
    m: int,
    n: int,
    r: int,
    pick_max: bool,
    limit: int,
) -> tuple[DimVector, int]:
    # ball volume is symmetric in the profile entries; sorted profiles are
    # the lexicographically smallest members of their permutation classes
    check_guard("profile set", (m + 1) ** n, limit)
    best: tuple[DimVector, int] | None = None
    for kvec in itertools.combinations_with_replacement(range(m + 1), n):
        v = ball_volume(m, q, kvec, r)
        if best is None or (v > best[1] if pick_max else v < best[1]):
            best = (kvec, v)
    assert best is not None
    return best


def min_ball_profile(
    q: int,
    m: int,
    n: int,
    r: int,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> tuple[DimVector, int]:
    """The lexicographically smallest profile of minimum ball volume, and that
    volume."""
    return _extremal_profile(q, m, n, r, False, limit)


def min_ball_volume(q: int, m: int, n: int, r: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    return min_ball_profile(q, m, n, r, limit)[1]


def max_ball_volume(q: int, m: int, n: int, r: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    return _extremal_profile(q, m, n, r, True, limit)[1]


def volume_profile_table(
    q: int,
    m: int,
    n: int,
    r: int,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> list[tuple[DimVector, int]]:
    check_guard("profile set", (m + 1) ** n, limit)
    return [(kvec, ball_volume(m, q, kvec, r)) for kvec in profiles(m, n)]


@functools.cache
def grassmannian_sphere_volume(m: int, q: int, l: int, h: int) -> int:
    """Number of ``l``-dimensional subspaces at distance exactly ``h`` from a
    fixed ``l``-dimensional one."""

    if l < 0 or l > m:
        raise ValueError(f"dimension {l} out of range [0, {m}]")
    if h < 0 or h % 2:
        return 0
    j = h // 2
    return q ** (j * j) * gaussian_binomial(l, j, q) * gaussian_binomial(m - l, j, q)


def grassmannian_ball_volume(m: int, q: int, l: int, n: int, r: int) -> int:
    series = tuple(grassmannian_sphere_volume(m, q, l, h) for h in range(2 * min(l, m - l) + 1))
    return _ball_from_series([series] * n, r)
