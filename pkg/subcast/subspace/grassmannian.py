import functools
import itertools

from ..config.schema import DEFAULT_ENUMERATION_LIMIT
from ..errors import check_guard
from ..gf.singer import singer_matrix
from ..gf.field import field_for_order
from .subspace import Subspace, apply_matrix


@functools.cache
def gaussian_binomial(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^m."""

    if k < 0 or k > m:
        return 0
    k = min(k, m - k)
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@functools.cache
def projective_space_size(q: int, m: int) -> int:
    return sum(gaussian_binomial(m, k, q) for k in range(m + 1))


@functools.cache
def _grassmannian(q: int, m: int, l: int) -> tuple[Subspace, ...]:
    out: list[Subspace] = []
    for pivots in itertools.combinations(range(m), l):
        # free positions: row i, column j > pivots[i] that is not a pivot column
        free = [(i, j) for i in range(l) for j in range(pivots[i] + 1, m) if j not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * m for _ in range(l)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(free, values):
                rows[i][j] = x
            out.append(Subspace(q, m, tuple(tuple(r) for r in rows)))
    out.sort(key=Subspace.sort_key)
    return tuple(out)


def enumerate_grassmannian(
    q: int,
    m: int,
    l: int,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> tuple[Subspace, ...]:
    """All l-dimensional subspaces of GF(q)^m, ordered lexicographically by
    their flattened RREF matrices."""

    if l < 0 or l > m:
        raise ValueError(f"dimension {l} out of range [0, {m}]")
    field_for_order(q)
    check_guard("Grassmannian", gaussian_binomial(m, l, q), limit)
    return _grassmannian(q, m, l)


def enumerate_projective_space(
    q: int,
    m: int,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> tuple[Subspace, ...]:
    check_guard("projective space", projective_space_size(q, m), limit)
    return tuple(u for l in range(m + 1) for u in enumerate_grassmannian(q, m, l, limit))


@functools.cache
def singer_orbits(q: int, m: int, l: int) -> tuple[tuple[Subspace, ...], ...]:
    """Orbits of the Singer cycle on the Grassmannian, each sorted, ordered by
    their smallest member."""

    s = singer_matrix(field_for_order(q), m)
    seen: set[Subspace] = set()
    orbits: list[tuple[Subspace, ...]] = []
    for u in enumerate_grassmannian(q, m, l):
        if u in seen:
            continue
        orbit = [u]
        seen.add(u)
        v = apply_matrix(s, u)
        while v != u:
            orbit.append(v)
            seen.add(v)
            v = apply_matrix(s, v)
        orbits.append(tuple(sorted(orbit)))
    return tuple(orbits)
