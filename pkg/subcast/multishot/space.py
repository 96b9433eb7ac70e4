"""Indexed word spaces for exhaustive sweeps.

Words of P(F_q^m)^n (or of P(F_q^m, l)^n) are numbered in mixed radix with the
first shot most significant, so index order is the canonical word order.
Sets of words are Python ints used as bitsets.
"""

import functools
import itertools
from typing import Iterable, Iterator, Sequence

from ..config.schema import DEFAULT_ENUMERATION_LIMIT
from ..errors import AmbientMismatchError, check_guard
from ..gf.field import field_for_order
from ..gf.singer import singer_matrix
from ..subspace.grassmannian import (
    enumerate_grassmannian,
    enumerate_projective_space,
    gaussian_binomial,
    projective_space_size,
)
from ..subspace.subspace import Subspace, apply_matrix, distance
from .word import Code, Word, code_new


class WordSpace:
    def __init__(
        self,
        q: int,
        m: int,
        n: int,
        l: int | None = None,
        limit: int = DEFAULT_ENUMERATION_LIMIT,
    ) -> None:
        if n < 1:
            raise ValueError(f"word length must be positive, got {n}")
        if l is not None and not 0 <= l <= m:
            raise ValueError(f"dimension {l} out of range [0, {m}]")
        field_for_order(q)
        self.q = q
        self.m = m
        self.n = n
        self.l = l

        alpha_size = projective_space_size(q, m) if l is None else gaussian_binomial(m, l, q)
        check_guard("word space", alpha_size**n, limit)

        if l is None:
            self.alphabet: tuple[Subspace, ...] = enumerate_projective_space(q, m, limit)
        else:
            self.alphabet = enumerate_grassmannian(q, m, l, limit)
        self._alpha_index = {s: i for i, s in enumerate(self.alphabet)}
        self.size = len(self.alphabet) ** n
        self.shot_dist: tuple[tuple[int, ...], ...] = tuple(
            tuple(distance(a, b) for b in self.alphabet) for a in self.alphabet
        )
        self._ball_cache: dict[tuple[int, int], int] = {}
        self._row_cache: dict[int, tuple[int, ...]] = {}

    def __len__(self) -> int:
        return self.size

    def digits(self, idx: int) -> tuple[int, ...]:
        return _digits(idx, len(self.alphabet), self.n)

    def index_of_digits(self, digits: Sequence[int]) -> int:
        a = len(self.alphabet)
        idx = 0
        for d in digits:
            idx = idx * a + d
        return idx

    def word(self, idx: int) -> Word:
        return Word(self.q, self.m, tuple(self.alphabet[d] for d in self.digits(idx)))

    def index(self, w: Word) -> int:
        if (w.q, w.m, w.n) != (self.q, self.m, self.n):
            raise AmbientMismatchError("word shape", (w.q, w.m, w.n), (self.q, self.m, self.n))
        try:
            return self.index_of_digits([self._alpha_index[s] for s in w.shots])
        except KeyError:
            raise ValueError(f"word {w} is not in the {self.l}-dimensional word space") from None

    def words(self) -> Iterator[Word]:
        for idx in range(self.size):
            yield self.word(idx)

    def distance(self, a: int, b: int) -> int:
        da = self.digits(a)
        db = self.digits(b)
        return sum(self.shot_dist[x][y] for x, y in zip(da, db))

    def distance_row(self, a: int) -> tuple[int, ...]:
        """Distances from word ``a`` to every word, by index."""

        row = self._row_cache.get(a)
        if row is None:
            row = tuple(self.distance(a, b) for b in range(self.size))
            self._row_cache[a] = row
        return row

    def ball_indices(self, center: int, r: int) -> list[int]:
        """Indices of all words within distance ``r`` of ``center``, ascending."""

        cd = self.digits(center)
        a = len(self.alphabet)
        out: list[int] = []

        def walk(shot: int, prefix: int, budget: int) -> None:
            if shot == self.n:
                out.append(prefix)
                return
            row = self.shot_dist[cd[shot]]
            for x in range(a):
                d = row[x]
                if d <= budget:
                    walk(shot + 1, prefix * a + x, budget - d)

        walk(0, 0, r)
        return out

    def ball_mask(self, center: int, r: int) -> int:
        key = (center, r)
        mask = self._ball_cache.get(key)
        if mask is None:
            mask = indices_to_mask(self.ball_indices(center, r))
            self._ball_cache[key] = mask
        return mask

    def neighborhood_mask(self, centers: Iterable[int], r: int) -> int:
        mask = 0
        for c in centers:
            mask |= self.ball_mask(c, r)
        return mask

    def code_of(self, indices: Iterable[int]) -> Code:
        return code_new(self.word(i) for i in indices)

    @functools.cached_property
    def singer_permutation(self) -> tuple[int, ...]:
        """Alphabet permutation induced by the Singer matrix."""

        s = singer_matrix(field_for_order(self.q), self.m)
        return tuple(self._alpha_index[apply_matrix(s, u)] for u in self.alphabet)

    @functools.cached_property
    def singer_representatives(self) -> tuple[int, ...]:
        """Smallest word index of every orbit of the shot-wise Singer group,
        ascending."""

        perm = self.singer_permutation
        reps: list[int] = []
        seen = [False] * len(self.alphabet)
        for a in range(len(self.alphabet)):
            if seen[a]:
                continue
            reps.append(a)
            x = a
            while not seen[x]:
                seen[x] = True
                x = perm[x]
        # orbits of a direct product are products of orbits, and the minimum
        # of a product orbit is the tuple of per-shot minima
        return tuple(
            sorted(self.index_of_digits(ds) for ds in itertools.product(reps, repeat=self.n))
        )


def _digits(idx: int, base: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        idx, out[i] = divmod(idx, base)
    return tuple(out)


def indices_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask
