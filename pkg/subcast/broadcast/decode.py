from typing import Literal

from ..errors import AmbientMismatchError
from ..multishot.word import Word, word_distance
from .encoder import BroadcastEncoder

User = Literal[1] | Literal[2]


class MinDistanceDecoder:
    """Nearest-codeword decoding; ties go to the smallest codeword in
    canonical order."""

    def __init__(self, e: BroadcastEncoder) -> None:
        self.encoder = e
        self._book = sorted(
            ((w, m1, m2) for m1, m2, w in e.entries()), key=lambda t: t[0].sort_key()
        )

    def nearest(self, y: Word) -> tuple[Word, int, int]:
        e = self.encoder
        if (y.q, y.m, y.n) != (e.q, e.m, e.n):
            raise AmbientMismatchError("word shape", (y.q, y.m, y.n), (e.q, e.m, e.n))
        best = self._book[0]
        best_d = word_distance(y, best[0])
        for entry in self._book[1:]:
            d = word_distance(y, entry[0])
            if d < best_d:
                best, best_d = entry, d
        return best

    def decode(self, y: Word, user: User) -> int:
        _, m1, m2 = self.nearest(y)
        return m1 if user == 1 else m2


def min_distance_decode(e: BroadcastEncoder, y: Word, user: User) -> int:
    if user not in (1, 2):
        raise ValueError(f"user must be 1 or 2, got {user}")
    return MinDistanceDecoder(e).decode(y, user)
