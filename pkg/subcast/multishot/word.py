from dataclasses import dataclass
import itertools
from typing import Iterable, Iterator, Sequence

from ..errors import AmbientMismatchError
from ..subspace.subspace import Subspace, SubspaceDocType, distance

WordDocType = list[SubspaceDocType]
CodeDocType = list[WordDocType]
DimVector = tuple[int, ...]


@dataclass(frozen=True)
class Word:
    """A length-n tuple of subspaces of one common ambient space GF(q)^m."""

    q: int
    m: int
    shots: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        if not self.shots:
            raise ValueError("a word needs at least one shot")
        for s in self.shots:
            if (s.q, s.m) != (self.q, self.m):
                raise AmbientMismatchError("ambient space", (s.q, s.m), (self.q, self.m))

    @property
    def n(self) -> int:
        return len(self.shots)

    def profile(self) -> DimVector:
        return tuple(s.dim for s in self.shots)

    def sort_key(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        return tuple(s.sort_key() for s in self.shots)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.shots) + ")"

    def to_json(self) -> WordDocType:
        return [s.to_json() for s in self.shots]

    @classmethod
    def from_json(cls, q: int, m: int, doc: WordDocType) -> "Word":
        if not isinstance(doc, list):
            raise ValueError(f"a word must be a list of subspaces, got {doc!r}")
        return cls(q, m, tuple(Subspace.from_json(q, m, s) for s in doc))


def word(*shots: Subspace) -> Word:
    if not shots:
        raise ValueError("a word needs at least one shot")
    return Word(shots[0].q, shots[0].m, tuple(shots))


def profile(x: Word) -> DimVector:
    return x.profile()


def _check_shape(x: Word, y: Word) -> None:
    if (x.q, x.m, x.n) != (y.q, y.m, y.n):
        raise AmbientMismatchError("word shape", (x.q, x.m, x.n), (y.q, y.m, y.n))


def word_distance(x: Word, y: Word) -> int:
    _check_shape(x, y)
    return sum(distance(a, b) for a, b in zip(x.shots, y.shots))


@dataclass(frozen=True)
class Code:
    """A duplicate-free set of equally shaped words, kept in canonical order."""

    q: int
    m: int
    n: int
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, x: object) -> bool:
        return x in self.words

    def to_json(self) -> CodeDocType:
        return [w.to_json() for w in self.words]

    @classmethod
    def from_json(cls, q: int, m: int, doc: CodeDocType) -> "Code":
        if not isinstance(doc, list) or not doc:
            raise ValueError("a code must be a non-empty list of words")
        return code_new(Word.from_json(q, m, w) for w in doc)


def code_new(words: Iterable[Word]) -> Code:
    uniq = sorted(set(words))
    if not uniq:
        raise ValueError("a code needs at least one word")
    first = uniq[0]
    for w in uniq[1:]:
        _check_shape(first, w)
    return Code(first.q, first.m, first.n, tuple(uniq))


def code_min_distance(c: Code | Sequence[Word]) -> int:
    words = c.words if isinstance(c, Code) else tuple(c)
    if len(words) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    return min(word_distance(x, y) for x, y in itertools.combinations(words, 2))
