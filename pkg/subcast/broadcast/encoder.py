from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
import itertools
import json
import math
from typing import Final, Iterator, Mapping, Sequence, TypedDict, TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import NotRequired

from ..errors import EncoderError
from ..gf.field import FieldSpec, FieldSpecDocType, field_for_order
from ..multishot.word import Code, Word, WordDocType, code_new, word_distance
from ..utils.porcelain import dumps_canonical

# significant digits of rates that are not exact rationals
RATE_PRECISION: Final = 30

Rate = Fraction | Decimal


class EncoderEntryDocType(TypedDict):
    m1: int
    m2: int
    word: WordDocType


class EncoderDocType(TypedDict):
    q: int
    m: int
    n: int
    m1_size: int
    m2_size: int
    entries: list[EncoderEntryDocType]
    field: "NotRequired[FieldSpecDocType]"
    """Field the entries are written over; checked on load when present."""


@dataclass(frozen=True)
class BroadcastEncoder:
    """An injective map from message pairs to words.

    Messages are 1-based: ``table[m1 - 1][m2 - 1]`` is the codeword sent for
    the pair (m1, m2)."""

    q: int
    m: int
    n: int
    m1_size: int
    m2_size: int
    table: tuple[tuple[Word, ...], ...]

    def __post_init__(self) -> None:
        if self.m1_size < 1 or self.m2_size < 1:
            raise EncoderError("message alphabets must be non-empty")
        if len(self.table) != self.m1_size or any(len(r) != self.m2_size for r in self.table):
            raise EncoderError(f"table must be {self.m1_size} x {self.m2_size}")
        seen: dict[Word, tuple[int, int]] = {}
        for m1, m2, w in self.entries():
            if (w.q, w.m, w.n) != (self.q, self.m, self.n):
                raise EncoderError(
                    f"word for ({m1}, {m2}) has shape {(w.q, w.m, w.n)}, "
                    f"expected {(self.q, self.m, self.n)}"
                )
            if w in seen:
                raise EncoderError(f"messages {seen[w]} and {(m1, m2)} share the codeword {w}")
            seen[w] = (m1, m2)

    def word_at(self, m1: int, m2: int) -> Word:
        return self.table[m1 - 1][m2 - 1]

    def entries(self) -> Iterator[tuple[int, int, Word]]:
        for i, row in enumerate(self.table, start=1):
            for j, w in enumerate(row, start=1):
                yield i, j, w

    @property
    def code(self) -> Code:
        return code_new(w for _, _, w in self.entries())

    def to_json(self) -> EncoderDocType:
        return {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "m1_size": self.m1_size,
            "m2_size": self.m2_size,
            "entries": [{"m1": i, "m2": j, "word": w.to_json()} for i, j, w in self.entries()],
            "field": field_for_order(self.q).to_json(),
        }

    @classmethod
    def from_json(cls, doc: EncoderDocType) -> "BroadcastEncoder":
        try:
            q, m, n = int(doc["q"]), int(doc["m"]), int(doc["n"])
            m1_size, m2_size = int(doc["m1_size"]), int(doc["m2_size"])
            entries = doc["entries"]
        except (KeyError, TypeError, ValueError) as e:
            raise EncoderError(f"malformed encoder document: {e}") from e
        if not isinstance(entries, list):
            raise EncoderError(
                f"malformed encoder document: entries must be a list, got {entries!r}"
            )
        if "field" in doc:
            _check_field(q, doc["field"])

        mapping: dict[tuple[int, int], Word] = {}
        for ent in entries:
            try:
                key = (int(ent["m1"]), int(ent["m2"]))
                w = Word.from_json(q, m, ent["word"])
            except (KeyError, TypeError, ValueError) as ex:
                raise EncoderError(f"malformed encoder entry {ent!r}: {ex}") from ex
            if key in mapping:
                raise EncoderError(f"duplicate entry for messages {key}")
            if w.n != n:
                raise EncoderError(f"word for {key} has {w.n} shots, expected {n}")
            mapping[key] = w
        return encoder_from_table(m1_size, m2_size, mapping)


def _check_field(q: int, doc: FieldSpecDocType) -> None:
    try:
        spec = FieldSpec.from_json(doc)
    except (KeyError, TypeError, ValueError) as e:
        raise EncoderError(f"malformed field spec {doc!r}: {e}") from e
    if spec != field_for_order(q):
        raise EncoderError(f"entries are over {field_for_order(q)}, not {spec}")


def encoder_from_table(
    m1_size: int,
    m2_size: int,
    mapping: Mapping[tuple[int, int], Word],
) -> BroadcastEncoder:
    keys = itertools.product(range(1, m1_size + 1), range(1, m2_size + 1))
    missing = [k for k in keys if k not in mapping]
    if missing:
        raise EncoderError(f"table has no entry for messages {missing[0]}")
    extra = [k for k in mapping if not (1 <= k[0] <= m1_size and 1 <= k[1] <= m2_size)]
    if extra:
        raise EncoderError(f"messages {extra[0]} lie outside {m1_size} x {m2_size}")
    first = mapping[(1, 1)]
    table = tuple(
        tuple(mapping[(i, j)] for j in range(1, m2_size + 1)) for i in range(1, m1_size + 1)
    )
    return BroadcastEncoder(first.q, first.m, first.n, m1_size, m2_size, table)


def encoder_from_words(words: Sequence[Word], m1_size: int, m2_size: int) -> BroadcastEncoder:
    """Fills the table row by row: ``words[(m1 - 1) * m2_size + (m2 - 1)]``."""

    if len(words) != m1_size * m2_size:
        raise EncoderError(f"need {m1_size * m2_size} words, got {len(words)}")
    table = tuple(tuple(words[i * m2_size : (i + 1) * m2_size]) for i in range(m1_size))
    w = words[0]
    return BroadcastEncoder(w.q, w.m, w.n, m1_size, m2_size, table)


def load_encoder(text: str) -> BroadcastEncoder:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise EncoderError(f"not a JSON document: {e}") from e
    if not isinstance(doc, dict):
        raise EncoderError("encoder document must be a JSON object")
    return BroadcastEncoder.from_json(doc)  # type: ignore[arg-type]


@dataclass(frozen=True)
class SeparationVector:
    """``None`` marks a component whose defining minimum ranges over the
    empty set (a singleton message alphabet)."""

    s1: int | None
    s2: int | None

    @property
    def is_bounded(self) -> bool:
        return self.s1 is not None and self.s2 is not None

    def __str__(self) -> str:
        return f"({_fmt_s(self.s1)}, {_fmt_s(self.s2)})"

    def to_json(self) -> dict[str, str]:
        return {"s1": _fmt_s(self.s1), "s2": _fmt_s(self.s2)}


def _fmt_s(s: int | None) -> str:
    return "unbounded" if s is None else str(s)


def separation_vector(e: BroadcastEncoder) -> SeparationVector:
    entries = list(e.entries())
    s1: int | None = None
    s2: int | None = None
    for (a1, a2, x), (b1, b2, y) in itertools.combinations(entries, 2):
        d = word_distance(x, y)
        if a1 != b1 and (s1 is None or d < s1):
            s1 = d
        if a2 != b2 and (s2 is None or d < s2):
            s2 = d
    return SeparationVector(s1, s2)


def exact_log(size: int, q: int) -> int | None:
    """``k`` with ``q**k == size``, if any."""

    k = 0
    v = 1
    while v < size:
        v *= q
        k += 1
    return k if v == size else None


def _rate(size: int, q: int, n: int) -> Rate:
    k = exact_log(size, q)
    if k is not None:
        return Fraction(k, n)
    with localcontext() as ctx:
        ctx.prec = RATE_PRECISION
        return Decimal(size).ln() / Decimal(q).ln() / Decimal(n)


def rate_pair(e: BroadcastEncoder) -> tuple[Rate, Rate]:
    """(log_q |M1| / n, log_q |M2| / n): exact rationals when the alphabet
    sizes are powers of q, otherwise decimals to ``RATE_PRECISION`` digits."""

    return _rate(e.m1_size, e.q, e.n), _rate(e.m2_size, e.q, e.n)


def format_rate(r: Rate) -> str:
    if isinstance(r, Fraction):
        return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
    return str(r)


def count_encoders(num_words: int, m1_size: int, m2_size: int) -> int:
    return math.perm(num_words, m1_size * m2_size)


def dump_encoder(e: BroadcastEncoder) -> str:
    return dumps_canonical(e.to_json())


def code_of(e: BroadcastEncoder) -> Code:
    return e.code
