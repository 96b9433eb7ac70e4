"""Multiplicative subspace channels.

Each shot is hit independently: the receiver sees a subspace of what was
sent. The adversarial mode instead replaces the whole word with one drawn
uniformly from a ball around it, which leaves the multiplicative model but
still falls under the minimum-distance decoding guarantee.
"""

from dataclasses import dataclass
import functools
from typing import Literal, TypedDict

import numpy as np

from ..config.schema import DEFAULT_ENUMERATION_LIMIT
from ..gf.field import field_for_order
from ..multishot.space import WordSpace
from ..multishot.word import Word
from ..subspace.linalg import combine
from ..subspace.subspace import Subspace, from_generators, zero

ChannelMode = Literal["matrix"] | Literal["erasure"] | Literal["adversarial"]


class ChannelModelDocType(TypedDict):
    mode: str
    t: int | None
    eps: float | None
    budget: int | None


@dataclass(frozen=True)
class ChannelModel:
    mode: ChannelMode
    t: int | None = None
    """Rows of the random transfer matrix (matrix mode)."""
    eps: float | None = None
    """Per-basis-vector deletion probability (erasure mode)."""
    budget: int | None = None
    """Distance budget of the adversary (adversarial mode)."""

    def __post_init__(self) -> None:
        if self.mode == "matrix":
            if self.t is None or self.t < 0:
                raise ValueError("matrix mode needs a non-negative row count t")
        elif self.mode == "erasure":
            if self.eps is None or not 0.0 <= self.eps <= 1.0:
                raise ValueError("erasure mode needs eps in [0, 1]")
        elif self.mode == "adversarial":
            if self.budget is None or self.budget < 0:
                raise ValueError("adversarial mode needs a non-negative distance budget")
        else:
            raise ValueError(f"unknown channel mode {self.mode!r}")

    @property
    def is_multiplicative(self) -> bool:
        return self.mode != "adversarial"

    def __str__(self) -> str:
        if self.mode == "matrix":
            return f"matrix(t={self.t})"
        if self.mode == "erasure":
            return f"erasure(eps={self.eps})"
        return f"adversarial(budget={self.budget})"

    def to_json(self) -> ChannelModelDocType:
        return {"mode": self.mode, "t": self.t, "eps": self.eps, "budget": self.budget}


def matrix_channel(t: int) -> ChannelModel:
    return ChannelModel("matrix", t=t)


def erasure_channel(eps: float) -> ChannelModel:
    return ChannelModel("erasure", eps=eps)


def adversarial_channel(budget: int) -> ChannelModel:
    return ChannelModel("adversarial", budget=budget)


@dataclass(frozen=True)
class RngStream:
    """A counter-based random substream: the draws depend only on the seed
    and the key path, never on how many other streams were consumed."""

    seed: int
    key: tuple[int, ...] = ()

    def child(self, *key: int) -> "RngStream":
        return RngStream(self.seed, self.key + key)

    def generator(self) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=self.key))


def _transmit_shot(x: Subspace, model: ChannelModel, rng: np.random.Generator) -> Subspace:
    k = x.dim
    if k == 0:
        return x
    if model.mode == "matrix":
        assert model.t is not None
        if model.t == 0:
            return zero(x.q, x.m)
        spec = field_for_order(x.q)
        h = rng.integers(0, x.q, size=(model.t, k))
        rows = [combine(spec, [int(c) for c in row], x.basis, x.m) for row in h]
        return from_generators(x.q, x.m, rows)

    assert model.eps is not None
    keep = rng.random(k) >= model.eps
    return from_generators(x.q, x.m, [row for row, kept in zip(x.basis, keep) if kept])


def transmit(
    x: Word,
    model: ChannelModel,
    stream: RngStream,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> Word:
    """Shot i draws from ``stream.child(i)``."""

    if model.mode == "adversarial":
        assert model.budget is not None
        space = _word_space(x.q, x.m, x.n, limit)
        ball = space.ball_indices(space.index(x), model.budget)
        pick = int(stream.child(0).generator().integers(len(ball)))
        return space.word(ball[pick])

    return Word(
        x.q,
        x.m,
        tuple(
            _transmit_shot(s, model, stream.child(i).generator()) for i, s in enumerate(x.shots)
        ),
    )


@functools.lru_cache(maxsize=8)
def _word_space(q: int, m: int, n: int, limit: int) -> WordSpace:
    # the limit is part of the key so a smaller one still trips the guard
    return WordSpace(q, m, n, None, limit)
