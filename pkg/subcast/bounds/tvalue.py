"""The minimum r-neighborhood volume T of size-N codes with minimum distance
at least d, computed exactly or bounded."""

from dataclasses import dataclass
from typing import Literal, Sequence, TypedDict

from .. import log
from ..config.schema import DEFAULT_ENUMERATION_LIMIT, DEFAULT_SEARCH_NODE_LIMIT
from ..errors import GuardExceededError, HypothesisError, InfeasibleCodeError
from ..multishot.space import WordSpace
from ..multishot.volume import grassmannian_ball_volume, min_ball_volume
from ..multishot.word import Code, CodeDocType

TKind = Literal["exact"] | Literal["lower_bound"] | Literal["upper_estimate"]
TMethod = Literal["exhaustive"] | Literal["trivial"] | Literal["greedy"]


class TValueDocType(TypedDict):
    value: str
    kind: str
    method: str
    nodes: str
    constant_profile: bool | None
    witness: CodeDocType | None


@dataclass(frozen=True)
class TValue:
    value: int
    kind: TKind
    method: TMethod
    witness: Code | None = None
    constant_profile: bool | None = None
    """Whether every shot of every witness word has the same dimension."""
    nodes: int = 0

    def __post_init__(self) -> None:
        if self.kind == "exact" and (self.method != "exhaustive" or self.witness is None):
            raise ValueError("an exact T value needs an exhaustive search witness")

    def to_json(self) -> TValueDocType:
        return {
            "value": str(self.value),
            "kind": self.kind,
            "method": self.method,
            "nodes": str(self.nodes),
            "constant_profile": self.constant_profile,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def _check_params(d: int, N: int, r: int) -> None:
    if N < 1:
        raise ValueError(f"code size must be positive, got {N}")
    if d < 1:
        raise ValueError(f"minimum distance must be positive, got {d}")
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")


def _is_constant_profile(c: Code) -> bool:
    return len({s.dim for w in c.words for s in w.shots}) == 1


class _BranchAndBound:
    def __init__(self, space: WordSpace, d: int, N: int, r: int, node_limit: int) -> None:
        self.space = space
        self.d = d
        self.N = N
        self.r = r
        self.node_limit = node_limit
        self.nodes = 0
        self.best: int | None = None
        self.best_code: tuple[int, ...] | None = None

    def run(self, anchors: Sequence[int]) -> None:
        # codes containing an earlier anchor were covered by its subtree
        done: set[int] = set()
        for a in anchors:
            log.D(f"T search: anchor {a}, best so far {self.best}, {self.nodes} nodes")
            row = self.space.distance_row(a)
            cands = [
                x for x in range(self.space.size) if x != a and x not in done and row[x] >= self.d
            ]
            self._extend([a], self.space.ball_mask(a, self.r), cands)
            done.add(a)

    def _extend(self, chosen: list[int], union: int, cands: list[int]) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise GuardExceededError("T search", self.nodes, self.node_limit)
        log.progress("T search nodes", self.nodes, 1000000, self.node_limit)

        if len(chosen) == self.N:
            v = union.bit_count()
            if self.best is None or v < self.best:
                self.best = v
                self.best_code = tuple(chosen)
            return

        need = self.N - len(chosen)
        for pos, c in enumerate(cands):
            if len(cands) - pos < need:
                break
            new_union = union | self.space.ball_mask(c, self.r)
            # neighborhoods only grow as words are added
            if self.best is not None and new_union.bit_count() >= self.best:
                continue
            row = self.space.distance_row(c)
            rest = [x for x in cands[pos + 1 :] if row[x] >= self.d]
            chosen.append(c)
            self._extend(chosen, new_union, rest)
            chosen.pop()


def t_exact(
    q: int,
    m: int,
    n: int,
    d: int,
    N: int,
    r: int,
    l: int | None = None,
    reduce: bool = True,
    node_limit: int = DEFAULT_SEARCH_NODE_LIMIT,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> TValue:
    """Exhaustive branch and bound over codes in P(F_q^m)^n, or in
    P(F_q^m, l)^n when ``l`` is given.

    With ``reduce``, one codeword is pinned to a representative of its orbit
    under the shot-wise Singer group, which acts by isometries; every code is
    equivalent to one containing such a representative. Without it, plain
    ascending subsets are searched."""

    _check_params(d, N, r)
    space = WordSpace(q, m, n, l, limit)
    if N > space.size:
        raise InfeasibleCodeError(d, N)

    bb = _BranchAndBound(space, d, N, r, node_limit)
    if reduce:
        bb.run(space.singer_representatives)
    else:
        bb.run(range(space.size))

    if bb.best is None or bb.best_code is None:
        raise InfeasibleCodeError(d, N)

    witness = space.code_of(bb.best_code)
    log.D(f"T search done: {bb.best} after {bb.nodes} nodes")
    return TValue(
        value=bb.best,
        kind="exact",
        method="exhaustive",
        witness=witness,
        constant_profile=_is_constant_profile(witness),
        nodes=bb.nodes,
    )


def t_lower_trivial(
    q: int,
    m: int,
    n: int,
    d: int,
    N: int,
    r: int,
    l: int | None = None,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> TValue:
    """N times the smallest ball of radius floor((d - 1) / 2). Those balls are
    pairwise disjoint around any code of minimum distance d, and lie inside
    its r-neighborhood once r reaches that radius."""

    _check_params(d, N, r)
    rho = (d - 1) // 2
    if r < rho:
        raise HypothesisError(
            "t_lower_trivial", f"radius {r} is below floor((d - 1) / 2) = {rho}"
        )
    if l is None:
        vol = min_ball_volume(q, m, n, rho, limit)
    else:
        if not 0 <= l <= m:
            raise ValueError(f"dimension {l} out of range [0, {m}]")
        vol = grassmannian_ball_volume(m, q, l, n, rho)
    return TValue(value=N * vol, kind="lower_bound", method="trivial")


def t_upper_greedy(
    q: int,
    m: int,
    n: int,
    d: int,
    N: int,
    r: int,
    l: int | None = None,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> TValue | None:
    """Neighborhood volume of the first-fit code in canonical order. Any code
    gives an upper estimate of T; None if first fit cannot reach N words."""

    _check_params(d, N, r)
    space = WordSpace(q, m, n, l, limit)
    chosen: list[int] = []
    for i in range(space.size):
        if len(chosen) == N:
            break
        row = space.distance_row(i)
        if all(row[j] >= d for j in chosen):
            chosen.append(i)
    if len(chosen) < N:
        return None
    witness = space.code_of(chosen)
    return TValue(
        value=space.neighborhood_mask(chosen, r).bit_count(),
        kind="upper_estimate",
        method="greedy",
        witness=witness,
        constant_profile=_is_constant_profile(witness),
    )
