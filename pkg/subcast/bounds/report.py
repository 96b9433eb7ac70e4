"""Evaluation of the sphere-packing bound on broadcast codes and of its
constant-dimension corollary.

Both bounds limit |M2| through the minimum neighborhood volume T in the
denominator, so only exact values or lower bounds of T may feed them. Upper
estimates are rejected."""

from dataclasses import dataclass, field
from fractions import Fraction
import math
from typing import Literal, NamedTuple, TypedDict

from .. import log
from ..broadcast.encoder import BroadcastEncoder, separation_vector
from ..config.schema import DEFAULT_ENUMERATION_LIMIT, DEFAULT_SEARCH_NODE_LIMIT
from ..errors import GuardExceededError, HypothesisError, InfeasibleCodeError
from ..subspace.grassmannian import gaussian_binomial, projective_space_size
from .tvalue import TValue, TValueDocType, t_exact, t_lower_trivial

TMode = Literal["exact"] | Literal["trivial"]
BoundKind = Literal["sphere_packing"] | Literal["corollary"]
Verdict = (
    Literal["satisfied"]
    | Literal["inconclusive"]
    | Literal["violated"]
    | Literal["not_applicable"]
    | Literal["vacuous"]
    | Literal["computed"]
)

TCache = dict[tuple[int, int, int, int | None], TValue | None]


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class BoundReportDocType(TypedDict):
    bound: str
    params: dict[str, str | None]
    t: TValueDocType | None
    lhs: str | None
    rhs: str | None
    verdict: str
    swapped: bool
    m2_ceiling: str | None
    packing_ratio: str | None
    notes: list[str]


@dataclass(frozen=True)
class BoundReport:
    bound: BoundKind
    q: int
    m: int
    n: int
    l: int | None
    s1: int | None
    s2: int | None
    m1_size: int
    m2_size: int | None
    t: TValue | None
    lhs: int | None
    rhs: Fraction | None
    verdict: Verdict
    swapped: bool = False
    """The message roles were exchanged so that the hypothesis s1 < s2 holds."""
    m2_ceiling: int | None = None
    packing_ratio: Fraction | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def applicable(self) -> bool:
        return self.verdict != "not_applicable"

    @property
    def satisfied(self) -> bool | None:
        if self.verdict in ("not_applicable", "computed"):
            return None
        return self.verdict != "violated"

    def to_json(self) -> BoundReportDocType:
        def s(x: int | None) -> str | None:
            return None if x is None else str(x)

        return {
            "bound": self.bound,
            "params": {
                "q": s(self.q),
                "m": s(self.m),
                "n": s(self.n),
                "l": s(self.l),
                "s1": s(self.s1),
                "s2": s(self.s2),
                "m1_size": s(self.m1_size),
                "m2_size": s(self.m2_size),
            },
            "t": None if self.t is None else self.t.to_json(),
            "lhs": s(self.lhs),
            "rhs": None if self.rhs is None else format_fraction(self.rhs),
            "verdict": self.verdict,
            "swapped": self.swapped,
            "m2_ceiling": s(self.m2_ceiling),
            "packing_ratio": (
                None if self.packing_ratio is None else format_fraction(self.packing_ratio)
            ),
            "notes": list(self.notes),
        }


def _judge(t: TValue, holds: bool) -> Verdict:
    if not holds:
        # a lower bound on T already exceeding the limit refutes the exact one too
        return "violated"
    return "satisfied" if t.kind == "exact" else "inconclusive"


def _t_value(
    t_mode: TMode,
    q: int,
    m: int,
    n: int,
    d: int,
    N: int,
    r: int,
    l: int | None,
    node_limit: int,
    limit: int,
    t_cache: TCache | None,
) -> TValue | None:
    """T by the requested method; None when no admissible code exists."""

    key = (d, N, r, l)
    if t_cache is not None and key in t_cache:
        return t_cache[key]
    t: TValue | None
    if t_mode == "exact":
        try:
            t = t_exact(q, m, n, d, N, r, l, node_limit=node_limit, limit=limit)
        except InfeasibleCodeError:
            t = None
    else:
        t = t_lower_trivial(q, m, n, d, N, r, l, limit=limit)
    if t_cache is not None:
        t_cache[key] = t
    return t


def check_sphere_packing(
    e: BroadcastEncoder,
    t_mode: TMode = "exact",
    node_limit: int = DEFAULT_SEARCH_NODE_LIMIT,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    t_cache: TCache | None = None,
) -> BoundReport:
    """T(s1, |M1|, floor((s2 - 1) / 2)) * |M2| <= |P(F_q^m)|^n for s1 < s2."""

    sv = separation_vector(e)

    def report(verdict: Verdict, *notes: str, **kw: object) -> BoundReport:
        return BoundReport(
            bound="sphere_packing",
            q=e.q,
            m=e.m,
            n=e.n,
            l=None,
            s1=sv.s1,
            s2=sv.s2,
            m1_size=e.m1_size,
            m2_size=e.m2_size,
            verdict=verdict,
            notes=notes,
            **kw,  # type: ignore[arg-type]
        )

    if sv.s1 is None or sv.s2 is None:
        which = "s1" if sv.s1 is None else "s2"
        return report(
            "not_applicable",
            f"{which} is unbounded (singleton message alphabet)",
            t=None,
            lhs=None,
            rhs=None,
        )
    if sv.s1 == sv.s2:
        return report(
            "not_applicable",
            f"s1 = s2 = {sv.s1}, which is the code's minimum distance; the bound needs s1 != s2",
            t=None,
            lhs=None,
            rhs=None,
        )

    swapped = sv.s2 < sv.s1
    if swapped:
        d, N, r, M = sv.s2, e.m2_size, (sv.s1 - 1) // 2, e.m1_size
    else:
        d, N, r, M = sv.s1, e.m1_size, (sv.s2 - 1) // 2, e.m2_size

    rhs = projective_space_size(e.q, e.m) ** e.n
    t = _t_value(t_mode, e.q, e.m, e.n, d, N, r, None, node_limit, limit, t_cache)
    if t is None:
        return report(
            "vacuous",
            f"no code of size {N} with minimum distance {d} exists; the bound holds trivially",
            t=None,
            lhs=None,
            rhs=Fraction(rhs),
            swapped=swapped,
        )

    lhs = t.value * M
    notes = ["message roles exchanged so that s1 < s2"] if swapped else []
    if t.kind == "lower_bound":
        notes.append("T is a lower bound; a satisfied inequality is inconclusive for exact T")
    return report(
        _judge(t, lhs <= rhs),
        *notes,
        t=t,
        lhs=lhs,
        rhs=Fraction(rhs),
        swapped=swapped,
    )


def max_m2_bound(
    q: int,
    m: int,
    n: int,
    l: int,
    s1: int,
    s2: int,
    m1_size: int,
    t_mode: TMode = "exact",
    m2_size: int | None = None,
    node_limit: int = DEFAULT_SEARCH_NODE_LIMIT,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> BoundReport:
    """|M2| < 4^n q^(n l (m - l)) / T_l(s1, |M1|, floor((s2 - 1) / 2)) for
    0 < l < m, with T taken inside P(F_q^m, l)^n.

    For l in {0, m} the Grassmannian is a single point and the exact packing
    bound |M2| <= 1 / T is used instead. With ``m2_size`` the inequality is
    also checked for that alphabet size."""

    if not 0 <= l <= m:
        raise ValueError(f"dimension {l} out of range [0, {m}]")
    if s1 < 1 or s2 < 1 or m1_size < 1:
        raise ValueError("separation components and |M1| must be positive")

    def report(verdict: Verdict, notes: list[str], **kw: object) -> BoundReport:
        return BoundReport(
            bound="corollary",
            q=q,
            m=m,
            n=n,
            l=l,
            s1=s1,
            s2=s2,
            m1_size=m1_size,
            m2_size=m2_size,
            verdict=verdict,
            notes=tuple(notes),
            **kw,  # type: ignore[arg-type]
        )

    if s1 >= s2:
        return report(
            "not_applicable", [f"needs s1 < s2, got ({s1}, {s2})"], t=None, lhs=None, rhs=None
        )

    notes: list[str] = []
    r = (s2 - 1) // 2
    t: TValue | None
    if t_mode == "exact":
        try:
            t = _t_value("exact", q, m, n, s1, m1_size, r, l, node_limit, limit, None)
        except GuardExceededError as ex:
            log.W(f"exact T unavailable ({ex}); using the trivial lower bound")
            notes.append(f"exact T unavailable ({ex}); trivial lower bound used")
            t = _t_value("trivial", q, m, n, s1, m1_size, r, l, node_limit, limit, None)
    else:
        t = _t_value("trivial", q, m, n, s1, m1_size, r, l, node_limit, limit, None)

    if t is None:
        notes.append(
            f"no {l}-dimensional code of size {m1_size} with minimum distance {s1} exists"
        )
        return report("vacuous", notes, t=None, lhs=m2_size, rhs=None)

    grass = gaussian_binomial(m, l, q)
    packing_ratio = Fraction(grass**n, t.value)
    if 0 < l < m:
        rhs = Fraction(4**n * q ** (n * l * (m - l)), t.value)
        ceiling = math.ceil(rhs) - 1
        strict = True
    else:
        notes.append(f"l = {l}: the Grassmannian has one element, exact bound |M2| <= 1/T used")
        rhs = Fraction(1, t.value)
        ceiling = math.floor(rhs)
        strict = False
    if t.kind == "lower_bound":
        notes.append("T is a lower bound, so the ceiling on |M2| remains valid")

    if m2_size is None:
        verdict: Verdict = "computed"
    else:
        verdict = _judge(t, m2_size < rhs if strict else m2_size <= rhs)
    return report(
        verdict,
        notes,
        t=t,
        lhs=m2_size,
        rhs=rhs,
        m2_ceiling=ceiling,
        packing_ratio=packing_ratio,
    )


class GaussianBounds(NamedTuple):
    lower: int
    value: int
    upper: int
    holds: bool


def gaussian_bounds_check(n: int, l: int, q: int) -> GaussianBounds:
    """q^(l(n-l)) < binom(n, l)_q < 4 q^(l(n-l)) for 0 < l < n."""

    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if not 0 < l < n:
        raise HypothesisError("gaussian_bounds_check", f"needs 0 < l < n, got l = {l}, n = {n}")
    lower = q ** (l * (n - l))
    value = gaussian_binomial(n, l, q)
    upper = 4 * lower
    return GaussianBounds(lower, value, upper, lower < value < upper)
