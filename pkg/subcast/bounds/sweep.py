from dataclasses import dataclass
from typing import TypedDict

from .. import log
from ..broadcast.search import enumerate_encoders
from ..config.schema import DEFAULT_ENUMERATION_LIMIT, DEFAULT_SEARCH_NODE_LIMIT
from ..multishot.space import WordSpace
from .report import BoundReport, BoundReportDocType, TCache, TMode, check_sphere_packing


class TheoremSweepDocType(TypedDict):
    params: dict[str, str]
    t_mode: str
    encoders: str
    applicable: str
    satisfied: str
    inconclusive: str
    vacuous: str
    violations: str
    first_violation: BoundReportDocType | None


@dataclass
class TheoremSweep:
    q: int
    m: int
    n: int
    m1_size: int
    m2_size: int
    t_mode: TMode
    encoders: int = 0
    applicable: int = 0
    satisfied: int = 0
    inconclusive: int = 0
    vacuous: int = 0
    violations: int = 0
    first_violation: BoundReport | None = None

    def to_json(self) -> TheoremSweepDocType:
        return {
            "params": {
                "q": str(self.q),
                "m": str(self.m),
                "n": str(self.n),
                "m1_size": str(self.m1_size),
                "m2_size": str(self.m2_size),
            },
            "t_mode": self.t_mode,
            "encoders": str(self.encoders),
            "applicable": str(self.applicable),
            "satisfied": str(self.satisfied),
            "inconclusive": str(self.inconclusive),
            "vacuous": str(self.vacuous),
            "violations": str(self.violations),
            "first_violation": (
                None if self.first_violation is None else self.first_violation.to_json()
            ),
        }


def verify_theorem(
    q: int,
    m: int,
    n: int,
    m1_size: int,
    m2_size: int,
    t_mode: TMode = "exact",
    node_limit: int = DEFAULT_SEARCH_NODE_LIMIT,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> TheoremSweep:
    """Checks the sphere-packing bound on every injective encoder over
    P(F_q^m)^n with the given alphabet sizes."""

    space = WordSpace(q, m, n, None, limit)
    words = list(space.words())
    result = TheoremSweep(q, m, n, m1_size, m2_size, t_mode)
    t_cache: TCache = {}
    for e in enumerate_encoders(words, m1_size, m2_size, limit):
        result.encoders += 1
        log.progress("theorem sweep, encoders checked", result.encoders, 10000)
        rep = check_sphere_packing(e, t_mode, node_limit, limit, t_cache)
        if not rep.applicable:
            continue
        result.applicable += 1
        match rep.verdict:
            case "satisfied":
                result.satisfied += 1
            case "inconclusive":
                result.inconclusive += 1
            case "vacuous":
                result.vacuous += 1
            case "violated":
                result.violations += 1
                if result.first_violation is None:
                    result.first_violation = rep
    return result
