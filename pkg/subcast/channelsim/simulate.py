from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TypedDict

from .. import log
from ..broadcast.decode import MinDistanceDecoder, User
from ..broadcast.encoder import BroadcastEncoder, SeparationVector, separation_vector
from ..config.schema import DEFAULT_ENUMERATION_LIMIT
from ..errors import TheoremViolationError
from ..multishot.word import word_distance
from ..subspace.subspace import contains
from .channel import ChannelModel, ChannelModelDocType, RngStream, transmit

USERS: tuple[User, User] = (1, 2)


class UserStatsDocType(TypedDict):
    decode_errors: str
    guarantee_scope_trials: str
    guarantee_violations: str
    histogram: dict[str, str]


class ViolationDocType(TypedDict):
    seed: str
    trial: str
    user: int
    m1: int
    m2: int
    distance: str


class SimReportDocType(TypedDict):
    seed: str
    trials: str
    model: ChannelModelDocType
    separation: dict[str, str]
    users: dict[str, UserStatsDocType]
    violations: list[ViolationDocType]


@dataclass
class UserStats:
    decode_errors: int = 0
    """Wrong decodes outside the guarantee scope 2 d(X, Y) < s_i."""
    guarantee_scope_trials: int = 0
    guarantee_violations: int = 0
    histogram: dict[int, int] = field(default_factory=dict)
    """Trial counts by d(X, Y) of this user's received word."""

    def merge(self, other: "UserStats") -> None:
        self.decode_errors += other.decode_errors
        self.guarantee_scope_trials += other.guarantee_scope_trials
        self.guarantee_violations += other.guarantee_violations
        for d, c in other.histogram.items():
            self.histogram[d] = self.histogram.get(d, 0) + c

    def to_json(self) -> UserStatsDocType:
        return {
            "decode_errors": str(self.decode_errors),
            "guarantee_scope_trials": str(self.guarantee_scope_trials),
            "guarantee_violations": str(self.guarantee_violations),
            "histogram": {str(d): str(self.histogram[d]) for d in sorted(self.histogram)},
        }


@dataclass(frozen=True)
class ViolationRecord:
    """Enough to replay the failing trial: the seed and the trial index fix
    every random draw."""

    seed: int
    trial: int
    user: User
    m1: int
    m2: int
    distance: int

    def to_json(self) -> ViolationDocType:
        return {
            "seed": str(self.seed),
            "trial": str(self.trial),
            "user": self.user,
            "m1": self.m1,
            "m2": self.m2,
            "distance": str(self.distance),
        }


@dataclass
class SimReport:
    seed: int
    trials: int
    model: ChannelModel
    separation: SeparationVector
    users: dict[User, UserStats]
    violations: list[ViolationRecord] = field(default_factory=list)

    def to_json(self) -> SimReportDocType:
        return {
            "seed": str(self.seed),
            "trials": str(self.trials),
            "model": self.model.to_json(),
            "separation": self.separation.to_json(),
            "users": {str(u): self.users[u].to_json() for u in USERS},
            "violations": [v.to_json() for v in self.violations],
        }


def _in_scope(d: int, s: int | None) -> bool:
    return s is None or 2 * d < s


def _run_chunk(
    e: BroadcastEncoder,
    decoder: MinDistanceDecoder,
    sv: SeparationVector,
    model: ChannelModel,
    seed: int,
    start: int,
    stop: int,
    check_containment: bool,
    limit: int,
) -> tuple[dict[User, UserStats], list[ViolationRecord]]:
    stats: dict[User, UserStats] = {u: UserStats() for u in USERS}
    violations: list[ViolationRecord] = []
    root = RngStream(seed)
    for trial in range(start, stop):
        msg_rng = root.child(trial, 0).generator()
        m1 = int(msg_rng.integers(1, e.m1_size + 1))
        m2 = int(msg_rng.integers(1, e.m2_size + 1))
        x = e.word_at(m1, m2)
        for u in USERS:
            y = transmit(x, model, root.child(trial, u), limit)
            if check_containment and model.is_multiplicative:
                for i, (xs, ys) in enumerate(zip(x.shots, y.shots)):
                    if not contains(xs, ys):
                        raise TheoremViolationError(
                            "multiplicative channel",
                            f"seed {seed}, trial {trial}, user {u}, shot {i}: {ys} not in {xs}",
                        )
            d = word_distance(x, y)
            st = stats[u]
            st.histogram[d] = st.histogram.get(d, 0) + 1
            truth = m1 if u == 1 else m2
            correct = decoder.decode(y, u) == truth
            if _in_scope(d, sv.s1 if u == 1 else sv.s2):
                st.guarantee_scope_trials += 1
                if not correct:
                    st.guarantee_violations += 1
                    violations.append(ViolationRecord(seed, trial, u, m1, m2, d))
            elif not correct:
                st.decode_errors += 1
    return stats, violations


def simulate(
    e: BroadcastEncoder,
    model: ChannelModel,
    trials: int,
    seed: int,
    threads: int = 1,
    check_containment: bool = False,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> SimReport:
    """Sends uniformly drawn message pairs through independent per-user
    channels and decodes each at minimum distance.

    Trial ``k`` draws its messages from stream (seed, k, 0) and user ``u``'s
    channel from (seed, k, u), so the report does not depend on ``threads``."""

    if trials < 1:
        raise ValueError(f"trial count must be positive, got {trials}")
    if threads < 1:
        raise ValueError(f"thread count must be positive, got {threads}")

    sv = separation_vector(e)
    decoder = MinDistanceDecoder(e)
    report = SimReport(seed, trials, model, sv, {u: UserStats() for u in USERS})

    chunks = min(threads, trials)
    bounds = [trials * i // chunks for i in range(chunks + 1)]
    log.D(f"simulating {trials} trials over {model} in {chunks} chunk(s)")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(
                _run_chunk,
                e,
                decoder,
                sv,
                model,
                seed,
                bounds[i],
                bounds[i + 1],
                check_containment,
                limit,
            )
            for i in range(chunks)
        ]
        # reduce in chunk order
        for fut in futures:
            stats, violations = fut.result()
            for u in USERS:
                report.users[u].merge(stats[u])
            report.violations.extend(violations)

    for v in report.violations:
        log.W(f"decoding guarantee failed: seed {v.seed}, trial {v.trial}, user {v.user}")
    return report
