import argparse
from fractions import Fraction

from ..cli.cmd import RootCommand
from ..cli.output import (
    emit_document,
    emit_fields,
    enumeration_limit,
    make_run_config,
    output_format,
)
from ..config import GlobalConfig
from ..errors import TheoremViolationError
from ..subspace.grassmannian import enumerate_grassmannian
from ..utils.porcelain import PorcelainEntityType
from .neighborhood import ball_bruteforce
from .space import WordSpace
from .volume import (
    avg_ball_volume,
    ball_volume,
    grassmannian_ball_volume,
    max_ball_volume,
    min_ball_profile,
    sphere_volume,
)
from .word import Word


def _parse_profile(s: str, n: int) -> tuple[int, ...]:
    try:
        kvec = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ValueError(f"profile must be comma-separated integers, got '{s}'") from None
    if len(kvec) == 1:
        return kvec * n
    if len(kvec) != n:
        raise ValueError(f"profile {kvec} has {len(kvec)} entries, expected n = {n}")
    return kvec


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _bruteforce_avg(q: int, m: int, n: int, r: int, limit: int) -> Fraction:
    space = WordSpace(q, m, n, None, limit)
    total = sum(len(space.ball_indices(c, r)) for c in range(space.size))
    return Fraction(total, space.size)


class VolumeCommand(
    RootCommand,
    cmd="volume",
    output=True,
    guards="enumeration",
    help="Exact sphere, ball, average, minimum and maximum volumes in P(F_q^m)^n",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True, help="Field order")
        p.add_argument("--m", type=int, required=True, help="Ambient dimension")
        p.add_argument("--n", type=int, default=1, help="Number of shots (default: 1)")
        p.add_argument("--r", type=int, default=None, help="Ball radius")
        p.add_argument(
            "--k",
            type=str,
            default=None,
            help="Center dimension profile, comma-separated; one value applies to every shot",
        )
        what = p.add_mutually_exclusive_group()
        what.add_argument(
            "--sphere",
            type=int,
            metavar="H",
            default=None,
            help="Single-shot sphere volume at distance H from a k-dimensional subspace",
        )
        what.add_argument("--avg", action="store_true", help="Average ball volume")
        what.add_argument("--min", action="store_true", help="Minimum ball volume over profiles")
        what.add_argument("--max", action="store_true", help="Maximum ball volume over profiles")
        what.add_argument(
            "--l",
            type=int,
            default=None,
            help="Ball volume inside the l-dimensional Grassmannian word space",
        )
        p.add_argument(
            "--oracle",
            action="store_true",
            help="Cross-check the closed form against brute-force enumeration",
        )

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        q: int = args.q
        m: int = args.m
        n: int = args.n
        r: int | None = args.r
        limit = enumeration_limit(cfg, args)
        if n < 1:
            raise ValueError(f"--n must be positive, got {n}")

        fields: list[tuple[str, object]] = []
        value: str
        oracle: str | None = None

        if args.sphere is not None:
            if args.k is None:
                raise ValueError("--sphere needs --k")
            (k,) = _parse_profile(args.k, 1)
            quantity = "sphere"
            value = str(sphere_volume(m, q, k, args.sphere))
        else:
            if r is None:
                raise ValueError("--r is required")
            if args.avg:
                quantity = "avg_ball"
                avg = avg_ball_volume(q, m, n, r)
                value = _fmt_fraction(avg)
                if args.oracle:
                    oracle = _fmt_fraction(_bruteforce_avg(q, m, n, r, limit))
            elif args.min:
                quantity = "min_ball"
                kvec, vol = min_ball_profile(q, m, n, r, limit)
                value = str(vol)
                fields.append(("argmin profile", ",".join(str(k) for k in kvec)))
            elif args.max:
                quantity = "max_ball"
                value = str(max_ball_volume(q, m, n, r, limit))
            elif args.l is not None:
                quantity = "grassmannian_ball"
                value = str(grassmannian_ball_volume(m, q, args.l, n, r))
                if args.oracle:
                    space = WordSpace(q, m, n, args.l, limit)
                    oracle = str(len(space.ball_indices(0, r)))
            else:
                if args.k is None:
                    raise ValueError("a ball volume needs --k (or one of --avg, --min, --max, --l)")
                kvec = _parse_profile(args.k, n)
                quantity = "ball"
                value = str(ball_volume(m, q, kvec, r))
                if args.oracle:
                    shots = tuple(enumerate_grassmannian(q, m, k, limit)[0] for k in kvec)
                    center = Word(q, m, shots)
                    oracle = str(len(ball_bruteforce(center, r, limit)))

        if oracle is not None and oracle != value:
            raise TheoremViolationError(
                "volume oracle", f"closed form gives {value}, enumeration gives {oracle}"
            )

        fmt = output_format(cfg, args)
        if fmt == "json":
            rc = make_run_config(
                args,
                fmt,
                ("q", "m", "n", "r", "k", "sphere", "avg", "min", "max", "l", "oracle", "limit"),
            )
            emit_document(
                PorcelainEntityType.VolumeV1,
                rc,
                {"quantity": quantity, "value": value, "oracle": oracle},
            )
            return 0

        rows: list[tuple[str, object]] = [(quantity, value)]
        rows.extend(fields)
        if oracle is not None:
            rows.append(("brute force", oracle))
        emit_fields(fmt, rows)
        return 0
