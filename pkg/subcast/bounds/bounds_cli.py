import argparse

from .. import log
from ..broadcast.broadcast_cli import read_encoder_arg
from ..cli.cmd import RootCommand
from ..cli.output import (
    emit_document,
    emit_fields,
    emit_rows,
    enumeration_limit,
    make_run_config,
    node_limit,
    output_format,
)
from ..config import GlobalConfig
from ..errors import GuardExceededError, InfeasibleCodeError, TheoremViolationError
from ..utils.porcelain import PorcelainEntityType
from .report import (
    BoundReport,
    check_sphere_packing,
    format_fraction,
    gaussian_bounds_check,
    max_m2_bound,
)
from .sweep import TheoremSweep, verify_theorem
from .tvalue import TValue, t_exact, t_lower_trivial, t_upper_greedy

T_MODES = ("exact", "trivial")
T_METHODS = ("exact", "trivial", "greedy", "all")
SWEEP_KEYS = ("q", "m", "n", "m1", "m2", "t_mode", "limit", "node_limit")
TMIN_KEYS = ("q", "m", "n", "d", "N", "r", "l", "method", "no_reduce", "limit", "node_limit")


def _add_t_mode_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--t-mode",
        choices=T_MODES,
        default="exact",
        help="Exact T by exhaustive search, or its trivial lower bound (default: exact)",
    )


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise ValueError(f"missing required option(s): {', '.join(missing)}")


def _report_rows(rep: BoundReport) -> list[tuple[str, object]]:
    t = rep.t
    t_str: str | None = None
    if t is not None:
        t_str = f"{t.value} ({t.kind}, {t.method})"
    rows: list[tuple[str, object]] = [
        ("bound", rep.bound),
        ("s1, s2", f"{rep.s1}, {rep.s2}"),
        ("|M1|", rep.m1_size),
        ("|M2|", rep.m2_size),
        ("T", t_str),
        ("lhs", rep.lhs),
        ("rhs", None if rep.rhs is None else format_fraction(rep.rhs)),
    ]
    if rep.m2_ceiling is not None:
        rows.append(("max |M2|", rep.m2_ceiling))
    if rep.packing_ratio is not None:
        rows.append(("binom^n / T", format_fraction(rep.packing_ratio)))
    if rep.swapped:
        rows.append(("roles", "swapped (s2 < s1)"))
    rows.append(("verdict", rep.verdict))
    return rows


def _emit_report(
    cfg: GlobalConfig,
    args: argparse.Namespace,
    rep: BoundReport,
    keys: tuple[str, ...],
) -> int:
    for note in rep.notes:
        log.I(note)
    if not rep.applicable:
        log.W("the bound's hypothesis does not hold for these parameters")

    fmt = output_format(cfg, args)
    if fmt == "json":
        rc = make_run_config(args, fmt, keys)
        emit_document(PorcelainEntityType.BoundReportV1, rc, rep.to_json())
    else:
        emit_fields(fmt, _report_rows(rep))

    if rep.verdict != "violated":
        return 0
    if rep.bound == "corollary":
        # a requested |M2| above the ceiling is an infeasible parameter set
        log.W(f"no constant-dimension code has |M2| = {rep.m2_size} with these parameters")
        return 0
    raise TheoremViolationError(rep.bound, f"lhs {rep.lhs} exceeds rhs {rep.rhs}")


def _emit_sweep(
    cfg: GlobalConfig,
    args: argparse.Namespace,
    sweep: TheoremSweep,
    keys: tuple[str, ...] = SWEEP_KEYS,
) -> int:
    fmt = output_format(cfg, args)
    if fmt == "json":
        rc = make_run_config(args, fmt, keys)
        emit_document(PorcelainEntityType.TheoremSweepV1, rc, sweep.to_json())
    else:
        emit_fields(
            fmt,
            [
                ("encoders", sweep.encoders),
                ("applicable", sweep.applicable),
                ("satisfied", sweep.satisfied),
                ("inconclusive", sweep.inconclusive),
                ("vacuous", sweep.vacuous),
                ("violations", sweep.violations),
            ],
        )
    log.I(f"{sweep.violations} violations among {sweep.applicable} applicable encoders")

    if sweep.violations:
        fv = sweep.first_violation
        raise TheoremViolationError(
            "sphere-packing bound",
            f"{sweep.violations} encoder(s) violate it"
            + ("" if fv is None else f"; first: {fv.to_json()}"),
        )
    return 0


def _run_sweep(cfg: GlobalConfig, args: argparse.Namespace) -> TheoremSweep:
    return verify_theorem(
        args.q,
        args.m,
        args.n,
        args.m1,
        args.m2,
        args.t_mode,
        node_limit(cfg, args),
        enumeration_limit(cfg, args),
    )


class BoundCommand(
    RootCommand,
    cmd="bound",
    output=True,
    guards="search",
    help="Evaluate the sphere-packing bound on an encoder, or its constant-dimension corollary",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        what = p.add_mutually_exclusive_group(required=True)
        what.add_argument("--encoder", metavar="FILE", help="Check an encoder file; - for stdin")
        what.add_argument(
            "--corollary",
            action="store_true",
            help="Largest |M2| allowed for constant-dimension codes with the given parameters",
        )
        what.add_argument(
            "--gaussian-bounds",
            "--fact1",
            dest="gaussian_bounds",
            action="store_true",
            help="Check the Gaussian coefficient bounds q^(l(n-l)) < binom(n, l)_q < 4 q^(l(n-l))",
        )
        what.add_argument(
            "--verify-theorem",
            action="store_true",
            help="Check the bound on every injective encoder over a small word space",
        )
        p.add_argument("--q", type=int, default=None, help="Field order")
        p.add_argument("--m", type=int, default=None, help="Ambient dimension")
        p.add_argument("--n", type=int, default=None, help="Number of shots")
        p.add_argument("--l", type=int, default=None, help="Subspace dimension")
        p.add_argument("--s1", type=int, default=None, help="Separation for user 1")
        p.add_argument("--s2", type=int, default=None, help="Separation for user 2")
        p.add_argument("--m1", type=int, default=None, help="|M1|")
        p.add_argument(
            "--m2", type=int, default=None, help="|M2|; with --corollary, the size to judge"
        )
        _add_t_mode_arg(p)

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        limit = enumeration_limit(cfg, args)
        nodes = node_limit(cfg, args)

        if args.encoder is not None:
            e = read_encoder_arg(args.encoder)
            rep = check_sphere_packing(e, args.t_mode, nodes, limit)
            return _emit_report(cfg, args, rep, ("encoder", "t_mode", "limit", "node_limit"))

        if args.corollary:
            _require(args, "q", "m", "n", "l", "s1", "s2", "m1")
            rep = max_m2_bound(
                args.q,
                args.m,
                args.n,
                args.l,
                args.s1,
                args.s2,
                args.m1,
                args.t_mode,
                args.m2,
                nodes,
                limit,
            )
            keys = ("q", "m", "n", "l", "s1", "s2", "m1", "m2", "t_mode", "limit", "node_limit")
            return _emit_report(cfg, args, rep, keys)

        if args.gaussian_bounds:
            _require(args, "n", "l", "q")
            gb = gaussian_bounds_check(args.n, args.l, args.q)
            fmt = output_format(cfg, args)
            if fmt == "json":
                emit_document(
                    PorcelainEntityType.BoundReportV1,
                    make_run_config(args, fmt, ("n", "l", "q")),
                    {
                        "bound": "gaussian",
                        "lower": str(gb.lower),
                        "value": str(gb.value),
                        "upper": str(gb.upper),
                        "holds": gb.holds,
                    },
                )
            else:
                emit_fields(
                    fmt,
                    [
                        ("lower", gb.lower),
                        ("binom(n, l)_q", gb.value),
                        ("upper", gb.upper),
                        ("bounds", f"{gb.lower} < {gb.value} < {gb.upper}"),
                    ],
                )
            if not gb.holds:
                raise TheoremViolationError(
                    "Gaussian coefficient bounds", f"{gb.lower} < {gb.value} < {gb.upper} is false"
                )
            return 0

        _require(args, "q", "m")
        if args.n is None:
            args.n = 1
        if args.m1 is None:
            args.m1 = 2
        if args.m2 is None:
            args.m2 = 2
        sweep = _run_sweep(cfg, args)
        return _emit_sweep(cfg, args, sweep)


class VerifyTheoremCommand(
    RootCommand,
    cmd="verify-theorem",
    output=True,
    guards="search",
    help="Check the sphere-packing bound on every injective encoder over a small word space",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True, help="Field order")
        p.add_argument("--m", type=int, required=True, help="Ambient dimension")
        p.add_argument("--n", type=int, default=1, help="Number of shots (default: 1)")
        p.add_argument("--m1", type=int, default=2, help="|M1| (default: 2)")
        p.add_argument("--m2", type=int, default=2, help="|M2| (default: 2)")
        _add_t_mode_arg(p)

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        sweep = _run_sweep(cfg, args)
        return _emit_sweep(cfg, args, sweep)


def _t_rows(results: list[tuple[str, TValue | None, str | None]]) -> list[tuple[object, ...]]:
    rows: list[tuple[object, ...]] = []
    for method, t, note in results:
        if t is None:
            rows.append((method, None, None, note))
        else:
            nodes = f"{t.nodes} nodes" if t.nodes else None
            rows.append((method, t.value, t.kind, note or nodes))
    return rows


class TMinCommand(
    RootCommand,
    cmd="tmin",
    output=True,
    guards="search",
    help="Smallest r-neighborhood volume of N-word codes of minimum distance d",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True, help="Field order")
        p.add_argument("--m", type=int, required=True, help="Ambient dimension")
        p.add_argument("--n", type=int, default=1, help="Number of shots (default: 1)")
        p.add_argument("--d", type=int, required=True, help="Minimum distance of the code")
        p.add_argument("--N", type=int, required=True, help="Number of codewords")
        p.add_argument("--r", type=int, required=True, help="Neighborhood radius")
        p.add_argument("--l", type=int, default=None, help="Restrict to l-dimensional subspaces")
        p.add_argument(
            "--method",
            choices=T_METHODS,
            default="exact",
            help="exact search, trivial lower bound, greedy upper estimate, or all"
            " (default: exact)",
        )
        p.add_argument(
            "--no-reduce",
            action="store_true",
            help="Do not use Singer symmetry to reduce the exact search",
        )

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        limit = enumeration_limit(cfg, args)
        nodes = node_limit(cfg, args)
        q, m, n, d, N, r, l = args.q, args.m, args.n, args.d, args.N, args.r, args.l
        methods = ("exact", "trivial", "greedy") if args.method == "all" else (args.method,)

        results: list[tuple[str, TValue | None, str | None]] = []
        for method in methods:
            match method:
                case "exact":
                    try:
                        t = t_exact(q, m, n, d, N, r, l, not args.no_reduce, nodes, limit)
                    except InfeasibleCodeError as e:
                        log.W(str(e))
                        results.append((method, None, "infeasible"))
                        continue
                    except GuardExceededError:
                        if args.method != "all":
                            raise
                        log.W("exact T search exceeded the node limit; skipped")
                        results.append((method, None, "node limit exceeded"))
                        continue
                    results.append((method, t, None))
                case "trivial":
                    results.append((method, t_lower_trivial(q, m, n, d, N, r, l, limit), None))
                case "greedy":
                    g = t_upper_greedy(q, m, n, d, N, r, l, limit)
                    results.append((method, g, None if g is not None else "first fit fell short"))

        fmt = output_format(cfg, args)
        if fmt == "json":
            emit_document(
                PorcelainEntityType.TValueV1,
                make_run_config(args, fmt, TMIN_KEYS),
                {
                    "results": {
                        method: (None if t is None else t.to_json()) for method, t, _ in results
                    },
                    "notes": {method: note for method, _, note in results if note is not None},
                },
            )
            return 0

        emit_rows(fmt, ("method", "T", "kind", "note"), _t_rows(results))
        return 0
