import argparse

from .. import log
from ..broadcast.broadcast_cli import read_encoder_arg
from ..broadcast.encoder import BroadcastEncoder
from ..broadcast.search import greedy_cloud_search
from ..cli.cmd import RootCommand
from ..cli.output import (
    emit_document,
    emit_rows,
    enumeration_limit,
    make_run_config,
    output_format,
)
from ..config import GlobalConfig
from ..errors import TheoremViolationError
from ..utils.porcelain import PorcelainEntityType
from .channel import ChannelModel, adversarial_channel, erasure_channel, matrix_channel
from .simulate import USERS, SimReport, simulate


def _channel_model(args: argparse.Namespace) -> ChannelModel:
    if args.t is not None:
        return matrix_channel(args.t)
    if args.budget is not None:
        return adversarial_channel(args.budget)
    return erasure_channel(0.0 if args.eps is None else args.eps)


def _default_encoder(args: argparse.Namespace, limit: int) -> BroadcastEncoder:
    res = greedy_cloud_search(args.q, args.m, args.n, None, args.s1, args.s2, args.m1, None, limit)
    if res.encoder is None:
        raise ValueError(f"no encoder to simulate: greedy construction failed: {res.reason}")
    log.I(f"simulating the greedy encoder with |M1| = {res.m1_size}, |M2| = {res.m2_size}")
    return res.encoder


def _summary_rows(rep: SimReport) -> list[tuple[object, ...]]:
    rows: list[tuple[object, ...]] = []
    for u in USERS:
        st = rep.users[u]
        rate = st.decode_errors / rep.trials
        rows.append(
            (
                u,
                st.decode_errors,
                f"{rate:.4f}",
                st.guarantee_scope_trials,
                st.guarantee_violations,
                " ".join(f"{d}:{st.histogram[d]}" for d in sorted(st.histogram)),
            )
        )
    return rows


class SimulateCommand(
    RootCommand,
    cmd="simulate",
    output=True,
    guards="enumeration",
    help="Monte-Carlo transmission over operator channels with minimum distance decoding",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--encoder",
            metavar="FILE",
            default=None,
            help="Encoder file, - for stdin"
            " (default: a greedy encoder from --q/--m/--n/--s1/--s2/--m1)",
        )
        p.add_argument("--q", type=int, default=2, help="Field order of the default encoder")
        p.add_argument("--m", type=int, default=3, help="Ambient dimension of the default encoder")
        p.add_argument("--n", type=int, default=1, help="Shots of the default encoder")
        p.add_argument("--s1", type=int, default=1, help="Target s1 of the default encoder")
        p.add_argument("--s2", type=int, default=2, help="Target s2 of the default encoder")
        p.add_argument("--m1", type=int, default=2, help="Target |M1| of the default encoder")

        chan = p.add_mutually_exclusive_group()
        chan.add_argument(
            "--eps",
            type=float,
            default=None,
            help="Erasure channel deleting each basis vector with this probability (default: 0)",
        )
        chan.add_argument(
            "--t",
            type=int,
            default=None,
            help="Random matrix channel with t received combinations per shot",
        )
        chan.add_argument(
            "--budget",
            type=int,
            default=None,
            help="Adversary moving the word uniformly within this distance",
        )
        p.add_argument(
            "--trials", type=int, default=10000, help="Number of trials (default: 10000)"
        )
        p.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
        p.add_argument(
            "--threads",
            type=int,
            default=None,
            help="Worker threads; never changes the report (default: simulate.threads)",
        )
        p.add_argument(
            "--check-containment",
            action="store_true",
            help="Abort if a multiplicative channel output is not contained in its input",
        )

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        limit = enumeration_limit(cfg, args)
        threads: int = cfg.threads if args.threads is None else args.threads
        if args.seed < 0:
            raise ValueError(f"--seed must be non-negative, got {args.seed}")

        model = _channel_model(args)
        if args.encoder is not None:
            e = read_encoder_arg(args.encoder)
        else:
            e = _default_encoder(args, limit)

        rep = simulate(e, model, args.trials, args.seed, threads, args.check_containment, limit)

        fmt = output_format(cfg, args)
        if fmt == "json":
            keys = ["encoder", "eps", "t", "budget", "trials", "seed", "check_containment", "limit"]
            if args.encoder is None:
                keys[1:1] = ["q", "m", "n", "s1", "s2", "m1"]
            emit_document(
                PorcelainEntityType.SimReportV1,
                make_run_config(args, fmt, keys),
                rep.to_json(),
            )
        else:
            emit_rows(
                fmt,
                ("user", "errors", "error rate", "in scope", "violations", "d(X, Y) histogram"),
                _summary_rows(rep),
                title=f"{rep.trials} trials over {model}, separation {rep.separation}",
            )

        if rep.violations:
            raise TheoremViolationError(
                "minimum distance decoding guarantee",
                f"{len(rep.violations)} trial(s) decoded wrongly within the guarantee",
            )
        return 0
