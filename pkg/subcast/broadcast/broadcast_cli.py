import argparse
import sys

from .. import log
from ..cli.cmd import RootCommand
from ..cli.output import (
    emit_document,
    emit_fields,
    emit_rows,
    enumeration_limit,
    make_run_config,
    output_format,
)
from ..config import GlobalConfig
from ..gf.field import field_for_order
from ..gf.singer import singer_modulus
from ..utils.porcelain import PorcelainEntityType, dumps_canonical
from .clouds import cloud_center_min_distance, clouds, decompose
from .encoder import BroadcastEncoder, format_rate, load_encoder, rate_pair, separation_vector
from .search import greedy_cloud_search


def read_encoder_arg(path: str) -> BroadcastEncoder:
    """Loads an encoder file; ``-`` reads standard input."""

    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fp:
            text = fp.read()
    return load_encoder(text)


class SeparationCommand(
    RootCommand,
    cmd="separation",
    output=True,
    help="Separation vector, rates and cloud structure of an encoder file",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("encoder", help="Encoder JSON file, or - for standard input")

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        e = read_encoder_arg(args.encoder)
        sv = separation_vector(e)
        r1, r2 = rate_pair(e)
        cl = clouds(e)

        decomposition: dict[str, object] | None = None
        if sv.s1 is not None and sv.s2 is not None and sv.s1 < sv.s2:
            d = decompose(e)
            cmd = cloud_center_min_distance(d)
            decomposition = {
                "base_m2": d.base_m2,
                "aux_code": d.aux_code.to_json(),
                "centers": {str(m2): w.to_json() for m2, w in sorted(d.centers.items())},
                "center_min_distance": None if cmd is None else str(cmd),
            }

        fmt = output_format(cfg, args)
        if fmt == "json":
            rc = make_run_config(args, fmt, ("encoder",))
            emit_document(
                PorcelainEntityType.SeparationV1,
                rc,
                {
                    "separation": sv.to_json(),
                    "rates": [format_rate(r1), format_rate(r2)],
                    "clouds": {str(m2): c.to_json() for m2, c in sorted(cl.items())},
                    "decomposition": decomposition,
                },
            )
            return 0

        fields: list[tuple[str, object]] = [
            ("q, m, n", f"{e.q}, {e.m}, {e.n}"),
            ("|M1|, |M2|", f"{e.m1_size}, {e.m2_size}"),
            ("s1", sv.to_json()["s1"]),
            ("s2", sv.to_json()["s2"]),
            ("R1", format_rate(r1)),
            ("R2", format_rate(r2)),
        ]
        if decomposition is not None:
            fields.append(("auxiliary cloud (M2)", decomposition["base_m2"]))
            fields.append(("center min distance", decomposition["center_min_distance"]))
        elif sv.s1 is not None and sv.s2 is not None:
            log.I(f"no cloud decomposition: it needs s1 < s2, got {sv}")
        emit_fields(fmt, fields)
        if fmt == "table":
            emit_rows(
                fmt,
                ("M2", "cloud"),
                ((m2, ", ".join(str(w) for w in c.words)) for m2, c in sorted(cl.items())),
            )
        return 0


class ConstructCommand(
    RootCommand,
    cmd="construct",
    guards="enumeration",
    help="Greedy superposition construction; writes an encoder file",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True, help="Field order")
        p.add_argument("--m", type=int, required=True, help="Ambient dimension")
        p.add_argument("--n", type=int, default=1, help="Number of shots (default: 1)")
        p.add_argument("--l", type=int, default=None, help="Restrict to l-dimensional subspaces")
        p.add_argument("--s1", type=int, required=True, help="Target s1")
        p.add_argument("--s2", type=int, required=True, help="Target s2")
        p.add_argument("--m1", type=int, default=1, help="Target |M1| (default: 1)")
        p.add_argument("--m2-limit", type=int, default=None, help="Stop after this many clouds")
        p.add_argument(
            "--singer",
            action=argparse.BooleanOptionalAction,
            default=None,
            help="Force Singer-translate clouds (needs --n 1 and --l) or, with --no-singer,"
            " first-fit clouds (default: Singer translates exactly when --n 1 and --l)",
        )
        p.add_argument(
            "-o",
            "--output",
            default=None,
            help="Write the encoder file here instead of standard output",
        )

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        res = greedy_cloud_search(
            args.q,
            args.m,
            args.n,
            args.l,
            args.s1,
            args.s2,
            args.m1,
            args.m2_limit,
            enumeration_limit(cfg, args),
            singer=args.singer,
        )
        if res.encoder is None or not res.success:
            log.W(f"construction failed: {res.reason}")
            return 0

        log.I(
            f"constructed |M1| = {res.m1_size}, |M2| = {res.m2_size}, separation {res.separation}"
        )
        rc = make_run_config(
            args, "json", ("q", "m", "n", "l", "s1", "s2", "m1", "m2_limit", "singer", "limit")
        )
        enc_doc: dict[str, object] = {**res.encoder.to_json()}
        if res.singer:
            enc_doc["singer_modulus"] = list(singer_modulus(field_for_order(args.q), args.m))
        doc = {"run_config": rc, **enc_doc}
        if args.output is None:
            emit_document(PorcelainEntityType.EncoderV1, rc, enc_doc)
        else:
            with open(args.output, "w", encoding="utf-8") as fp:
                fp.write(dumps_canonical(doc))
                fp.write("\n")
        return 0
