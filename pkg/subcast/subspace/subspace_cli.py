import argparse
import json

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
from ..multishot.word import Word, word_distance
from ..utils.porcelain import PorcelainEntityType
from .grassmannian import enumerate_grassmannian, enumerate_projective_space
from .subspace import Subspace, distance


def _parse_json_arg(s: str, what: str) -> object:
    try:
        return json.loads(s)
    except json.JSONDecodeError as e:
        raise ValueError(f"{what} is not valid JSON: {e}") from e


class DistanceCommand(
    RootCommand,
    cmd="distance",
    output=True,
    help="Subspace distance of two subspaces, or multishot distance of two words",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True, help="Field order")
        p.add_argument("--m", type=int, required=True, help="Ambient dimension")
        p.add_argument(
            "--word",
            action="store_true",
            help="Operands are words (lists of subspaces) rather than subspaces",
        )
        p.add_argument("lhs", help="First operand as JSON, e.g. '[[1,0],[0,1]]'")
        p.add_argument("rhs", help="Second operand as JSON")

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        q: int = args.q
        m: int = args.m
        lhs = _parse_json_arg(args.lhs, "first operand")
        rhs = _parse_json_arg(args.rhs, "second operand")

        if args.word:
            x = Word.from_json(q, m, lhs)  # type: ignore[arg-type]
            y = Word.from_json(q, m, rhs)  # type: ignore[arg-type]
            d = word_distance(x, y)
            shown = (str(x), str(y))
        else:
            u = Subspace.from_json(q, m, lhs)  # type: ignore[arg-type]
            v = Subspace.from_json(q, m, rhs)  # type: ignore[arg-type]
            d = distance(u, v)
            shown = (str(u), str(v))

        fmt = output_format(cfg, args)
        if fmt == "json":
            rc = make_run_config(args, fmt, ("q", "m", "word", "lhs", "rhs"))
            emit_document(PorcelainEntityType.DistanceV1, rc, {"distance": str(d)})
            return 0

        emit_fields(fmt, [("lhs", shown[0]), ("rhs", shown[1]), ("distance", d)])
        return 0


class EnumerateCommand(
    RootCommand,
    cmd="enumerate",
    output=True,
    guards="enumeration",
    help="List a Grassmannian or the whole projective space in canonical order",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True, help="Field order")
        p.add_argument("--m", type=int, required=True, help="Ambient dimension")
        p.add_argument(
            "--l",
            type=int,
            default=None,
            help="Only list subspaces of this dimension",
        )

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        q: int = args.q
        m: int = args.m
        l: int | None = args.l
        limit = enumeration_limit(cfg, args)

        if l is None:
            subspaces = enumerate_projective_space(q, m, limit)
        else:
            subspaces = enumerate_grassmannian(q, m, l, limit)

        fmt = output_format(cfg, args)
        if fmt == "json":
            rc = make_run_config(args, fmt, ("q", "m", "l", "limit"))
            emit_document(
                PorcelainEntityType.SubspaceListV1,
                rc,
                {"count": str(len(subspaces)), "subspaces": [u.to_json() for u in subspaces]},
            )
            return 0

        emit_rows(
            fmt,
            ("index", "dim", "basis"),
            ((i, u.dim, str(u)) for i, u in enumerate(subspaces)),
        )
        return 0
