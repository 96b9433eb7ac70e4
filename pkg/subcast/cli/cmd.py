import argparse
from typing import Callable, IO, Literal, NoReturn, Protocol

from ..config import GlobalConfig
from ..version import SUBCAST_SEMVER
from . import EXIT_USAGE, SUBCAST_ENTRYPOINT_NAME
from .output import add_format_arg, add_guard_args

CLIEntrypoint = Callable[[GlobalConfig, argparse.Namespace], int]

GuardKind = Literal["enumeration", "search"]


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors with exit status 1 instead of argparse's 2, which
    subcast reserves for exceeded guards."""

    def error(self, message: str) -> NoReturn:
        self.print_usage()
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _PrintHelp(Protocol):
    def print_help(self, file: IO[str] | None = None) -> None: ...


def _wrap_help(x: _PrintHelp) -> CLIEntrypoint:
    def _wrapped_(gc: GlobalConfig, args: argparse.Namespace) -> int:
        x.print_help()
        return 0

    return _wrapped_


class BaseCommand:
    """A node of the ``subcast`` command tree.

    Subclassing registers the command under its direct base. A command that
    renders a result document passes ``output=True`` and gets ``--format``;
    one that enumerates passes ``guards`` and gets ``--limit`` (plus
    ``--node-limit`` for ``guards="search"``)."""

    parsers: "list[type[BaseCommand]]" = []

    cmd: str | None
    has_subcommands: bool
    output: bool
    guards: GuardKind | None
    description: str | None
    prog: str | None
    help: str | None

    def __init_subclass__(
        cls,
        cmd: str | None,
        has_subcommands: bool = False,
        output: bool = False,
        guards: GuardKind | None = None,
        description: str | None = None,
        prog: str | None = None,
        help: str | None = None,
        **kwargs: object,
    ) -> None:
        cls.cmd = cmd
        cls.has_subcommands = has_subcommands
        cls.output = output
        cls.guards = guards
        cls.description = description
        cls.prog = prog
        cls.help = help

        cls.parsers.append(cls)

        super().__init_subclass__(**kwargs)

    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        """Configure arguments for this parser."""
        pass

    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        """Entrypoint of this command."""
        raise NotImplementedError

    @classmethod
    def full_name(cls) -> str:
        """Space-separated command path, as recorded in run configs."""

        names: list[str] = []
        c: type[BaseCommand] = cls
        while c.cmd is not None:
            names.append(c.cmd)
            c = c.mro()[1]
        return " ".join(reversed(names))

    @classmethod
    def build_argparse(cls) -> argparse.ArgumentParser:
        p = ArgumentParser(prog=cls.prog, description=cls.description)
        cls._configure(p)
        return p

    @classmethod
    def _configure(cls, p: argparse.ArgumentParser) -> None:
        cls.configure_args(p)
        if cls.output:
            add_format_arg(p)
        if cls.guards is not None:
            add_guard_args(p, search=cls.guards == "search")

        if not cls.has_subcommands:
            p.set_defaults(func=cls.main, cmd_name=cls.full_name())
            return

        p.set_defaults(func=_wrap_help(p), cmd_name=cls.full_name())
        sp = p.add_subparsers(title="subcommands")
        for sub in cls.parsers:
            # direct children only
            if sub.mro()[1] is not cls:
                continue
            assert sub.cmd is not None
            sub._configure(
                sp.add_parser(sub.cmd, help=sub.help, description=sub.description or sub.help)
            )


class RootCommand(
    BaseCommand,
    cmd=None,
    has_subcommands=True,
    prog=SUBCAST_ENTRYPOINT_NAME,
    description=f"Broadcast subspace code toolkit {SUBCAST_SEMVER}",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        from .version_cli import cli_version

        p.add_argument(
            "-V",
            "--version",
            action="store_const",
            dest="func",
            const=cli_version,
            help="Print version information",
        )
        p.add_argument(
            "--porcelain",
            action="store_true",
            help="Give the output in a machine-friendly format if applicable",
        )
