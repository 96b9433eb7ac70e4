import pytest

from subcast.cli import EXIT_USAGE
from subcast.cli import builtin_commands  # noqa: F401 # registers every command
from subcast.cli.cmd import RootCommand


def test_guard_flags_follow_declaration() -> None:
    p = RootCommand.build_argparse()

    tmin = ["tmin", "--q", "2", "--m", "3", "--d", "2", "--N", "3", "--r", "1"]
    args = p.parse_args([*tmin, "--limit", "9", "--node-limit", "5", "--format", "json"])
    assert (args.limit, args.node_limit, args.format) == (9, 5, "json")
    assert args.cmd_name == "tmin"

    args = p.parse_args(["enumerate", "--q", "2", "--m", "2", "--limit", "9"])
    assert args.limit == 9
    assert not hasattr(args, "node_limit")


def test_undeclared_flags_are_usage_errors() -> None:
    p = RootCommand.build_argparse()
    with pytest.raises(SystemExit) as exc:
        p.parse_args(["distance", "--q", "2", "--m", "2", "[[1,0]]", "[[0,1]]", "--limit", "3"])
    assert exc.value.code == EXIT_USAGE
    construct = ["construct", "--q", "2", "--m", "3", "--s1", "1", "--s2", "2"]
    with pytest.raises(SystemExit) as exc:
        p.parse_args([*construct, "--format", "csv"])
    assert exc.value.code == EXIT_USAGE


def test_nested_command_names() -> None:
    args = RootCommand.build_argparse().parse_args(["config", "get", "simulate.threads"])
    assert args.cmd_name == "config get"
