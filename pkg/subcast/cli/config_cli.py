import argparse
from typing import Callable

from .. import config, log
from ..config.editor import ConfigEditor
from ..config.schema import CONFIG_OPTIONS, decode_value, encode_value
from .cmd import RootCommand


def _edit_user_config(cfg: config.GlobalConfig, fn: Callable[[ConfigEditor], None]) -> int:
    with ConfigEditor.work_on_user_local_config(cfg) as ed:
        fn(ed)
        ed.stage()
    return 0


class ConfigCommand(
    RootCommand,
    cmd="config",
    has_subcommands=True,
    help="Manage subcast's config options",
):
    pass


class ConfigListCommand(
    ConfigCommand,
    cmd="list",
    help="List every config option with its effective value",
):
    @classmethod
    def main(cls, cfg: config.GlobalConfig, args: argparse.Namespace) -> int:
        for (section, leaf), opt in CONFIG_OPTIONS.items():
            key = f"{section}.{leaf}"
            val = cfg.get_by_key(key)
            mark = "" if val == opt.default else "  (changed)"
            log.stdout_plain(f"{key} = {encode_value(val)}{mark}")
        return 0


class ConfigGetCommand(
    ConfigCommand,
    cmd="get",
    help="Query the effective value of a config option",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("key", help="The config option to query, e.g. guards.enumeration_limit")

    @classmethod
    def main(cls, cfg: config.GlobalConfig, args: argparse.Namespace) -> int:
        val = cfg.get_by_key(args.key)
        if val is None:
            log.F(f"unknown config option '{args.key}'")
            return 1
        log.stdout_plain(encode_value(val))
        return 0


class ConfigSetCommand(
    ConfigCommand,
    cmd="set",
    help="Set a config option in the user-local config file",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("key", help="The config option to set")
        p.add_argument("value", help="The value, e.g. 50_000_000 or json")

    @classmethod
    def main(cls, cfg: config.GlobalConfig, args: argparse.Namespace) -> int:
        pyval = decode_value(args.key, args.value)
        return _edit_user_config(cfg, lambda ed: ed.set_value(args.key, pyval))


class ConfigUnsetCommand(
    ConfigCommand,
    cmd="unset",
    help="Remove a config option from the user-local config file",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("key", help="The config option to unset")

    @classmethod
    def main(cls, cfg: config.GlobalConfig, args: argparse.Namespace) -> int:
        return _edit_user_config(cfg, lambda ed: ed.unset_value(args.key))


class ConfigRemoveSectionCommand(
    ConfigCommand,
    cmd="remove-section",
    help="Remove a whole section (guards, output or simulate) from the user-local config file",
):
    @classmethod
    def configure_args(cls, p: argparse.ArgumentParser) -> None:
        p.add_argument("section", help="The section to remove")

    @classmethod
    def main(cls, cfg: config.GlobalConfig, args: argparse.Namespace) -> int:
        return _edit_user_config(cfg, lambda ed: ed.remove_section(args.section))
