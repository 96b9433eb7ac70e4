import argparse

from .. import log
from ..config import GlobalConfig
from ..version import COPYRIGHT_NOTICE, SUBCAST_SEMVER
from .cmd import RootCommand


class VersionCommand(
    RootCommand,
    cmd="version",
    help="Print version information",
):
    @classmethod
    def main(cls, cfg: GlobalConfig, args: argparse.Namespace) -> int:
        return cli_version(cfg, args)


def cli_version(cfg: GlobalConfig, args: argparse.Namespace) -> int:
    import galois
    import numpy

    log.stdout(f"subcast {SUBCAST_SEMVER}\n")
    log.stdout(f"Using galois {galois.__version__} and numpy {numpy.__version__}.\n")
    log.stdout(COPYRIGHT_NOTICE)
    return 0
