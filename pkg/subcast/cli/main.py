from ..config import GlobalConfig
from ..config.errors import ConfigError
from ..errors import (
    EncoderError,
    GuardExceededError,
    HypothesisError,
    InfeasibleCodeError,
    TheoremViolationError,
)
from . import EXIT_GUARD, EXIT_THEOREM_VIOLATION, EXIT_USAGE


def main(argv: list[str]) -> int:
    gc = GlobalConfig.load_from_config()

    import subcast
    from .. import log
    from .cmd import CLIEntrypoint, RootCommand
    from . import builtin_commands

    del builtin_commands

    p = RootCommand.build_argparse()
    args = p.parse_args(argv[1:])
    subcast.set_porcelain(args.porcelain)

    log.D(f"argv[0] = {argv[0]}, args={args}")

    func: CLIEntrypoint = args.func

    try:
        return func(gc, args)
    except GuardExceededError as e:
        log.F(f"{e}; raise the limit with --limit or the guards config section")
        return EXIT_GUARD
    except TheoremViolationError as e:
        log.F(f"{e}; this is a bug in subcast, please report it")
        return EXIT_THEOREM_VIOLATION
    except (EncoderError, HypothesisError, InfeasibleCodeError, ConfigError) as e:
        log.F(str(e))
        return EXIT_USAGE
    except ValueError as e:
        log.F(f"invalid parameter: {e}")
        return EXIT_USAGE
    except OSError as e:
        log.F(f"cannot access {e.filename}: {e.strerror}")
        return EXIT_USAGE
