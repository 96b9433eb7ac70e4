#!/usr/bin/env python3

import sys

import subcast
from subcast import log


def entrypoint() -> None:
    subcast.init_debug_status()

    if not sys.argv:
        log.F("no argv?")
        sys.exit(1)

    from subcast.cli.main import main

    sys.exit(main(sys.argv))


if __name__ == "__main__":
    entrypoint()
