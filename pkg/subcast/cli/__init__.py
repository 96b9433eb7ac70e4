from typing import Final


SUBCAST_ENTRYPOINT_NAME: Final = "subcast"

# process exit statuses
EXIT_OK: Final = 0
EXIT_USAGE: Final = 1
EXIT_GUARD: Final = 2
EXIT_THEOREM_VIOLATION: Final = 3
