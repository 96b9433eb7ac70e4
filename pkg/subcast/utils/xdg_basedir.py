# Only the config-lookup part of the XDG Base Directory Specification is
# needed: subcast keeps no cache, data or state.

import os
import pathlib
from typing import Iterable


class XDGBaseDir:
    def __init__(self, app_name: str) -> None:
        self.app_name = app_name

    @property
    def config_home(self) -> pathlib.Path:
        v = os.environ.get("XDG_CONFIG_HOME", "")
        return pathlib.Path(v) if v else pathlib.Path.home() / ".config"

    @property
    def config_dirs(self) -> Iterable[pathlib.Path]:
        # from highest precedence to lowest
        v = os.environ.get("XDG_CONFIG_DIRS", "") or "/etc/xdg"
        for p in v.split(":"):
            if p:
                yield pathlib.Path(p)

    @property
    def app_config(self) -> pathlib.Path:
        return self.config_home / self.app_name

    @property
    def app_config_dirs(self) -> Iterable[pathlib.Path]:
        # from highest precedence to lowest
        yield self.app_config
        for p in self.config_dirs:
            yield p / self.app_name
