import os
import pathlib
import sys
from typing import Any, Final, Iterable, Sequence, TypedDict, TYPE_CHECKING

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

if TYPE_CHECKING:
    from typing_extensions import NotRequired, Self

from .. import log
from ..utils.xdg_basedir import XDGBaseDir
from . import schema


DEFAULT_APP_NAME: Final = "subcast"

ENV_ENUMERATION_LIMIT_KEY: Final = "SUBCAST_ENUMERATION_LIMIT"


class GlobalConfigGuardsType(TypedDict):
    enumeration_limit: "NotRequired[int]"
    search_node_limit: "NotRequired[int]"


class GlobalConfigOutputType(TypedDict):
    format: "NotRequired[str]"


class GlobalConfigSimulateType(TypedDict):
    threads: "NotRequired[int]"


class GlobalConfigRootType(TypedDict):
    guards: "NotRequired[GlobalConfigGuardsType]"
    output: "NotRequired[GlobalConfigOutputType]"
    simulate: "NotRequired[GlobalConfigSimulateType]"


class GlobalConfig:
    def __init__(self) -> None:
        # all defaults
        self.enumeration_limit: int = schema.DEFAULT_ENUMERATION_LIMIT
        self.search_node_limit: int = schema.DEFAULT_SEARCH_NODE_LIMIT
        self.output_format: str = schema.DEFAULT_OUTPUT_FORMAT
        self.threads: int = schema.DEFAULT_THREADS

        self._dirs = XDGBaseDir(DEFAULT_APP_NAME)

    def apply_config(self, config_data: GlobalConfigRootType) -> None:
        if guards_cfg := config_data.get(schema.SECTION_GUARDS):
            self.enumeration_limit = self._checked_int(
                schema.SECTION_GUARDS,
                schema.KEY_GUARDS_ENUMERATION_LIMIT,
                guards_cfg.get(schema.KEY_GUARDS_ENUMERATION_LIMIT),
                self.enumeration_limit,
            )
            self.search_node_limit = self._checked_int(
                schema.SECTION_GUARDS,
                schema.KEY_GUARDS_SEARCH_NODE_LIMIT,
                guards_cfg.get(schema.KEY_GUARDS_SEARCH_NODE_LIMIT),
                self.search_node_limit,
            )

        if output_cfg := config_data.get(schema.SECTION_OUTPUT):
            fmt = output_cfg.get(schema.KEY_OUTPUT_FORMAT)
            if fmt is not None:
                if fmt in schema.OUTPUT_FORMATS:
                    self.output_format = fmt
                else:
                    log.W(f"unknown output format '{fmt}' in config; ignoring")

        if sim_cfg := config_data.get(schema.SECTION_SIMULATE):
            self.threads = self._checked_int(
                schema.SECTION_SIMULATE,
                schema.KEY_SIMULATE_THREADS,
                sim_cfg.get(schema.KEY_SIMULATE_THREADS),
                self.threads,
            )

    @staticmethod
    def _checked_int(section: str, key: str, val: object, fallback: int) -> int:
        if val is None:
            return fallback
        if isinstance(val, bool) or not isinstance(val, int) or val < 1:
            log.W(f"config value {section}.{key} must be a positive integer; ignoring")
            return fallback
        return int(val)

    _ATTRS: Final[dict[tuple[str, str], str]] = {
        (schema.SECTION_GUARDS, schema.KEY_GUARDS_ENUMERATION_LIMIT): "enumeration_limit",
        (schema.SECTION_GUARDS, schema.KEY_GUARDS_SEARCH_NODE_LIMIT): "search_node_limit",
        (schema.SECTION_OUTPUT, schema.KEY_OUTPUT_FORMAT): "output_format",
        (schema.SECTION_SIMULATE, schema.KEY_SIMULATE_THREADS): "threads",
    }

    def get_by_key(self, key: str | Sequence[str]) -> object | None:
        parsed_key = schema.parse_config_key(key)
        if len(parsed_key) != 2:
            return None
        attr = self._ATTRS.get((parsed_key[0], parsed_key[1]))
        return None if attr is None else getattr(self, attr)

    def iter_xdg_configs(self) -> Iterable[os.PathLike[Any]]:
        """
        Yields possible config files in all XDG config paths, sorted by precedence
        from lowest to highest (so that each file may be simply applied consecutively).
        """

        for config_dir in reversed(list(self._dirs.app_config_dirs)):
            yield config_dir / "config.toml"

    @property
    def local_user_config_file(self) -> pathlib.Path:
        return self._dirs.app_config / "config.toml"

    def try_apply_config_file(self, path: os.PathLike[Any]) -> None:
        try:
            with open(path, "rb") as fp:
                data: Any = tomllib.load(fp)  # in order to cast to our stricter type
        except FileNotFoundError:
            return
        except tomllib.TOMLDecodeError as e:
            log.W(f"ignoring malformed config file {path}: {e}")
            return

        log.D(f"applying config: {data}")
        self.apply_config(data)

    def apply_env(self, env: "os._Environ[str] | dict[str, str]") -> None:
        if v := env.get(ENV_ENUMERATION_LIMIT_KEY):
            try:
                limit = int(v, 10)
            except ValueError:
                limit = 0
            if limit < 1:
                log.W(f"ignoring invalid {ENV_ENUMERATION_LIMIT_KEY}={v!r}")
            else:
                self.enumeration_limit = limit

    @classmethod
    def load_from_config(cls) -> "Self":
        obj = cls()

        for config_path in obj.iter_xdg_configs():
            log.D(f"trying config file from XDG path: {config_path}")
            obj.try_apply_config_file(config_path)

        # let environment variables take precedence
        obj.apply_env(os.environ)

        return obj
