from typing import Final, NamedTuple, Sequence

from .errors import (
    InvalidConfigKeyError,
    InvalidConfigSectionError,
    InvalidConfigValueError,
    InvalidConfigValueTypeError,
)


DEFAULT_ENUMERATION_LIMIT: Final = 10_000_000
DEFAULT_SEARCH_NODE_LIMIT: Final = 50_000_000
DEFAULT_OUTPUT_FORMAT: Final = "table"
DEFAULT_THREADS: Final = 1

OUTPUT_FORMATS: Final = ("table", "json", "csv")


def parse_config_key(key: str | Sequence[str]) -> list[str]:
    if isinstance(key, str):
        return key.split(".")
    return list(key)


SECTION_GUARDS: Final = "guards"
KEY_GUARDS_ENUMERATION_LIMIT: Final = "enumeration_limit"
KEY_GUARDS_SEARCH_NODE_LIMIT: Final = "search_node_limit"

SECTION_OUTPUT: Final = "output"
KEY_OUTPUT_FORMAT: Final = "format"

SECTION_SIMULATE: Final = "simulate"
KEY_SIMULATE_THREADS: Final = "threads"


class ConfigOption(NamedTuple):
    ty: type
    default: object
    doc: str


CONFIG_OPTIONS: Final[dict[tuple[str, str], ConfigOption]] = {
    (SECTION_GUARDS, KEY_GUARDS_ENUMERATION_LIMIT): ConfigOption(
        int,
        DEFAULT_ENUMERATION_LIMIT,
        "Largest word space, ball or encoder set that may be enumerated.",
    ),
    (SECTION_GUARDS, KEY_GUARDS_SEARCH_NODE_LIMIT): ConfigOption(
        int,
        DEFAULT_SEARCH_NODE_LIMIT,
        "Largest number of branch-and-bound nodes in an exact T search.",
    ),
    (SECTION_OUTPUT, KEY_OUTPUT_FORMAT): ConfigOption(
        str,
        DEFAULT_OUTPUT_FORMAT,
        "One of `table`, `json` and `csv`.",
    ),
    (SECTION_SIMULATE, KEY_SIMULATE_THREADS): ConfigOption(
        int,
        DEFAULT_THREADS,
        "Worker threads of the Monte-Carlo simulator. Never changes the report.",
    ),
}


def validate_section(section: str) -> None:
    if all(s != section for s, _ in CONFIG_OPTIONS):
        raise InvalidConfigSectionError(section)


def lookup_option(key: str | Sequence[str]) -> ConfigOption:
    parsed_key = parse_config_key(key)
    # no nested options
    if len(parsed_key) != 2:
        raise InvalidConfigKeyError(key)
    opt = CONFIG_OPTIONS.get((parsed_key[0], parsed_key[1]))
    if opt is None:
        raise InvalidConfigKeyError(key)
    return opt


def get_expected_type_for_config_key(key: str | Sequence[str]) -> type:
    return lookup_option(key).ty


def ensure_valid_config_kv(
    key: str | Sequence[str],
    check_val: bool = False,
    val: object | None = None,
) -> None:
    parsed_key = parse_config_key(key)
    expected_type = get_expected_type_for_config_key(parsed_key)
    # bool is an int subclass but never a valid value here
    if check_val and (not isinstance(val, expected_type) or isinstance(val, bool)):
        raise InvalidConfigValueTypeError(key, val, expected_type)

    if not check_val:
        return

    section, sel = parsed_key
    if section == SECTION_OUTPUT and sel == KEY_OUTPUT_FORMAT:
        if val not in OUTPUT_FORMATS:
            raise InvalidConfigValueError(key, val)
    elif expected_type is int:
        assert isinstance(val, int)
        if val < 1:
            raise InvalidConfigValueError(key, val)


def encode_value(v: object) -> str:
    """Encodes the given config value into a string representation suitable for
    display or storage into TOML config files."""

    if isinstance(v, bool):
        return "true" if v else "false"
    elif isinstance(v, int):
        return str(v)
    elif isinstance(v, str):
        return v
    else:
        raise NotImplementedError(f"invalid type for config value: {type(v)}")


def decode_value(
    key: str | Sequence[str] | type,
    val: str,
) -> object:
    """Decodes the given string representation of a config value into a Python
    value, directed by type information implied by the config key."""

    if isinstance(key, type):
        expected_type = key
    else:
        expected_type = get_expected_type_for_config_key(key)

    if expected_type is int:
        try:
            # allow digit grouping as in TOML: 10_000_000
            return int(val, 10)
        except ValueError:
            raise InvalidConfigValueError(key, val) from None
    elif expected_type is str:
        return val
    else:
        raise NotImplementedError(f"invalid type for config value: {expected_type}")
