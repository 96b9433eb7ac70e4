from contextlib import AbstractContextManager
import pathlib
from typing import Sequence, TYPE_CHECKING, cast

if TYPE_CHECKING:
    from types import TracebackType
    from typing_extensions import Self

import tomlkit
from tomlkit.items import Table

from .errors import MalformedConfigFileError
from .schema import ensure_valid_config_kv, lookup_option, parse_config_key, validate_section

if TYPE_CHECKING:
    from . import GlobalConfig


class ConfigEditor(AbstractContextManager["ConfigEditor"]):
    """Edits a subcast TOML config file in place, preserving comments and layout.

    Edits go to a working copy. ``stage()`` accepts the edits made so far, and
    the accepted document is written out when the context exits cleanly.
    Options newly added to the file carry their description as a trailing
    comment."""

    def __init__(self, path: pathlib.Path) -> None:
        self._path = path
        self._dirty = False
        try:
            with open(path, encoding="utf-8") as fp:
                self._accepted = tomlkit.load(fp)
        except FileNotFoundError:
            self._accepted = tomlkit.document()
        except tomlkit.exceptions.ParseError as e:
            raise MalformedConfigFileError(path) from e

        self._work = self._fork()

    @classmethod
    def work_on_user_local_config(cls, gc: "GlobalConfig") -> "Self":
        return cls(gc.local_user_config_file)

    def __enter__(self) -> "Self":
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_value: BaseException | None,
        traceback: "TracebackType | None",
    ) -> bool | None:
        if exc_type is None and self._dirty:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            self._path.write_text(tomlkit.dumps(self._accepted), encoding="utf-8")
        return None

    def _fork(self) -> tomlkit.TOMLDocument:
        return cast(tomlkit.TOMLDocument, self._accepted.copy())

    def stage(self) -> None:
        self._accepted = self._work
        self._dirty = True
        self._work = self._fork()

    def _table(self, section: str, create: bool) -> Table | None:
        tbl = self._work.get(section)
        if tbl is None and create:
            tbl = tomlkit.table()
            self._work.append(section, tbl)
        if tbl is not None and not isinstance(tbl, Table):
            raise MalformedConfigFileError(self._path)
        return tbl

    def set_value(self, key: str | Sequence[str], val: object | None) -> None:
        ensure_valid_config_kv(key, check_val=True, val=val)
        section, leaf = parse_config_key(key)

        tbl = self._table(section, create=True)
        assert tbl is not None
        if leaf in tbl:
            # keep whatever comment the user wrote
            tbl[leaf] = val
            return
        item = tomlkit.item(val)
        item.comment(lookup_option(key).doc)
        tbl.add(leaf, item)

    def unset_value(self, key: str | Sequence[str]) -> None:
        ensure_valid_config_kv(key, check_val=False)
        section, leaf = parse_config_key(key)

        tbl = self._table(section, create=False)
        if tbl is not None and leaf in tbl:
            del tbl[leaf]

    def remove_section(self, section: str) -> None:
        validate_section(section)
        if section in self._work:
            del self._work[section]
