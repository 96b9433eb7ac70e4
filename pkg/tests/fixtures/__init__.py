from contextlib import AbstractContextManager
from importlib import resources
import pathlib
import sys

import pytest


class SubcastFileFixtureFactory:
    def __init__(self, module: resources.Package | None = None) -> None:
        if sys.version_info < (3, 12):
            assert module is not None
        self.module = module

    def path(self, *frags: str) -> AbstractContextManager[pathlib.Path]:
        if sys.version_info < (3, 12):
            assert self.module is not None
        return resources.as_file(resources.files(self.module).joinpath(*frags))

    def encoder(self, name: str) -> AbstractContextManager[pathlib.Path]:
        return self.path("encoders", f"{name}.json")

    def encoder_text(self, name: str) -> str:
        with self.encoder(name) as p:
            return p.read_text(encoding="utf-8")


@pytest.fixture
def subcast_file() -> SubcastFileFixtureFactory:
    return SubcastFileFixtureFactory(None if sys.version_info >= (3, 12) else __name__)
