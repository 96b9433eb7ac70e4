from contextlib import AbstractContextManager
import enum
import json
import sys
from types import TracebackType
from typing import Any, BinaryIO, Mapping, TypedDict, TYPE_CHECKING

if TYPE_CHECKING:
    from typing_extensions import Self

if sys.version_info >= (3, 11):

    class PorcelainEntityType(enum.StrEnum):
        LogV1 = "log-v1"
        VolumeV1 = "volume-v1"
        DistanceV1 = "distance-v1"
        SubspaceListV1 = "subspacelist-v1"
        SeparationV1 = "separation-v1"
        EncoderV1 = "encoder-v1"
        BoundReportV1 = "boundreport-v1"
        TValueV1 = "tvalue-v1"
        TheoremSweepV1 = "theoremsweep-v1"
        SimReportV1 = "simreport-v1"

else:

    class PorcelainEntityType(str, enum.Enum):
        LogV1 = "log-v1"
        VolumeV1 = "volume-v1"
        DistanceV1 = "distance-v1"
        SubspaceListV1 = "subspacelist-v1"
        SeparationV1 = "separation-v1"
        EncoderV1 = "encoder-v1"
        BoundReportV1 = "boundreport-v1"
        TValueV1 = "tvalue-v1"
        TheoremSweepV1 = "theoremsweep-v1"
        SimReportV1 = "simreport-v1"


class PorcelainEntity(TypedDict):
    ty: PorcelainEntityType


def dumps_canonical(obj: Mapping[str, Any]) -> str:
    """Serializes a document deterministically: sorted keys, no insignificant
    whitespace. Repeated runs with the same inputs are byte-identical."""

    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"), sort_keys=True)


class PorcelainOutput(AbstractContextManager["PorcelainOutput"]):
    def __init__(self, out: BinaryIO | None = None) -> None:
        self.out = sys.stdout.buffer if out is None else out

    def __enter__(self) -> "Self":
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_value: BaseException | None,
        traceback: TracebackType | None,
    ) -> bool | None:
        self.out.flush()
        return None

    def emit(self, obj: Mapping[str, Any]) -> None:
        s = dumps_canonical(obj)
        self.out.write(s.encode("utf-8"))
        self.out.write(b"\n")
