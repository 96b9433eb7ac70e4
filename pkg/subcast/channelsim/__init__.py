from .channel import (
    ChannelModel,
    RngStream,
    adversarial_channel,
    erasure_channel,
    matrix_channel,
    transmit,
)
from .simulate import SimReport, UserStats, ViolationRecord, simulate

__all__ = [
    "ChannelModel",
    "RngStream",
    "SimReport",
    "UserStats",
    "ViolationRecord",
    "adversarial_channel",
    "erasure_channel",
    "matrix_channel",
    "simulate",
    "transmit",
]
