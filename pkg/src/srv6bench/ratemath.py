"""Rate arithmetic: line packet rate, delivery ratio and summary statistics.

All rates are carried as real numbers in packets per second; kpps is a
presentation concern only.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidFrameError, StatsError, UndefinedRatioError

ETHERNET_HEADER_LEN = 14
# 4 bytes CRC + 8 bytes preamble/SFD + 12 bytes inter-frame gap
ETHERNET_OVERHEAD = 24
MIN_FRAME_SIZE = 64

# Half-width factor of the normal 95% confidence interval. The Student-t
# factor is deliberately not used; see SummaryStats docstring.
Z_95 = 1.96


@dataclass(frozen=True)
class LinkSpec:
    """A point-to-point Ethernet link.

    line_bit_rate_bps is the raw line rate (e.g. 10e9 for 10GbE);
    ethernet_overhead covers CRC, preamble/SFD and the inter-frame gap.
    """

    line_bit_rate_bps: float
    ethernet_header_len: int = ETHERNET_HEADER_LEN
    ethernet_overhead: int = ETHERNET_OVERHEAD

    def __post_init__(self):
        if self.line_bit_rate_bps <= 0:
            raise ValueError("line_bit_rate_bps must be positive")
        if self.ethernet_header_len < 0 or self.ethernet_overhead < 0:
            raise ValueError("byte fields must be non-negative")


@dataclass(frozen=True)
class TrialSample:
    """One fixed-rate, fixed-duration traffic offering.

    tx_packets were offered to the forwarder, rx_packets came back.
    """

    tx_packets: int
    rx_packets: int
    duration_s: float

    def __post_init__(self):
        if self.duration_s <= 0:
            raise ValueError("duration must be positive")
        if self.rx_packets > self.tx_packets:
            raise ValueError("rx_packets cannot exceed tx_packets")
        if self.tx_packets < 0 or self.rx_packets < 0:
            raise ValueError("packet counts must be non-negative")

    @property
    def tx_rate_pps(self) -> float:
        return self.tx_packets / self.duration_s

    @property
    def throughput_pps(self) -> float:
        return self.rx_packets / self.duration_s


@dataclass(frozen=True)
class SummaryStats:
    """Mean with relative dispersion figures.

    cv_percent is 100*s/mean with the n-1 sample standard deviation;
    ci95_percent is the half-width of the normal (z=1.96) 95% interval,
    relative to the mean. Both are 0 by convention for n = 1.
    """

    mean: float
    cv_percent: float
    ci95_percent: float
    n: int


def line_packet_rate(link: LinkSpec, frame_size: int) -> float:
    """Maximum packets/second the link admits at a given Ethernet frame size.

    frame_size includes the 14-byte Ethernet header but not CRC, preamble
    or inter-frame gap (those are the link's overhead bytes).
    """
    if frame_size < MIN_FRAME_SIZE:
        raise InvalidFrameError(
            f"frame_size {frame_size} below Ethernet minimum {MIN_FRAME_SIZE}"
        )
    return link.line_bit_rate_bps / (8.0 * (frame_size + link.ethernet_overhead))


def delivery_ratio(sample: TrialSample) -> float:
    """Fraction of offered packets that the forwarder delivered back."""
    if sample.tx_packets == 0:
        raise UndefinedRatioError("delivery ratio undefined for zero offered packets")
    return sample.rx_packets / sample.tx_packets


def summarize(samples: Sequence[float]) -> SummaryStats:
    """Mean/CV/CI95 over a set of rate samples (packets/second)."""
    if not samples:
        raise StatsError("cannot summarize an empty sample list")
    n = len(samples)
    mean = statistics.fmean(samples)
    if n == 1:
        return SummaryStats(mean=mean, cv_percent=0.0, ci95_percent=0.0, n=1)
    s = statistics.stdev(samples)
    if mean == 0.0:
        if s == 0.0:
            return SummaryStats(mean=0.0, cv_percent=0.0, ci95_percent=0.0, n=n)
        raise StatsError("CV undefined: zero mean with nonzero deviation")
    cv = 100.0 * s / mean
    ci95 = 100.0 * (Z_95 * s / math.sqrt(n)) / mean
    return SummaryStats(mean=mean, cv_percent=abs(cv), ci95_percent=abs(ci95), n=n)
