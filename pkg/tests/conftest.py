import pytest

from srv6bench.catalog import BehaviorId, traffic_requirement
from srv6bench.packet import Sid, build_test_packet

SID1 = Sid.from_str("fc00:0:0:1::1")
SID2 = Sid.from_str("fc00:0:0:2::1")

# 10GbE line packet rate for a 64-byte IP packet (78-byte frame)
LPR_64 = 10e9 / (8.0 * (78 + 24))


@pytest.fixture
def end_template():
    """Canonical End test packet: outer IPv6 + 2-SID SRH + 64B inner IPv6."""
    req = traffic_requirement(BehaviorId.END)
    return build_test_packet(req, [SID1, SID2])


@pytest.fixture
def dt6_template():
    """End.DT6 test packet: SRH present, Segments Left already 0."""
    req = traffic_requirement(BehaviorId.END_DT6)
    return build_test_packet(req, [SID1, SID2])
