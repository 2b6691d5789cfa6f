"""Wire-format and behavior-transform tests.

The SRH fixture bytes are written out by hand from the routing-header
field layout so the codec is checked against something other than
itself.
"""

import ipaddress
import struct

import pytest
from hypothesis import given, strategies as st

from srv6bench.catalog import BehaviorId, InnerKind, traffic_requirement
from srv6bench.errors import (
    CannotAdvanceError,
    MalformedPacketError,
    RequirementViolationError,
    TypeMismatchError,
    UnsupportedBehaviorError,
)
from srv6bench.packet import (
    BehaviorConfig,
    Ethernet,
    ETHERTYPE_IPV4,
    ETHERTYPE_IPV6,
    IPv4Header,
    IPv6Header,
    NEXT_HEADER_IPV6,
    NEXT_HEADER_NONE,
    NEXT_HEADER_ROUTING,
    PacketTemplate,
    Payload,
    SegmentRoutingHeader,
    Sid,
    apply_behavior,
    build_test_packet,
    decode,
    encode,
    hexdump,
    satisfies,
)
from conftest import SID1, SID2


def ipv4_checksum_oracle(header: bytes) -> int:
    """Independent ones-complement sum over 16-bit words."""
    words = struct.unpack("!10H", header)
    total = sum(words)
    total = (total & 0xFFFF) + (total >> 16)
    total = (total & 0xFFFF) + (total >> 16)
    return (~total) & 0xFFFF


class TestSid:
    def test_text_round_trip(self):
        s = Sid.from_str("fc00:0:0:1::1")
        assert str(s) == "fc00:0:0:1::1"
        assert len(s.value) == 16

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            Sid(b"\x00" * 15)


class TestSrhWireFormat:
    def test_hand_built_srh_bytes(self, end_template):
        raw = encode(end_template)
        assert len(raw) == 158
        srh = raw[54:94]
        # next header (inner IPv6), hdr ext len 2n, routing type 4,
        # segments left, last entry n-1, flags, 16-bit tag
        assert srh[:8] == bytes([41, 4, 4, 1, 1, 0, 0, 0])
        # segment list is reverse path order: final segment first
        assert srh[8:24] == SID2.value
        assert srh[24:40] == SID1.value
        # outer destination carries the active SID
        assert raw[38:54] == SID1.value

    def test_outer_headers(self, end_template):
        raw = encode(end_template)
        assert raw[12:14] == ETHERTYPE_IPV6.to_bytes(2, "big")
        assert raw[14] >> 4 == 6
        assert raw[20] == NEXT_HEADER_ROUTING
        # IPv6 payload length covers SRH + inner packet
        assert int.from_bytes(raw[18:20], "big") == 40 + 64

    @given(n=st.integers(min_value=1, max_value=8), sl=st.data())
    def test_srh_length_is_8_plus_16n(self, n, sl):
        segments = tuple(Sid(bytes([i] * 16)) for i in range(1, n + 1))
        srh = SegmentRoutingHeader(
            next_header=NEXT_HEADER_NONE,
            segments=segments,
            segments_left=sl.draw(st.integers(min_value=0, max_value=n - 1)),
        )
        t = PacketTemplate(
            (Ethernet(), IPv6Header(next_header=NEXT_HEADER_ROUTING), srh)
        )
        raw = encode(t)
        assert len(raw) == 14 + 40 + 8 + 16 * n
        assert srh.hdr_ext_len == 2 * n
        assert srh.last_entry == n - 1
        assert decode(raw) == t

    def test_segments_left_bounds(self):
        with pytest.raises(ValueError):
            SegmentRoutingHeader(
                next_header=59, segments=(SID1,), segments_left=1
            )


class TestCodecRoundTrip:
    def test_end_template(self, end_template):
        assert decode(encode(end_template)) == end_template

    def test_dt6_template(self, dt6_template):
        assert decode(encode(dt6_template)) == dt6_template

    @pytest.mark.parametrize(
        "behavior",
        [b for b in BehaviorId if b in {
            BehaviorId.H_INSERT, BehaviorId.H_ENCAPS, BehaviorId.H_ENCAPS_L2,
            BehaviorId.END, BehaviorId.END_T, BehaviorId.END_X,
            BehaviorId.END_DT4, BehaviorId.END_DT6, BehaviorId.END_DX2,
            BehaviorId.END_DX4, BehaviorId.END_DX6,
            BehaviorId.PLAIN_IPV4, BehaviorId.PLAIN_IPV6,
        }],
    )
    def test_every_measured_behavior_packet(self, behavior):
        req = traffic_requirement(behavior)
        t = build_test_packet(req, [SID1, SID2])
        assert decode(encode(t)) == t
        assert satisfies(t, req)

    def test_ipv4_checksum_matches_independent_oracle(self):
        req = traffic_requirement(BehaviorId.PLAIN_IPV4)
        raw = encode(build_test_packet(req, []))
        header = raw[14:34]
        stored = int.from_bytes(header[10:12], "big")
        zeroed = header[:10] + b"\x00\x00" + header[12:]
        assert stored == ipv4_checksum_oracle(zeroed)
        # a valid header sums to zero under the same oracle
        assert ipv4_checksum_oracle(header) == 0


class TestDecodeRejectsGarbage:
    def test_truncated_frame(self):
        with pytest.raises(MalformedPacketError):
            decode(b"\x00" * 10)

    def test_truncated_ipv6(self, end_template):
        raw = encode(end_template)
        with pytest.raises(MalformedPacketError):
            decode(raw[:30])

    def test_payload_length_mismatch(self, end_template):
        raw = bytearray(encode(end_template))
        raw[18] ^= 0x01
        with pytest.raises(MalformedPacketError):
            decode(bytes(raw))

    def test_bad_routing_type(self, end_template):
        raw = bytearray(encode(end_template))
        raw[56] = 3  # routing type field inside the SRH
        with pytest.raises(MalformedPacketError):
            decode(bytes(raw))

    def test_srh_last_entry_mismatch(self, end_template):
        raw = bytearray(encode(end_template))
        raw[58] = 5  # last entry field disagrees with hdr ext len
        with pytest.raises(MalformedPacketError):
            decode(bytes(raw))

    def test_corrupted_ipv4_checksum(self):
        req = traffic_requirement(BehaviorId.PLAIN_IPV4)
        raw = bytearray(encode(build_test_packet(req, [])))
        raw[24] ^= 0xFF
        with pytest.raises(MalformedPacketError):
            decode(bytes(raw))


class TestBuildTestPacket:
    def test_end_frame_size(self, end_template):
        assert end_template.frame_size == 158
        assert end_template.ip_packet_size == 144

    def test_headend_encaps_frame_size(self):
        req = traffic_requirement(BehaviorId.H_ENCAPS)
        t = build_test_packet(req, [])
        assert t.frame_size == 78  # Ethernet + bare 64B inner IPv6

    def test_headend_ipv4_ethertype(self):
        req = traffic_requirement(BehaviorId.PLAIN_IPV4)
        t = build_test_packet(req, [])
        assert t.layers[0].ethertype == ETHERTYPE_IPV4

    def test_too_few_sids_rejected(self):
        req = traffic_requirement(BehaviorId.END)
        with pytest.raises(RequirementViolationError):
            build_test_packet(req, [SID1])

    def test_forbidden_segments_left_rejected(self):
        req = traffic_requirement(BehaviorId.END)
        with pytest.raises(RequirementViolationError):
            build_test_packet(req, [SID1, SID2], segments_left=0)

    def test_decap_packet_sits_at_last_segment(self, dt6_template):
        srh = dt6_template.layers[2]
        assert srh.segments_left == 0

    def test_hexdump_shape(self, end_template):
        dump = hexdump(end_template)
        lines = dump.splitlines()
        assert len(lines) == 10  # 158 bytes, 16 per line
        assert lines[0].startswith("0000  ")


class TestEndpointTransforms:
    def test_end_advances_to_next_segment(self, end_template):
        out, action = apply_behavior(BehaviorId.END, end_template)
        srh = out.layers[2]
        assert srh.segments_left == 0
        assert out.layers[1].dst == SID2.value
        assert out.layers[1].hop_limit == end_template.layers[1].hop_limit - 1
        assert action.kind == "fib-lookup"
        # payload and segment list are untouched
        assert srh.segments == end_template.layers[2].segments
        assert out.layers[3:] == end_template.layers[3:]

    def test_end_at_last_segment_cannot_advance(self, dt6_template):
        with pytest.raises(CannotAdvanceError):
            apply_behavior(BehaviorId.END, dt6_template)

    def test_end_x_uses_adjacency(self, end_template):
        cfg = BehaviorConfig(adjacency="2001:db8::9")
        _, action = apply_behavior(BehaviorId.END_X, end_template, cfg)
        assert action.kind == "xconnect"
        assert action.target == "2001:db8::9"

    def test_dt6_strips_encapsulation(self, dt6_template):
        out, action = apply_behavior(BehaviorId.END_DT6, dt6_template)
        assert isinstance(out.layers[1], IPv6Header)
        assert out.layers[1] == dt6_template.layers[3]
        assert action.target == "100"

    def test_dt6_refuses_pending_segments(self, end_template):
        with pytest.raises(RequirementViolationError):
            apply_behavior(BehaviorId.END_DT6, end_template)

    def test_dt6_refuses_ipv4_inner(self):
        req = traffic_requirement(BehaviorId.END_DT4)
        t = build_test_packet(req, [SID1, SID2])
        with pytest.raises(TypeMismatchError):
            apply_behavior(BehaviorId.END_DT6, t)

    def test_dx2_exposes_the_inner_frame(self):
        req = traffic_requirement(BehaviorId.END_DX2)
        t = build_test_packet(req, [SID1, SID2])
        out, action = apply_behavior(BehaviorId.END_DX2, t)
        assert out.layers == t.layers[3:]
        assert action.kind == "xconnect"

    def test_dx4_rewrites_ethertype(self):
        req = traffic_requirement(BehaviorId.END_DX4)
        t = build_test_packet(req, [SID1, SID2])
        out, _ = apply_behavior(BehaviorId.END_DX4, t)
        assert out.layers[0].ethertype == ETHERTYPE_IPV4
        assert isinstance(out.layers[1], IPv4Header)


class TestHeadendTransforms:
    CFG2 = BehaviorConfig(segments=(SID1, SID2))
    CFG1 = BehaviorConfig(segments=(SID1,))

    def test_insert_keeps_original_destination_as_final_segment(self):
        req = traffic_requirement(BehaviorId.H_INSERT)
        t = build_test_packet(req, [])
        orig_dst = t.layers[1].dst
        out, _ = apply_behavior(BehaviorId.H_INSERT, t, self.CFG2)
        srh = out.layers[2]
        assert srh.segments == (Sid(orig_dst), SID2, SID1)
        assert srh.segments_left == 2
        assert out.layers[1].dst == SID1.value  # first SID of the path
        assert out.layers[1].next_header == NEXT_HEADER_ROUTING

    def test_single_segment_encaps_has_no_srh(self):
        req = traffic_requirement(BehaviorId.H_ENCAPS)
        t = build_test_packet(req, [])
        out, _ = apply_behavior(BehaviorId.H_ENCAPS, t, self.CFG1)
        assert isinstance(out.layers[1], IPv6Header)
        assert out.layers[1].next_header == NEXT_HEADER_IPV6
        assert not isinstance(out.layers[2], SegmentRoutingHeader)
        assert out.layers[1].dst == SID1.value
        # the original packet rides inside untouched
        assert out.layers[2:] == t.layers[1:]

    def test_multi_segment_encaps_builds_srh(self):
        req = traffic_requirement(BehaviorId.H_ENCAPS)
        t = build_test_packet(req, [])
        out, _ = apply_behavior(BehaviorId.H_ENCAPS, t, self.CFG2)
        srh = out.layers[2]
        assert srh.segments == (SID2, SID1)
        assert srh.segments_left == 1
        assert out.layers[1].dst == SID1.value

    def test_l2_encaps_wraps_the_whole_frame(self):
        req = traffic_requirement(BehaviorId.H_ENCAPS_L2)
        t = build_test_packet(req, [])
        out, _ = apply_behavior(BehaviorId.H_ENCAPS_L2, t, self.CFG1)
        assert out.layers[2:] == t.layers
        assert out.frame_size == t.frame_size + 14 + 40

    def test_headend_without_sids_rejected(self):
        req = traffic_requirement(BehaviorId.H_ENCAPS)
        t = build_test_packet(req, [])
        with pytest.raises(RequirementViolationError):
            apply_behavior(BehaviorId.H_ENCAPS, t, BehaviorConfig())


class TestPlainForwarding:
    def test_ipv6_decrements_hop_limit(self):
        req = traffic_requirement(BehaviorId.PLAIN_IPV6)
        t = build_test_packet(req, [])
        out, _ = apply_behavior(BehaviorId.PLAIN_IPV6, t)
        assert out.layers[1].hop_limit == t.layers[1].hop_limit - 1

    def test_ipv4_decrements_ttl(self):
        req = traffic_requirement(BehaviorId.PLAIN_IPV4)
        t = build_test_packet(req, [])
        out, _ = apply_behavior(BehaviorId.PLAIN_IPV4, t)
        assert out.layers[1].ttl == t.layers[1].ttl - 1

    def test_unimplemented_behavior_rejected(self, end_template):
        with pytest.raises(UnsupportedBehaviorError):
            apply_behavior(BehaviorId.END_AD, end_template)


def test_encaps_then_decap_restores_inner_bytes():
    """One-segment encapsulation then a decap gives back the original
    64-byte inner packet untouched."""
    req = traffic_requirement(BehaviorId.H_ENCAPS)
    t = build_test_packet(req, [])
    inner_before = encode(t)[14:]
    encapped, _ = apply_behavior(
        BehaviorId.H_ENCAPS, t, BehaviorConfig(segments=(SID1,))
    )
    decapped, _ = apply_behavior(BehaviorId.END_DT6, encapped)
    assert encode(decapped)[14:] == inner_before


def test_nesting_rules():
    with pytest.raises(ValueError):
        PacketTemplate((IPv6Header(next_header=59),))  # no Ethernet outermost
    with pytest.raises(ValueError):
        # SRH must follow an IPv6 header directly
        PacketTemplate(
            (
                Ethernet(),
                SegmentRoutingHeader(
                    next_header=59, segments=(SID1,), segments_left=0
                ),
            )
        )


@given(
    kind=st.sampled_from(list(InnerKind)),
    size=st.integers(min_value=64, max_value=512),
)
def test_arbitrary_inner_sizes_round_trip(kind, size):
    req = traffic_requirement(BehaviorId.END)
    from dataclasses import replace

    req = replace(req, inner_kind=kind, inner_packet_size=size)
    t = build_test_packet(req, [SID1, SID2])
    assert decode(encode(t)) == t
    assert t.frame_size == 14 + 40 + 40 + size
