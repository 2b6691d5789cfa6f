"""Byte-exact packet templates and SRv6 behavior transforms.

A PacketTemplate is an ordered stack of layers, outermost first:
Ethernet, IPv6, segment routing header, IPv4, inner Ethernet, payload.
encode/decode are exact inverses on well-formed templates.

Segment lists are stored in reverse path order: segments[0] is the final
segment and Segments Left indexes the currently active one. Advancing to
the next segment is decrement-then-index.
"""

from __future__ import annotations

import ipaddress
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Union

from .catalog import (
    BehaviorId,
    InnerKind,
    TrafficRequirement,
    lookup,
    traffic_requirement,
)
from .errors import (
    CannotAdvanceError,
    MalformedPacketError,
    RequirementViolationError,
    TypeMismatchError,
    UnsupportedBehaviorError,
)

ETHERTYPE_IPV4 = 0x0800
ETHERTYPE_IPV6 = 0x86DD

NEXT_HEADER_ROUTING = 43
NEXT_HEADER_IPV6 = 41
NEXT_HEADER_IPV4 = 4
NEXT_HEADER_ETHERNET = 143
NEXT_HEADER_NONE = 59

SRH_ROUTING_TYPE = 4

ETHERNET_LEN = 14
IPV6_HEADER_LEN = 40
IPV4_HEADER_LEN = 20
SRH_FIXED_LEN = 8
SID_LEN = 16

DEFAULT_HOP_LIMIT = 64

# Fixed address plan for generated test traffic.
TESTER_MAC = bytes.fromhex("020000000001")
SUT_MAC = bytes.fromhex("020000000002")
INNER_SRC6 = ipaddress.IPv6Address("fd00:12::1").packed
INNER_DST6 = ipaddress.IPv6Address("fd00:21::1").packed
INNER_SRC4 = ipaddress.IPv4Address("10.0.1.1").packed
INNER_DST4 = ipaddress.IPv4Address("10.0.2.1").packed
OUTER_SRC6 = ipaddress.IPv6Address("fc00:0:0:ff::1").packed

# Filler protocol number for generated payloads (host-internal, RFC 3692
# style experimental values are avoided so dissectors stay quiet).
PROTO_PAYLOAD = 61


@dataclass(frozen=True)
class Sid:
    """A 128-bit segment identifier, textual form is IPv6 notation."""

    value: bytes

    def __post_init__(self):
        if len(self.value) != SID_LEN:
            raise ValueError("SID must be exactly 16 bytes")

    @classmethod
    def from_str(cls, text: str) -> "Sid":
        return cls(ipaddress.IPv6Address(text).packed)

    def __str__(self) -> str:
        return str(ipaddress.IPv6Address(self.value))


@dataclass(frozen=True)
class Ethernet:
    dst: bytes = SUT_MAC
    src: bytes = TESTER_MAC
    ethertype: int = ETHERTYPE_IPV6

    def __post_init__(self):
        if len(self.dst) != 6 or len(self.src) != 6:
            raise ValueError("MAC addresses must be 6 bytes")


@dataclass(frozen=True)
class IPv6Header:
    next_header: int
    src: bytes = INNER_SRC6
    dst: bytes = INNER_DST6
    traffic_class: int = 0
    flow_label: int = 0
    hop_limit: int = DEFAULT_HOP_LIMIT

    def __post_init__(self):
        if len(self.src) != 16 or len(self.dst) != 16:
            raise ValueError("IPv6 addresses must be 16 bytes")


@dataclass(frozen=True)
class SegmentRoutingHeader:
    """IPv6 routing extension header (routing type 4) carrying the SID list.

    hdr_ext_len and last_entry are derived from the segment count on
    encode: 2*n and n-1 respectively, for an encoded length of 8 + 16*n.
    """

    next_header: int
    segments: tuple[Sid, ...]
    segments_left: int
    flags: int = 0
    tag: int = 0

    def __post_init__(self):
        if not self.segments:
            raise ValueError("SRH needs at least one segment")
        if not 0 <= self.segments_left <= self.last_entry:
            raise ValueError("segments_left out of range")

    @property
    def hdr_ext_len(self) -> int:
        return 2 * len(self.segments)

    @property
    def last_entry(self) -> int:
        return len(self.segments) - 1

    @property
    def active_sid(self) -> Sid:
        return self.segments[self.segments_left]


@dataclass(frozen=True)
class IPv4Header:
    protocol: int
    src: bytes = INNER_SRC4
    dst: bytes = INNER_DST4
    ttl: int = DEFAULT_HOP_LIMIT
    tos: int = 0
    identification: int = 0

    def __post_init__(self):
        if len(self.src) != 4 or len(self.dst) != 4:
            raise ValueError("IPv4 addresses must be 4 bytes")


@dataclass(frozen=True)
class Payload:
    data: bytes


Layer = Union[Ethernet, IPv6Header, SegmentRoutingHeader, IPv4Header, Payload]

_LAYER_LEN = {
    Ethernet: ETHERNET_LEN,
    IPv6Header: IPV6_HEADER_LEN,
    IPv4Header: IPV4_HEADER_LEN,
}


def _layer_len(layer: Layer) -> int:
    if isinstance(layer, SegmentRoutingHeader):
        return SRH_FIXED_LEN + SID_LEN * len(layer.segments)
    if isinstance(layer, Payload):
        return len(layer.data)
    return _LAYER_LEN[type(layer)]


@dataclass(frozen=True)
class PacketTemplate:
    """An immutable, fully specified test packet."""

    layers: tuple[Layer, ...]

    def __post_init__(self):
        _check_nesting(self.layers)

    @property
    def frame_size(self) -> int:
        return sum(_layer_len(layer) for layer in self.layers)

    @property
    def ip_packet_size(self) -> int:
        """Frame size minus the outer Ethernet header."""
        return self.frame_size - ETHERNET_LEN


def _check_nesting(layers: Sequence[Layer]) -> None:
    if not layers:
        raise ValueError("template needs at least one layer")
    if not isinstance(layers[0], Ethernet):
        raise ValueError("outermost layer must be Ethernet")
    for i, layer in enumerate(layers):
        if isinstance(layer, SegmentRoutingHeader):
            if i == 0 or not isinstance(layers[i - 1], IPv6Header):
                raise ValueError("SRH must directly follow an IPv6 header")
        if isinstance(layer, Payload) and i != len(layers) - 1:
            raise ValueError("payload must be the innermost layer")


# ---------------------------------------------------------------------------
# codec


def _ipv4_checksum(header: bytes) -> int:
    total = 0
    for i in range(0, len(header), 2):
        total += (header[i] << 8) | header[i + 1]
    while total >> 16:
        total = (total & 0xFFFF) + (total >> 16)
    return (~total) & 0xFFFF


def encode(template: PacketTemplate) -> bytes:
    """Serialize a template to wire bytes. Length and checksum fields are
    computed here, never stored on the template."""
    body = b""
    for layer in reversed(template.layers):
        if isinstance(layer, Payload):
            body = layer.data + body
        elif isinstance(layer, SegmentRoutingHeader):
            hdr = bytes(
                [
                    layer.next_header,
                    layer.hdr_ext_len,
                    SRH_ROUTING_TYPE,
                    layer.segments_left,
                    layer.last_entry,
                    layer.flags,
                ]
            ) + layer.tag.to_bytes(2, "big")
            hdr += b"".join(sid.value for sid in layer.segments)
            body = hdr + body
        elif isinstance(layer, IPv6Header):
            word0 = (6 << 28) | (layer.traffic_class << 20) | layer.flow_label
            hdr = (
                word0.to_bytes(4, "big")
                + len(body).to_bytes(2, "big")
                + bytes([layer.next_header, layer.hop_limit])
                + layer.src
                + layer.dst
            )
            body = hdr + body
        elif isinstance(layer, IPv4Header):
            total_length = IPV4_HEADER_LEN + len(body)
            hdr = bytearray(20)
            hdr[0] = (4 << 4) | 5
            hdr[1] = layer.tos
            hdr[2:4] = total_length.to_bytes(2, "big")
            hdr[4:6] = layer.identification.to_bytes(2, "big")
            hdr[6:8] = b"\x00\x00"
            hdr[8] = layer.ttl
            hdr[9] = layer.protocol
            hdr[12:16] = layer.src
            hdr[16:20] = layer.dst
            hdr[10:12] = _ipv4_checksum(bytes(hdr)).to_bytes(2, "big")
            body = bytes(hdr) + body
        elif isinstance(layer, Ethernet):
            body = layer.dst + layer.src + layer.ethertype.to_bytes(2, "big") + body
        else:
            raise TypeError(f"unknown layer type: {type(layer).__name__}")
    return body


def _decode_ipv6(data: bytes) -> list[Layer]:
    if len(data) < IPV6_HEADER_LEN:
        raise MalformedPacketError("truncated IPv6 header")
    word0 = int.from_bytes(data[0:4], "big")
    if word0 >> 28 != 6:
        raise MalformedPacketError("IPv6 version field is not 6")
    payload_length = int.from_bytes(data[4:6], "big")
    next_header = data[6]
    rest = data[IPV6_HEADER_LEN:]
    if payload_length != len(rest):
        raise MalformedPacketError("IPv6 payload length does not match frame")
    header = IPv6Header(
        next_header=next_header,
        src=data[8:24],
        dst=data[24:40],
        traffic_class=(word0 >> 20) & 0xFF,
        flow_label=word0 & 0xFFFFF,
        hop_limit=data[7],
    )
    return [header] + _decode_next(next_header, rest)


def _decode_srh(data: bytes) -> list[Layer]:
    if len(data) < SRH_FIXED_LEN:
        raise MalformedPacketError("truncated routing header")
    next_header, hdr_ext_len, routing_type, segments_left, last_entry, flags = data[:6]
    if routing_type != SRH_ROUTING_TYPE:
        raise MalformedPacketError(f"unsupported routing type {routing_type}")
    if hdr_ext_len % 2 != 0 or hdr_ext_len == 0:
        raise MalformedPacketError("inconsistent SRH extension length")
    n = hdr_ext_len // 2
    total = SRH_FIXED_LEN + SID_LEN * n
    if last_entry != n - 1:
        raise MalformedPacketError("SRH last entry disagrees with length")
    if segments_left > last_entry:
        raise MalformedPacketError("segments left exceeds last entry")
    if len(data) < total:
        raise MalformedPacketError("truncated SRH segment list")
    tag = int.from_bytes(data[6:8], "big")
    segments = tuple(
        Sid(data[SRH_FIXED_LEN + i * SID_LEN : SRH_FIXED_LEN + (i + 1) * SID_LEN])
        for i in range(n)
    )
    srh = SegmentRoutingHeader(
        next_header=next_header,
        segments=segments,
        segments_left=segments_left,
        flags=flags,
        tag=tag,
    )
    return [srh] + _decode_next(next_header, data[total:])


def _decode_ipv4(data: bytes) -> list[Layer]:
    if len(data) < IPV4_HEADER_LEN:
        raise MalformedPacketError("truncated IPv4 header")
    if data[0] != ((4 << 4) | 5):
        raise MalformedPacketError("unsupported IPv4 version/IHL")
    total_length = int.from_bytes(data[2:4], "big")
    if total_length != len(data):
        raise MalformedPacketError("IPv4 total length does not match frame")
    if _ipv4_checksum(data[:IPV4_HEADER_LEN]) != 0:
        raise MalformedPacketError("bad IPv4 header checksum")
    header = IPv4Header(
        protocol=data[9],
        src=data[12:16],
        dst=data[16:20],
        ttl=data[8],
        tos=data[1],
        identification=int.from_bytes(data[4:6], "big"),
    )
    payload = data[IPV4_HEADER_LEN:]
    return [header] + ([Payload(payload)] if payload else [])


def _decode_ethernet(data: bytes) -> list[Layer]:
    if len(data) < ETHERNET_LEN:
        raise MalformedPacketError("truncated Ethernet header")
    eth = Ethernet(
        dst=data[0:6],
        src=data[6:12],
        ethertype=int.from_bytes(data[12:14], "big"),
    )
    rest = data[ETHERNET_LEN:]
    if eth.ethertype == ETHERTYPE_IPV6:
        return [eth] + _decode_ipv6(rest)
    if eth.ethertype == ETHERTYPE_IPV4:
        return [eth] + _decode_ipv4(rest)
    return [eth] + ([Payload(rest)] if rest else [])


def _decode_next(next_header: int, data: bytes) -> list[Layer]:
    if next_header == NEXT_HEADER_ROUTING:
        return _decode_srh(data)
    if next_header == NEXT_HEADER_IPV6:
        return _decode_ipv6(data)
    if next_header == NEXT_HEADER_IPV4:
        return _decode_ipv4(data)
    if next_header == NEXT_HEADER_ETHERNET:
        return _decode_ethernet(data)
    return [Payload(data)] if data else []


def decode(data: bytes) -> PacketTemplate:
    """Parse wire bytes back into a template. Inverse of encode."""
    return PacketTemplate(tuple(_decode_ethernet(data)))


def hexdump(template: PacketTemplate) -> str:
    """Classic 16-bytes-per-line hex dump of the encoded template."""
    raw = encode(template)
    lines = []
    for off in range(0, len(raw), 16):
        chunk = raw[off : off + 16]
        hexpart = " ".join(f"{b:02x}" for b in chunk)
        lines.append(f"{off:04x}  {hexpart}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# test packet construction


def _inner_stack(kind: InnerKind, size: int) -> list[Layer]:
    if kind is InnerKind.IPV6:
        if size < IPV6_HEADER_LEN:
            raise RequirementViolationError("inner IPv6 packet smaller than header")
        pad = size - IPV6_HEADER_LEN
        stack: list[Layer] = [IPv6Header(next_header=NEXT_HEADER_NONE)]
    elif kind is InnerKind.IPV4:
        if size < IPV4_HEADER_LEN:
            raise RequirementViolationError("inner IPv4 packet smaller than header")
        pad = size - IPV4_HEADER_LEN
        stack = [IPv4Header(protocol=PROTO_PAYLOAD)]
    else:  # inner Ethernet frame wrapping a small IPv6 packet
        if size < ETHERNET_LEN + IPV6_HEADER_LEN:
            raise RequirementViolationError("inner frame too small for Ethernet+IPv6")
        pad = size - ETHERNET_LEN - IPV6_HEADER_LEN
        stack = [Ethernet(), IPv6Header(next_header=NEXT_HEADER_NONE)]
    if pad:
        stack.append(Payload(b"\x00" * pad))
    return stack


_INNER_NEXT_HEADER = {
    InnerKind.IPV6: NEXT_HEADER_IPV6,
    InnerKind.IPV4: NEXT_HEADER_IPV4,
    InnerKind.ETHERNET: NEXT_HEADER_ETHERNET,
}

_INNER_ETHERTYPE = {
    InnerKind.IPV6: ETHERTYPE_IPV6,
    InnerKind.IPV4: ETHERTYPE_IPV4,
    InnerKind.ETHERNET: ETHERTYPE_IPV6,
}


def build_test_packet(
    req: TrafficRequirement,
    sid_plan: Sequence[Sid] = (),
    segments_left: Optional[int] = None,
) -> PacketTemplate:
    """Build the wire packet a traffic requirement calls for.

    sid_plan is in path order (first SID is visited first). For endpoint
    behaviors the result is Ethernet + outer IPv6 + SRH + inner packet,
    with the IPv6 destination set to the active SID; headend behaviors
    get the bare inner packet behind the wire Ethernet header.
    """
    inner = _inner_stack(req.inner_kind, req.inner_packet_size)

    if not req.needs_srv6_encap:
        if req.inner_kind is InnerKind.ETHERNET:
            # the received frame itself is the test packet
            return PacketTemplate(tuple(inner))
        eth = Ethernet(ethertype=_INNER_ETHERTYPE[req.inner_kind])
        return PacketTemplate(tuple([eth] + inner))

    if len(sid_plan) < req.min_sids:
        raise RequirementViolationError(
            f"need at least {req.min_sids} SIDs, got {len(sid_plan)}"
        )
    segments = tuple(reversed(tuple(sid_plan)))
    if segments_left is None:
        segments_left = len(segments) - 1 if req.active_sid_must_not_be_last else 0
    if req.active_sid_must_not_be_last and segments_left == 0:
        raise RequirementViolationError(
            "active SID must not be the last SID for this behavior"
        )
    if not 0 <= segments_left < len(segments):
        raise RequirementViolationError("segments_left outside the segment list")

    srh = SegmentRoutingHeader(
        next_header=_INNER_NEXT_HEADER[req.inner_kind],
        segments=segments,
        segments_left=segments_left,
    )
    outer = IPv6Header(
        next_header=NEXT_HEADER_ROUTING,
        src=OUTER_SRC6,
        dst=srh.active_sid.value,
    )
    return PacketTemplate(tuple([Ethernet(), outer, srh] + inner))


# ---------------------------------------------------------------------------
# behavior transforms


@dataclass(frozen=True)
class BehaviorConfig:
    """Per-behavior parameters: SID list for headend behaviors, table or
    adjacency/interface bindings for endpoint ones."""

    segments: tuple[Sid, ...] = ()
    table: str = "100"
    adjacency: str = "2001:db8:0:2::2"
    interface: str = "eth1"
    tunnel_src: bytes = OUTER_SRC6


DEFAULT_BEHAVIOR_CONFIG = BehaviorConfig()

FIB_LOOKUP = "fib-lookup"
XCONNECT = "xconnect"


@dataclass(frozen=True)
class ForwardAction:
    kind: str
    target: str


def _split_outer(template: PacketTemplate):
    """Ethernet + outer IPv6 + SRH + inner layers, or raise."""
    layers = template.layers
    if (
        len(layers) < 4
        or not isinstance(layers[0], Ethernet)
        or not isinstance(layers[1], IPv6Header)
        or not isinstance(layers[2], SegmentRoutingHeader)
    ):
        raise RequirementViolationError(
            "behavior needs an SRv6-encapsulated packet (IPv6 + SRH)"
        )
    return layers[0], layers[1], layers[2], layers[3:]


def _advance(template: PacketTemplate) -> PacketTemplate:
    """Decrement Segments Left, update the destination, decrement hop limit."""
    eth, outer, srh, inner = _split_outer(template)
    if srh.segments_left == 0:
        raise CannotAdvanceError("segments left is already 0")
    new_srh = replace(srh, segments_left=srh.segments_left - 1)
    new_outer = replace(
        outer, dst=new_srh.active_sid.value, hop_limit=max(outer.hop_limit - 1, 0)
    )
    return PacketTemplate((eth, new_outer, new_srh) + inner)


def _decap(template: PacketTemplate, kind: InnerKind) -> PacketTemplate:
    layers = template.layers
    if (
        len(layers) < 3
        or not isinstance(layers[0], Ethernet)
        or not isinstance(layers[1], IPv6Header)
    ):
        raise RequirementViolationError(
            "decap needs an outer IPv6 encapsulation"
        )
    eth, outer = layers[0], layers[1]
    expected = _INNER_NEXT_HEADER[kind]
    if isinstance(layers[2], SegmentRoutingHeader):
        srh = layers[2]
        if srh.segments_left != 0:
            raise RequirementViolationError(
                "decap requires the active SID to be the last SID"
            )
        last_nh, inner = srh.next_header, layers[3:]
    else:
        # single-segment encapsulation carries no SRH
        last_nh, inner = outer.next_header, layers[2:]
    if last_nh != expected:
        raise TypeMismatchError(
            f"inner packet is not {kind.value} (next header {last_nh})"
        )
    if kind is InnerKind.ETHERNET:
        # the exposed L2 frame becomes the outgoing frame; inner bytes
        # stay untouched
        return PacketTemplate(inner)
    new_eth = replace(eth, ethertype=_INNER_ETHERTYPE[kind])
    return PacketTemplate((new_eth,) + inner)


def _encap(
    template: PacketTemplate, cfg: BehaviorConfig, l2: bool
) -> PacketTemplate:
    if not cfg.segments:
        raise RequirementViolationError("headend behavior needs a SID list")
    layers = template.layers
    if l2:
        inner: tuple[Layer, ...] = layers  # the whole received frame
        inner_nh = NEXT_HEADER_ETHERNET
        eth = Ethernet()
    else:
        if len(layers) < 2 or not isinstance(layers[1], (IPv6Header, IPv4Header)):
            raise RequirementViolationError("encap needs an inner IP packet")
        inner = layers[1:]
        inner_nh = (
            NEXT_HEADER_IPV6
            if isinstance(layers[1], IPv6Header)
            else NEXT_HEADER_IPV4
        )
        eth = replace(layers[0], ethertype=ETHERTYPE_IPV6)
    segments = tuple(reversed(cfg.segments))
    if len(segments) == 1:
        # single-segment policy: the segment rides in the destination
        # address, no SRH is added
        outer = IPv6Header(
            next_header=inner_nh, src=cfg.tunnel_src, dst=segments[0].value
        )
        return PacketTemplate((eth, outer) + inner)
    srh = SegmentRoutingHeader(
        next_header=inner_nh, segments=segments, segments_left=len(segments) - 1
    )
    outer = IPv6Header(
        next_header=NEXT_HEADER_ROUTING,
        src=cfg.tunnel_src,
        dst=srh.active_sid.value,
    )
    return PacketTemplate((eth, outer, srh) + inner)


def _insert(template: PacketTemplate, cfg: BehaviorConfig) -> PacketTemplate:
    if not cfg.segments:
        raise RequirementViolationError("headend behavior needs a SID list")
    layers = template.layers
    if len(layers) < 2 or not isinstance(layers[1], IPv6Header):
        raise RequirementViolationError("SRH insertion needs an IPv6 packet")
    eth, ipv6, rest = layers[0], layers[1], layers[2:]
    # original destination joins the list as the final segment
    segments = (Sid(ipv6.dst),) + tuple(reversed(cfg.segments))
    srh = SegmentRoutingHeader(
        next_header=ipv6.next_header,
        segments=segments,
        segments_left=len(segments) - 1,
    )
    new_ipv6 = replace(
        ipv6, next_header=NEXT_HEADER_ROUTING, dst=srh.active_sid.value
    )
    return PacketTemplate((eth, new_ipv6, srh) + rest)


def _plain_forward(template: PacketTemplate, kind: InnerKind) -> PacketTemplate:
    layers = template.layers
    if kind is InnerKind.IPV6:
        if len(layers) < 2 or not isinstance(layers[1], IPv6Header):
            raise TypeMismatchError("expected an IPv6 packet")
        hdr = replace(layers[1], hop_limit=max(layers[1].hop_limit - 1, 0))
    else:
        if len(layers) < 2 or not isinstance(layers[1], IPv4Header):
            raise TypeMismatchError("expected an IPv4 packet")
        hdr = replace(layers[1], ttl=max(layers[1].ttl - 1, 0))
    return PacketTemplate((layers[0], hdr) + layers[2:])


def apply_behavior(
    behavior: BehaviorId,
    template: PacketTemplate,
    cfg: Optional[BehaviorConfig] = None,
) -> tuple[PacketTemplate, ForwardAction]:
    """Apply one forwarding behavior to a packet.

    Returns the transformed packet and the forwarding decision that a
    real dataplane would take afterwards.
    """
    spec = lookup(behavior)
    if not spec.semantics_implemented:
        raise UnsupportedBehaviorError(f"{spec.id} semantics are not implemented")
    cfg = cfg or DEFAULT_BEHAVIOR_CONFIG
    B = BehaviorId

    if behavior is B.END:
        return _advance(template), ForwardAction(FIB_LOOKUP, "main")
    if behavior is B.END_T:
        return _advance(template), ForwardAction(FIB_LOOKUP, cfg.table)
    if behavior is B.END_X:
        return _advance(template), ForwardAction(XCONNECT, cfg.adjacency)
    if behavior is B.END_DT6:
        return _decap(template, InnerKind.IPV6), ForwardAction(FIB_LOOKUP, cfg.table)
    if behavior is B.END_DT4:
        return _decap(template, InnerKind.IPV4), ForwardAction(FIB_LOOKUP, cfg.table)
    if behavior is B.END_DX6:
        return _decap(template, InnerKind.IPV6), ForwardAction(XCONNECT, cfg.interface)
    if behavior is B.END_DX4:
        return _decap(template, InnerKind.IPV4), ForwardAction(XCONNECT, cfg.interface)
    if behavior is B.END_DX2:
        return _decap(template, InnerKind.ETHERNET), ForwardAction(
            XCONNECT, cfg.interface
        )
    if behavior is B.H_INSERT:
        return _insert(template, cfg), ForwardAction(FIB_LOOKUP, "main")
    if behavior is B.H_ENCAPS:
        return _encap(template, cfg, l2=False), ForwardAction(FIB_LOOKUP, "main")
    if behavior is B.H_ENCAPS_L2:
        return _encap(template, cfg, l2=True), ForwardAction(FIB_LOOKUP, "main")
    if behavior is B.PLAIN_IPV6:
        return _plain_forward(template, InnerKind.IPV6), ForwardAction(
            FIB_LOOKUP, "main"
        )
    if behavior is B.PLAIN_IPV4:
        return _plain_forward(template, InnerKind.IPV4), ForwardAction(
            FIB_LOOKUP, "main"
        )
    raise UnsupportedBehaviorError(f"{spec.id} semantics are not implemented")


def satisfies(template: PacketTemplate, req: TrafficRequirement) -> bool:
    """Check a packet against a traffic requirement (structure only)."""
    layers = template.layers
    if req.needs_srv6_encap:
        try:
            _, _, srh, inner = _split_outer(template)
        except RequirementViolationError:
            return False
        if len(srh.segments) < req.min_sids:
            return False
        if req.active_sid_must_not_be_last and srh.segments_left == 0:
            return False
        if srh.next_header != _INNER_NEXT_HEADER[req.inner_kind]:
            return False
        return True
    if req.inner_kind is InnerKind.IPV6:
        return len(layers) >= 2 and isinstance(layers[1], IPv6Header)
    if req.inner_kind is InnerKind.IPV4:
        return len(layers) >= 2 and isinstance(layers[1], IPv4Header)
    return isinstance(layers[0], Ethernet)
