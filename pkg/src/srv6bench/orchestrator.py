"""Campaign automation: configuration parsing, behavior-to-recipe
resolution, driver/executor wiring and result assembly.

Two YAML documents drive a campaign. The experiment file selects the
behaviors, the search algorithm and its parameters; the testbed file
describes the forwarder (a simulated model, or a remote Linux/VPP box
reached over SSH). Forwarder configuration commands live in recipe
templates as data, rendered against a fixed address plan.
"""

from __future__ import annotations

import datetime
import io
import csv as csv_mod
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Protocol, Sequence

import yaml

from . import __version__
from .catalog import BehaviorId, InnerKind, lookup, traffic_requirement
from .errors import (
    ConfigError,
    Srv6BenchError,
    UnsupportedBehaviorError,
)
from .finder import (
    FinderResult,
    FinderTrace,
    RateInterval,
    SearchConfig,
    TrialPolicy,
    find_pdr,
    find_pdr_legacy,
    validate_pdr,
)
from .packet import BehaviorConfig, PacketTemplate, Sid, build_test_packet
from .ratemath import LinkSpec, SummaryStats, line_packet_rate
from .simulator import ForwarderModel, SimDriver, TrexStatelessDriver

# ---------------------------------------------------------------------------
# address plan: fixed, documented pool used to render recipe placeholders

ADDRESS_PLAN = {
    "sid1": "fc00:0:0:1::1",  # SID of the behavior under test
    "sid2": "fc00:0:0:2::1",  # next SID after the active one
    "iface_in": "eth0",
    "iface_out": "eth1",
    "nexthop6": "2001:db8:0:2::2",
    "nexthop4": "10.0.2.2",
    "table": "100",
    "inner_dst6": "fd00:21::1",
    "inner_dst4": "10.0.2.1",
    "inner_prefix6": "fd00:21::/64",
    "inner_prefix4": "10.0.2.0/24",
}


@dataclass(frozen=True)
class ConfigRecipe:
    """Rendered configuration procedure for one behavior on one forwarder."""

    behavior: BehaviorId
    forwarder_kind: str
    steps: tuple[str, ...]
    teardown: tuple[str, ...]


def _linux_routes(add: Sequence[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    steps = tuple(f"ip {cmd.format(verb='add', **ADDRESS_PLAN)}" for cmd in add)
    teardown = tuple(
        f"ip {cmd.format(verb='del', **ADDRESS_PLAN)}" for cmd in reversed(add)
    )
    return steps, teardown


# Command text per (recipe_key, forwarder_kind). Two entries per Linux
# endpoint recipe: the SID route and the plain route used after the
# behavior has run.
_LINUX_RECIPES = {
    "end": [
        "-6 route {verb} {sid1}/128 encap seg6local action End dev {iface_in}",
        "-6 route {verb} {sid2}/128 via {nexthop6} dev {iface_out}",
    ],
    "end_t": [
        "-6 route {verb} {sid1}/128 encap seg6local action End.T table {table} dev {iface_in}",
        "-6 route {verb} {sid2}/128 table {table} via {nexthop6} dev {iface_out}",
    ],
    "end_x": [
        "-6 route {verb} {sid1}/128 encap seg6local action End.X nh6 {nexthop6} dev {iface_in}",
    ],
    "end_dt6": [
        "-6 route {verb} {sid1}/128 encap seg6local action End.DT6 table {table} dev {iface_in}",
        "-6 route {verb} {inner_prefix6} table {table} via {nexthop6} dev {iface_out}",
    ],
    "end_dt4": [
        "-6 route {verb} {sid1}/128 encap seg6local action End.DT4 vrftable {table} dev {iface_in}",
        "route {verb} {inner_prefix4} table {table} via {nexthop4} dev {iface_out}",
    ],
    "end_dx6": [
        "-6 route {verb} {sid1}/128 encap seg6local action End.DX6 nh6 {nexthop6} dev {iface_in}",
    ],
    "end_dx4": [
        "-6 route {verb} {sid1}/128 encap seg6local action End.DX4 nh4 {nexthop4} dev {iface_in}",
    ],
    "end_dx2": [
        "-6 route {verb} {sid1}/128 encap seg6local action End.DX2 oif {iface_out} dev {iface_in}",
    ],
    "h_insert": [
        "-6 route {verb} {inner_prefix6} encap seg6 mode inline segs {sid1},{sid2} dev {iface_out}",
    ],
    "h_encaps": [
        "-6 route {verb} {inner_prefix6} encap seg6 mode encap segs {sid1} dev {iface_out}",
    ],
    "h_encaps_l2": [
        "-6 route {verb} {sid1}/128 encap seg6 mode l2encap segs {sid1} dev {iface_out}",
    ],
    "plain_ipv6": [
        "-6 route {verb} {inner_prefix6} via {nexthop6} dev {iface_out}",
    ],
    "plain_ipv4": [
        "route {verb} {inner_prefix4} via {nexthop4} dev {iface_out}",
    ],
}

_VPP_RECIPES = {
    "end": (
        ["sr localsid address {sid1} behavior end",
         "ip route add {sid2}/128 via {nexthop6} {iface_out}"],
        ["sr localsid del address {sid1}",
         "ip route del {sid2}/128 via {nexthop6} {iface_out}"],
    ),
    "end_t": (
        ["sr localsid address {sid1} behavior end.t {table}",
         "ip route add {sid2}/128 table {table} via {nexthop6} {iface_out}"],
        ["sr localsid del address {sid1}",
         "ip route del {sid2}/128 table {table} via {nexthop6} {iface_out}"],
    ),
    "end_x": (
        ["sr localsid address {sid1} behavior end.x {iface_out} {nexthop6}"],
        ["sr localsid del address {sid1}"],
    ),
    "end_dt6": (
        ["sr localsid address {sid1} behavior end.dt6 {table}",
         "ip route add {inner_prefix6} table {table} via {nexthop6} {iface_out}"],
        ["sr localsid del address {sid1}",
         "ip route del {inner_prefix6} table {table} via {nexthop6} {iface_out}"],
    ),
    "end_dt4": (
        ["sr localsid address {sid1} behavior end.dt4 {table}",
         "ip route add {inner_prefix4} table {table} via {nexthop4} {iface_out}"],
        ["sr localsid del address {sid1}",
         "ip route del {inner_prefix4} table {table} via {nexthop4} {iface_out}"],
    ),
    "end_dx6": (
        ["sr localsid address {sid1} behavior end.dx6 {iface_out} {nexthop6}"],
        ["sr localsid del address {sid1}"],
    ),
    "end_dx4": (
        ["sr localsid address {sid1} behavior end.dx4 {iface_out} {nexthop4}"],
        ["sr localsid del address {sid1}"],
    ),
    "end_dx2": (
        ["sr localsid address {sid1} behavior end.dx2 {iface_out}"],
        ["sr localsid del address {sid1}"],
    ),
    "h_insert": (
        ["sr policy add bsid {sid1} next {sid1} next {sid2} insert",
         "sr steer l3 {inner_prefix6} via bsid {sid1}"],
        ["sr steer del l3 {inner_prefix6} via bsid {sid1}",
         "sr policy del bsid {sid1}"],
    ),
    "h_encaps": (
        ["sr policy add bsid {sid1} next {sid1} encap",
         "sr steer l3 {inner_prefix6} via bsid {sid1}"],
        ["sr steer del l3 {inner_prefix6} via bsid {sid1}",
         "sr policy del bsid {sid1}"],
    ),
    "h_encaps_l2": (
        ["sr policy add bsid {sid1} next {sid1} encap",
         "sr steer l2 {iface_in} via bsid {sid1}"],
        ["sr steer del l2 {iface_in} via bsid {sid1}",
         "sr policy del bsid {sid1}"],
    ),
    "plain_ipv6": (
        ["ip route add {inner_prefix6} via {nexthop6} {iface_out}"],
        ["ip route del {inner_prefix6} via {nexthop6} {iface_out}"],
    ),
    "plain_ipv4": (
        ["ip route add {inner_prefix4} via {nexthop4} {iface_out}"],
        ["ip route del {inner_prefix4} via {nexthop4} {iface_out}"],
    ),
}

FORWARDER_KINDS = ("linux", "vpp", "sim")


def recipe_for(behavior: BehaviorId, forwarder_kind: str) -> ConfigRecipe:
    spec = lookup(behavior)
    if not spec.measured or not spec.recipe_key:
        raise UnsupportedBehaviorError(
            f"{spec.id} is not measurable: no semantics/recipe"
        )
    if forwarder_kind == "sim":
        return ConfigRecipe(
            behavior=spec.id,
            forwarder_kind="sim",
            steps=(f"sim set-behavior {spec.id.value}",),
            teardown=(f"sim clear-behavior {spec.id.value}",),
        )
    if forwarder_kind == "linux":
        if not spec.linux_supported:
            raise UnsupportedBehaviorError(
                f"{spec.id} is not supported by the linux forwarder "
                f"(catalog: linux_supported=False)"
            )
        steps, teardown = _linux_routes(_LINUX_RECIPES[spec.recipe_key])
        return ConfigRecipe(spec.id, "linux", steps, teardown)
    if forwarder_kind == "vpp":
        if not spec.vpp_supported:
            raise UnsupportedBehaviorError(
                f"{spec.id} is not supported by the vpp forwarder "
                f"(catalog: vpp_supported=False)"
            )
        setup, teardown = _VPP_RECIPES[spec.recipe_key]
        return ConfigRecipe(
            spec.id,
            "vpp",
            tuple(s.format(**ADDRESS_PLAN) for s in setup),
            tuple(s.format(**ADDRESS_PLAN) for s in teardown),
        )
    raise ConfigError(f"unknown forwarder kind: {forwarder_kind!r}")


# ---------------------------------------------------------------------------
# configuration files


@dataclass(frozen=True)
class PacketOverrides:
    inner_size: Optional[int] = None
    inner_kind: Optional[InnerKind] = None


@dataclass(frozen=True)
class ExperimentConfig:
    behaviors: tuple[BehaviorId, ...]
    experiment_type: str = "pdr"  # pdr | ndr
    algorithm: str = "binary"  # binary | legacy
    runs: int = 10
    packet: PacketOverrides = PacketOverrides()
    search: SearchConfig = SearchConfig()
    policy: TrialPolicy = TrialPolicy()


@dataclass(frozen=True)
class SshConnection:
    host: str
    port: int = 22
    user: str = "root"
    key_file: Optional[str] = None


@dataclass(frozen=True)
class SimModelConfig:
    capacity_pps: Mapping[BehaviorId, float]
    loss_at_capacity: float = 0.01
    curve_exponent: float = 4.0
    noise_sigma: float = 0.0
    seed: int = 0


@dataclass(frozen=True)
class TestbedConfig:
    forwarder_kind: str
    link: LinkSpec
    connection: Optional[SshConnection] = None
    model: Optional[SimModelConfig] = None


def _require_mapping(doc: Any, where: str) -> dict:
    if not isinstance(doc, dict):
        raise ConfigError(f"{where}: expected a mapping")
    return doc


def _reject_unknown(doc: Mapping, allowed: Sequence[str], where: str) -> None:
    unknown = set(doc) - set(allowed)
    if unknown:
        raise ConfigError(f"{where}: unknown key(s) {sorted(unknown)}")


def _load_yaml(text: str, where: str) -> dict:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"{where}: invalid YAML: {exc}") from exc
    if doc is None:
        raise ConfigError(f"{where}: empty document")
    return _require_mapping(doc, where)


def _build(cls, doc: Mapping, where: str):
    """Construct a validating dataclass from a mapping, with key checks."""
    fields = cls.__dataclass_fields__
    _reject_unknown(doc, list(fields), where)
    try:
        return cls(**doc)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def parse_experiment_config(text: str) -> ExperimentConfig:
    doc = _load_yaml(text, "experiment")
    _reject_unknown(
        doc,
        ["behaviors", "experiment_type", "algorithm", "runs", "packet", "search", "policy"],
        "experiment",
    )
    raw_behaviors = doc.get("behaviors")
    if not isinstance(raw_behaviors, list) or not raw_behaviors:
        raise ConfigError("experiment.behaviors: need a non-empty list")
    behaviors = []
    for name in raw_behaviors:
        try:
            bid = BehaviorId.parse(str(name))
        except Srv6BenchError as exc:
            raise ConfigError(f"experiment.behaviors: {exc}") from exc
        if bid in behaviors:
            raise ConfigError(f"experiment.behaviors: duplicate entry {bid}")
        behaviors.append(bid)

    experiment_type = doc.get("experiment_type", "pdr")
    if experiment_type not in ("pdr", "ndr"):
        raise ConfigError("experiment.experiment_type: must be 'pdr' or 'ndr'")
    algorithm = doc.get("algorithm", "binary")
    if algorithm not in ("binary", "legacy"):
        raise ConfigError("experiment.algorithm: must be 'binary' or 'legacy'")
    runs = doc.get("runs", 10)
    if not isinstance(runs, int) or runs < 1:
        raise ConfigError("experiment.runs: must be a positive integer")

    packet_doc = _require_mapping(doc.get("packet", {}), "experiment.packet")
    _reject_unknown(packet_doc, ["inner_size", "inner_kind"], "experiment.packet")
    inner_kind = packet_doc.get("inner_kind")
    if inner_kind is not None:
        try:
            inner_kind = InnerKind(inner_kind)
        except ValueError:
            raise ConfigError(
                "experiment.packet.inner_kind: must be ipv6, ipv4 or ethernet"
            ) from None
    packet = PacketOverrides(
        inner_size=packet_doc.get("inner_size"), inner_kind=inner_kind
    )

    search_doc = _require_mapping(doc.get("search", {}), "experiment.search")
    search = _build(SearchConfig, search_doc, "experiment.search")
    if experiment_type == "ndr":
        # NDR is the zero-loss-threshold special case
        search = SearchConfig(
            min_percent=search.min_percent,
            max_percent=search.max_percent,
            accuracy_percent=search.accuracy_percent,
            loss_threshold=0.0,
            trial_duration_s=search.trial_duration_s,
        )
    policy_doc = _require_mapping(doc.get("policy", {}), "experiment.policy")
    policy = _build(TrialPolicy, policy_doc, "experiment.policy")

    return ExperimentConfig(
        behaviors=tuple(behaviors),
        experiment_type=experiment_type,
        algorithm=algorithm,
        runs=runs,
        packet=packet,
        search=search,
        policy=policy,
    )


def parse_testbed_config(text: str) -> TestbedConfig:
    doc = _load_yaml(text, "testbed")
    _reject_unknown(doc, ["forwarder", "link", "connection", "model"], "testbed")
    kind = doc.get("forwarder")
    if kind not in FORWARDER_KINDS:
        raise ConfigError(
            f"testbed.forwarder: must be one of {', '.join(FORWARDER_KINDS)}"
        )
    link_doc = _require_mapping(doc.get("link", {}), "testbed.link")
    _reject_unknown(link_doc, ["bit_rate_bps"], "testbed.link")
    try:
        link = LinkSpec(line_bit_rate_bps=float(link_doc.get("bit_rate_bps", 10e9)))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"testbed.link: {exc}") from exc

    connection = None
    model = None
    if kind == "sim":
        model_doc = doc.get("model")
        if model_doc is None:
            raise ConfigError("testbed.model: required for the sim forwarder")
        model_doc = _require_mapping(model_doc, "testbed.model")
        _reject_unknown(
            model_doc,
            ["capacity_kpps", "capacity_pps", "loss_at_capacity",
             "curve_exponent", "noise_sigma", "seed"],
            "testbed.model",
        )
        caps_raw = model_doc.get("capacity_pps")
        scale = 1.0
        if caps_raw is None:
            caps_raw = model_doc.get("capacity_kpps")
            scale = 1e3
        if not isinstance(caps_raw, dict) or not caps_raw:
            raise ConfigError(
                "testbed.model: need a non-empty capacity_pps or capacity_kpps map"
            )
        capacities = {}
        for name, value in caps_raw.items():
            try:
                bid = BehaviorId.parse(str(name))
            except Srv6BenchError as exc:
                raise ConfigError(f"testbed.model capacities: {exc}") from exc
            capacities[bid] = float(value) * scale
        try:
            model = SimModelConfig(
                capacity_pps=capacities,
                loss_at_capacity=float(model_doc.get("loss_at_capacity", 0.01)),
                curve_exponent=float(model_doc.get("curve_exponent", 4.0)),
                noise_sigma=float(model_doc.get("noise_sigma", 0.0)),
                seed=int(model_doc.get("seed", 0)),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"testbed.model: {exc}") from exc
    else:
        conn_doc = doc.get("connection")
        if conn_doc is None:
            raise ConfigError("testbed.connection: required for remote forwarders")
        conn_doc = _require_mapping(conn_doc, "testbed.connection")
        connection = _build(SshConnection, conn_doc, "testbed.connection")
        if not connection.host:
            raise ConfigError("testbed.connection.host: required")

    return TestbedConfig(
        forwarder_kind=kind, link=link, connection=connection, model=model
    )


# ---------------------------------------------------------------------------
# executors


class CommandExecutor(Protocol):
    """Execute one configuration command, return (exit status, output)."""

    def execute(self, command: str) -> tuple[int, str]: ...


class RecordingExecutor:
    """Accepts every command and records it; the default for sim testbeds
    and the verification hook for ordering tests."""

    def __init__(self):
        self.commands: list[str] = []

    def execute(self, command: str) -> tuple[int, str]:
        self.commands.append(command)
        return 0, ""


class SshExecutor:
    """Remote-shell executor bound to a testbed connection descriptor.

    The transport is not wired up in this build; execute() reports the
    driver gap instead of silently succeeding.
    """

    def __init__(self, connection: SshConnection):
        self.connection = connection

    def execute(self, command: str) -> tuple[int, str]:
        return 1, (
            f"ssh transport to {self.connection.host} is not available "
            f"in this build"
        )


# ---------------------------------------------------------------------------
# campaign


@dataclass(frozen=True)
class BehaviorResult:
    behavior: BehaviorId
    frame_size: Optional[int] = None
    line_packet_rate_pps: Optional[float] = None
    interval: Optional[RateInterval] = None
    flags: tuple[str, ...] = ()
    stats: Optional[SummaryStats] = None
    traces: tuple[FinderTrace, ...] = ()
    error: Optional[str] = None


@dataclass
class CampaignResult:
    forwarder_kind: str
    entries: list[BehaviorResult]
    version: str = __version__
    started_at: str = ""
    finished_at: str = ""

    @property
    def partial(self) -> bool:
        return any(e.error is not None for e in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "version": self.version,
            "forwarder": self.forwarder_kind,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            # CI95 half-widths assume normality (z = 1.96)
            "ci95_model": "normal",
            "behaviors": [
                {
                    "behavior": e.behavior.value,
                    "frame_size": e.frame_size,
                    "line_packet_rate_pps": e.line_packet_rate_pps,
                    "pdr_low_pps": e.interval.low_pps if e.interval else None,
                    "pdr_high_pps": e.interval.high_pps if e.interval else None,
                    "flags": list(e.flags),
                    "stats": (
                        {
                            "mean_pps": e.stats.mean,
                            "cv_percent": e.stats.cv_percent,
                            "ci95_percent": e.stats.ci95_percent,
                            "n": e.stats.n,
                        }
                        if e.stats
                        else None
                    ),
                    "error": e.error,
                }
                for e in self.entries
            ],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "CampaignResult":
        entries = []
        for row in doc["behaviors"]:
            interval = None
            if row["pdr_low_pps"] is not None:
                interval = RateInterval(row["pdr_low_pps"], row["pdr_high_pps"])
            stats = None
            if row["stats"] is not None:
                stats = SummaryStats(
                    mean=row["stats"]["mean_pps"],
                    cv_percent=row["stats"]["cv_percent"],
                    ci95_percent=row["stats"]["ci95_percent"],
                    n=row["stats"]["n"],
                )
            entries.append(
                BehaviorResult(
                    behavior=BehaviorId.parse(row["behavior"]),
                    frame_size=row["frame_size"],
                    line_packet_rate_pps=row["line_packet_rate_pps"],
                    interval=interval,
                    flags=tuple(row["flags"]),
                    stats=stats,
                    error=row["error"],
                )
            )
        return cls(
            forwarder_kind=doc["forwarder"],
            entries=entries,
            version=doc["version"],
            started_at=doc["started_at"],
            finished_at=doc["finished_at"],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv_mod.writer(buf)
        writer.writerow(
            ["behavior", "forwarder", "pdr_low_pps", "pdr_high_pps",
             "midpoint_kpps", "cv_percent", "ci95_percent", "flags"]
        )
        for e in self.entries:
            writer.writerow(
                [
                    e.behavior.value,
                    self.forwarder_kind,
                    f"{e.interval.low_pps:.2f}" if e.interval else "",
                    f"{e.interval.high_pps:.2f}" if e.interval else "",
                    f"{e.interval.midpoint_pps / 1e3:.2f}" if e.interval else "",
                    f"{e.stats.cv_percent:.4f}" if e.stats else "",
                    f"{e.stats.ci95_percent:.4f}" if e.stats else "",
                    ";".join(e.flags) if e.flags else (e.error or ""),
                ]
            )
        return buf.getvalue()


def resolve(
    behavior: BehaviorId,
    testbed: TestbedConfig,
    packet: Optional[PacketOverrides] = None,
) -> tuple[PacketTemplate, ConfigRecipe]:
    """Map a behavior to its test packet and configuration recipe."""
    recipe = recipe_for(behavior, testbed.forwarder_kind)
    req = traffic_requirement(behavior)
    if packet:
        changes = {}
        if packet.inner_size is not None:
            changes["inner_packet_size"] = packet.inner_size
        if packet.inner_kind is not None:
            changes["inner_kind"] = packet.inner_kind
        if changes:
            from dataclasses import replace

            req = replace(req, **changes)
    sid_plan = [Sid.from_str(ADDRESS_PLAN["sid1"]), Sid.from_str(ADDRESS_PLAN["sid2"])]
    template = build_test_packet(req, sid_plan[: max(req.srh_sid_count, req.min_sids)])
    return template, recipe


def default_behavior_configs() -> dict[BehaviorId, BehaviorConfig]:
    """Behavior parameters derived from the address plan. Headend
    policies get their SID lists here: a single segment for the encap
    flavors (segment rides in the destination address, no SRH) and two
    segments for SRH insertion."""
    sid1 = Sid.from_str(ADDRESS_PLAN["sid1"])
    sid2 = Sid.from_str(ADDRESS_PLAN["sid2"])
    base = BehaviorConfig(
        table=ADDRESS_PLAN["table"],
        adjacency=ADDRESS_PLAN["nexthop6"],
        interface=ADDRESS_PLAN["iface_out"],
    )
    from dataclasses import replace

    return {
        BehaviorId.H_INSERT: replace(base, segments=(sid1, sid2)),
        BehaviorId.H_ENCAPS: replace(base, segments=(sid1,)),
        BehaviorId.H_ENCAPS_L2: replace(base, segments=(sid1,)),
        BehaviorId.END: base,
        BehaviorId.END_T: base,
        BehaviorId.END_X: base,
        BehaviorId.END_DT4: base,
        BehaviorId.END_DT6: base,
        BehaviorId.END_DX2: base,
        BehaviorId.END_DX4: base,
        BehaviorId.END_DX6: base,
        BehaviorId.PLAIN_IPV4: base,
        BehaviorId.PLAIN_IPV6: base,
    }


def _make_driver(behavior, template, testbed: TestbedConfig):
    if testbed.forwarder_kind == "sim":
        mc = testbed.model
        model = ForwarderModel(
            capacity_pps=dict(mc.capacity_pps),
            loss_at_capacity=mc.loss_at_capacity,
            curve_exponent=mc.curve_exponent,
            noise_sigma=mc.noise_sigma,
            seed=mc.seed,
            behavior_config=default_behavior_configs(),
        )
        return SimDriver(model, behavior, template)
    return TrexStatelessDriver(host=testbed.connection.host)


def _make_executor(testbed: TestbedConfig) -> CommandExecutor:
    if testbed.forwarder_kind == "sim":
        return RecordingExecutor()
    return SshExecutor(testbed.connection)


def run_campaign(
    experiment: ExperimentConfig,
    testbed: TestbedConfig,
    executor: Optional[CommandExecutor] = None,
    driver_factory=None,
) -> CampaignResult:
    """Run every requested behavior sequentially against one testbed.

    Per-behavior failures are recorded and the campaign continues;
    configuration teardown always runs after a behavior's setup steps
    were issued. executor and driver_factory are injection points for
    tests (a recording mock, a scripted driver).
    """
    executor = executor or _make_executor(testbed)
    driver_factory = driver_factory or _make_driver
    algorithm = find_pdr if experiment.algorithm == "binary" else find_pdr_legacy

    result = CampaignResult(
        forwarder_kind=testbed.forwarder_kind,
        entries=[],
        started_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
    )
    for behavior in experiment.behaviors:
        try:
            template, recipe = resolve(behavior, testbed, experiment.packet)
        except Srv6BenchError as exc:
            result.entries.append(BehaviorResult(behavior=behavior, error=str(exc)))
            continue

        frame_size = template.frame_size
        lpr = line_packet_rate(testbed.link, frame_size)
        configured = False
        try:
            for step in recipe.steps:
                status, output = executor.execute(step)
                if status != 0:
                    raise Srv6BenchError(
                        f"configuration step failed ({status}): {step}: {output}"
                    )
            configured = True
            driver = driver_factory(behavior, template, testbed)
            validation = validate_pdr(
                driver,
                lpr,
                experiment.search,
                experiment.policy,
                runs=experiment.runs,
                algorithm=algorithm,
            )
            last = validation.results[-1]
            result.entries.append(
                BehaviorResult(
                    behavior=behavior,
                    frame_size=frame_size,
                    line_packet_rate_pps=lpr,
                    interval=last.interval,
                    flags=last.flags,
                    stats=validation.stats,
                    traces=tuple(r.trace for r in validation.results),
                )
            )
        except Srv6BenchError as exc:
            result.entries.append(
                BehaviorResult(
                    behavior=behavior,
                    frame_size=frame_size,
                    line_packet_rate_pps=lpr,
                    error=str(exc),
                )
            )
        finally:
            if configured:
                for step in recipe.teardown:
                    executor.execute(step)
    result.finished_at = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return result
