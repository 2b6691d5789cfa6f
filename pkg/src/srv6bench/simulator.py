"""Simulated single-core forwarder and the traffic-driver contract.

The forwarder has a per-behavior capacity C and a parametric delivery
curve: below capacity the loss ramps up smoothly to loss_at_capacity,
above capacity the output is pinned at (1 - loss_at_capacity) * C. The
curve is continuous at C and invertible in closed form, which gives the
search algorithms an independent analytic oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Optional, Protocol

from .catalog import BehaviorId, traffic_requirement
from .errors import (
    DriverUnavailableError,
    RequirementViolationError,
    UnknownBehaviorError,
)
from .packet import (
    BehaviorConfig,
    ForwardAction,
    IPv4Header,
    IPv6Header,
    PacketTemplate,
    apply_behavior,
    decode,
    encode,
    satisfies,
)
from .ratemath import TrialSample


@dataclass(frozen=True)
class ForwarderModel:
    """Parametric model of a CPU-limited forwarder.

    capacity_pps maps each behavior to its saturation rate. Noise, when
    enabled, perturbs the received packet count multiplicatively with a
    seeded PRNG; results are deterministic for identical inputs.
    """

    capacity_pps: Mapping[BehaviorId, float]
    loss_at_capacity: float = 0.01
    curve_exponent: float = 4.0
    noise_sigma: float = 0.0
    seed: int = 0
    behavior_config: Mapping[BehaviorId, BehaviorConfig] = field(default_factory=dict)

    def __post_init__(self):
        if any(c <= 0 for c in self.capacity_pps.values()):
            raise ValueError("capacities must be positive")
        if not 0 <= self.loss_at_capacity < 1:
            raise ValueError("loss_at_capacity must be in [0, 1)")
        if self.curve_exponent < 1:
            raise ValueError("curve_exponent must be >= 1")
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be non-negative")

    def capacity(self, behavior: BehaviorId) -> float:
        try:
            return self.capacity_pps[behavior]
        except KeyError:
            raise UnknownBehaviorError(
                f"no capacity configured for {behavior}"
            ) from None


@dataclass(frozen=True)
class SimTrialReport:
    sample: TrialSample
    forwarded_template: Optional[PacketTemplate]
    action: Optional[ForwardAction]
    semantic_violations: int


def delivery_model(model: ForwarderModel, behavior: BehaviorId, rate_pps: float) -> float:
    """Expected delivery ratio at a given offered rate."""
    if rate_pps <= 0:
        raise ValueError("rate must be positive")
    c = model.capacity(behavior)
    l0 = model.loss_at_capacity
    if rate_pps <= c:
        return 1.0 - l0 * (rate_pps / c) ** model.curve_exponent
    return (1.0 - l0) * c / rate_pps


def analytic_pdr(
    model: ForwarderModel, behavior: BehaviorId, loss_threshold: float
) -> float:
    """Closed-form inversion of the delivery curve at 1 - loss_threshold."""
    if not 0 < loss_threshold < 1:
        raise ValueError("loss_threshold must be in (0, 1)")
    c = model.capacity(behavior)
    l0 = model.loss_at_capacity
    x = loss_threshold
    if x <= l0:
        return c * (x / l0) ** (1.0 / model.curve_exponent)
    return (1.0 - l0) * c / (1.0 - x)


def _outermost_hop_limit(template: PacketTemplate) -> Optional[int]:
    for layer in template.layers:
        if isinstance(layer, IPv6Header):
            return layer.hop_limit
        if isinstance(layer, IPv4Header):
            return layer.ttl
    return None


def run_trial(
    model: ForwarderModel,
    behavior: BehaviorId,
    template: PacketTemplate,
    rate_pps: float,
    duration_s: float,
    nonce: int = 0,
) -> SimTrialReport:
    """Offer traffic for a fixed duration and report what came back.

    nonce distinguishes otherwise-identical trials (e.g. repetitions in
    a batch) so each gets an independent but reproducible noise draw.
    """
    if rate_pps <= 0 or duration_s <= 0:
        raise ValueError("rate and duration must be positive")
    req = traffic_requirement(behavior)
    if not satisfies(template, req):
        raise RequirementViolationError(
            f"template does not satisfy the {behavior} traffic requirement"
        )
    cfg = model.behavior_config.get(behavior)
    forwarded, action = apply_behavior(behavior, template, cfg)
    # the transform must survive the wire untouched
    violations = 0 if decode(encode(forwarded)) == forwarded else 1

    p_in = round(rate_pps * duration_s)
    hop_limit = _outermost_hop_limit(forwarded)
    if hop_limit == 0:
        p_out = 0
    else:
        expected = p_in * delivery_model(model, behavior, rate_pps)
        if model.noise_sigma > 0:
            rng = random.Random(
                f"{model.seed}|{behavior.value}|{rate_pps!r}|{duration_s!r}|{nonce}"
            )
            expected *= 1.0 + rng.gauss(0.0, model.noise_sigma)
        p_out = min(max(round(expected), 0), p_in)
    sample = TrialSample(tx_packets=p_in, rx_packets=p_out, duration_s=duration_s)
    return SimTrialReport(
        sample=sample,
        forwarded_template=forwarded,
        action=action,
        semantic_violations=violations,
    )


class TrafficDriver(Protocol):
    """Blocking trial-running contract the search algorithms rely on."""

    def run_trial(self, rate_pps: float, duration_s: float) -> TrialSample: ...


class SimDriver:
    """Reference driver: runs trials against a ForwarderModel.

    Keeps a trial counter so repeated trials at the same rate draw fresh
    noise; reset() restores full reproducibility for a new campaign.
    """

    def __init__(
        self, model: ForwarderModel, behavior: BehaviorId, template: PacketTemplate
    ):
        self.model = model
        self.behavior = behavior
        self.template = template
        self._trials = 0
        self.last_report: Optional[SimTrialReport] = None

    def run_trial(self, rate_pps: float, duration_s: float) -> TrialSample:
        report = run_trial(
            self.model,
            self.behavior,
            self.template,
            rate_pps,
            duration_s,
            nonce=self._trials,
        )
        self._trials += 1
        self.last_report = report
        return report.sample

    def reset(self) -> None:
        self._trials = 0
        self.last_report = None


class TrexStatelessDriver:
    """Declared driver for a hardware tester; wire integration is stubbed."""

    def __init__(self, host: str, port: int = 4501):
        self.host = host
        self.port = port

    def run_trial(self, rate_pps: float, duration_s: float) -> TrialSample:
        raise DriverUnavailableError(
            "TRex stateless automation is not available in this build"
        )
