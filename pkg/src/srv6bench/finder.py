"""Partial-drop-rate search: pure binary search, the legacy
exponential-then-binary variant, the near-threshold repetition policy
and the multi-run validation wrapper.

Both finders return an interval [low, high] of offered rates whose width
is at most epsilon = line_packet_rate * accuracy_percent / 100, plus a
trace of every trial they ran.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    ExperimentAbortedError,
    Srv6BenchError,
    UnstableMeasurementError,
)
from .ratemath import SummaryStats, delivery_ratio, summarize
from .simulator import TrafficDriver

RAISE_LOW = "raise-low"
LOWER_HIGH = "lower-high"

FLAG_LINE_RATE_LIMITED = "line-rate-limited"
FLAG_BELOW_SEARCH_FLOOR = "below-search-floor"


@dataclass(frozen=True)
class SearchConfig:
    """Search window and trial parameters, bounds as % of line packet rate."""

    min_percent: float = 1.0
    max_percent: float = 100.0
    accuracy_percent: float = 1.0
    loss_threshold: float = 0.005
    trial_duration_s: float = 10.0

    def __post_init__(self):
        if not 0 < self.min_percent < self.max_percent <= 100:
            raise ValueError("need 0 < min_percent < max_percent <= 100")
        if self.accuracy_percent <= 0:
            raise ValueError("accuracy_percent must be positive")
        if not 0 <= self.loss_threshold < 1:
            raise ValueError("loss_threshold must be in [0, 1)")
        if self.trial_duration_s <= 0:
            raise ValueError("trial_duration_s must be positive")


@dataclass(frozen=True)
class TrialPolicy:
    """When and how to repeat trials whose delivery ratio sits near the
    loss threshold."""

    near_band: float = 0.0025
    repetitions: int = 5
    max_rx_cv_percent: float = 1.0
    retry_cap: int = 3

    def __post_init__(self):
        if self.near_band <= 0:
            raise ValueError("near_band must be positive")
        if self.repetitions < 2:
            raise ValueError("repetitions must be >= 2")
        if self.retry_cap < 1:
            raise ValueError("retry_cap must be >= 1")


@dataclass(frozen=True)
class RateInterval:
    low_pps: float
    high_pps: float

    def __post_init__(self):
        if self.low_pps > self.high_pps:
            raise ValueError("interval bounds out of order")

    @property
    def width_pps(self) -> float:
        return self.high_pps - self.low_pps

    @property
    def midpoint_pps(self) -> float:
        return (self.low_pps + self.high_pps) / 2.0


@dataclass(frozen=True)
class TraceEntry:
    tx_rate_pps: float
    delivery_ratio: float
    decision: str
    repetitions: int


@dataclass
class FinderTrace:
    entries: list[TraceEntry] = field(default_factory=list)

    @property
    def distinct_points(self) -> int:
        return len({e.tx_rate_pps for e in self.entries})

    def to_json(self) -> str:
        return json.dumps(
            [
                {
                    "tx_rate_pps": e.tx_rate_pps,
                    "delivery_ratio": e.delivery_ratio,
                    "decision": e.decision,
                    "repetitions": e.repetitions,
                }
                for e in self.entries
            ],
            indent=2,
        )


@dataclass(frozen=True)
class FinderResult:
    interval: RateInterval
    flags: tuple[str, ...]
    trace: FinderTrace


def evaluate_point(
    driver: TrafficDriver,
    tx_rate_pps: float,
    duration_s: float,
    loss_threshold: float,
    policy: TrialPolicy,
) -> tuple[float, int]:
    """Measure the delivery ratio at one rate, repeating near the threshold.

    A single trial stands when its DR is 1 or comfortably away from the
    threshold. Inside the near band the trial is repeated to
    policy.repetitions total and the mean DR is accepted only if the CV
    of the received rates stays under the cap; the whole batch is
    retried up to policy.retry_cap times before giving up.

    Returns (delivery ratio, trials used).
    """
    if tx_rate_pps <= 0:
        raise ValueError("tx rate must be positive")
    pass_mark = 1.0 - loss_threshold
    sample = driver.run_trial(tx_rate_pps, duration_s)
    dr = delivery_ratio(sample)
    if dr == 1.0 or abs(dr - pass_mark) > policy.near_band:
        return dr, 1

    trials_used = 1
    for batch in range(policy.retry_cap):
        if batch == 0:
            samples = [sample]
        else:
            samples = []
        while len(samples) < policy.repetitions:
            samples.append(driver.run_trial(tx_rate_pps, duration_s))
            trials_used += 1
        rx_rates = [s.throughput_pps for s in samples]
        if summarize(rx_rates).cv_percent <= policy.max_rx_cv_percent:
            mean_dr = sum(delivery_ratio(s) for s in samples) / len(samples)
            return mean_dr, trials_used
    raise UnstableMeasurementError(
        f"rx rate CV stayed above {policy.max_rx_cv_percent}% "
        f"after {policy.retry_cap} batches at {tx_rate_pps:.0f} pps"
    )


def _checked_evaluate(driver, rate, cfg, policy, trace):
    try:
        return evaluate_point(
            driver, rate, cfg.trial_duration_s, cfg.loss_threshold, policy
        )
    except UnstableMeasurementError:
        raise
    except Srv6BenchError as exc:
        raise ExperimentAbortedError(
            f"driver failure at {rate:.0f} pps: {exc}", trace=trace
        ) from exc


def find_pdr(
    driver: TrafficDriver,
    line_packet_rate_pps: float,
    cfg: Optional[SearchConfig] = None,
    policy: Optional[TrialPolicy] = None,
) -> FinderResult:
    """Pure binary search for the partial drop rate.

    Halves the window around its middle point until the window is no
    wider than the accuracy target. A window whose top was never lowered
    is flagged line-rate-limited; one whose bottom was never raised is
    flagged below-search-floor.
    """
    cfg = cfg or SearchConfig()
    policy = policy or TrialPolicy()
    lpr = line_packet_rate_pps
    low = lpr * cfg.min_percent / 100.0
    high = lpr * cfg.max_percent / 100.0
    eps = lpr * cfg.accuracy_percent / 100.0
    pass_mark = 1.0 - cfg.loss_threshold

    trace = FinderTrace()
    top_lowered = False
    bottom_raised = False
    while high - low > eps:
        tx = (low + high) / 2.0
        dr, reps = _checked_evaluate(driver, tx, cfg, policy, trace)
        if dr < pass_mark:
            high = tx
            top_lowered = True
            decision = LOWER_HIGH
        else:
            low = tx
            bottom_raised = True
            decision = RAISE_LOW
        trace.entries.append(TraceEntry(tx, dr, decision, reps))

    flags = []
    if trace.entries and not top_lowered:
        flags.append(FLAG_LINE_RATE_LIMITED)
    if trace.entries and not bottom_raised:
        flags.append(FLAG_BELOW_SEARCH_FLOOR)
    return FinderResult(RateInterval(low, high), tuple(flags), trace)


def find_pdr_legacy(
    driver: TrafficDriver,
    line_packet_rate_pps: float,
    cfg: Optional[SearchConfig] = None,
    policy: Optional[TrialPolicy] = None,
) -> FinderResult:
    """Older two-phase finder: double the rate from the floor until a
    trial fails, then binary-search between the last passing and first
    failing rates."""
    cfg = cfg or SearchConfig()
    policy = policy or TrialPolicy()
    lpr = line_packet_rate_pps
    eps = lpr * cfg.accuracy_percent / 100.0
    pass_mark = 1.0 - cfg.loss_threshold
    max_rate = lpr * cfg.max_percent / 100.0

    trace = FinderTrace()
    rate = lpr * cfg.min_percent / 100.0
    last_passing = None
    first_failing = None
    while True:
        dr, reps = _checked_evaluate(driver, rate, cfg, policy, trace)
        if dr < pass_mark:
            first_failing = rate
            trace.entries.append(TraceEntry(rate, dr, LOWER_HIGH, reps))
            break
        last_passing = rate
        trace.entries.append(TraceEntry(rate, dr, RAISE_LOW, reps))
        if rate * 2.0 > max_rate:
            # next doubling would overshoot; leave the window top unprobed
            break
        rate = rate * 2.0

    if last_passing is None:
        # the very first probe at the window floor already failed
        return FinderResult(
            RateInterval(first_failing, first_failing),
            (FLAG_BELOW_SEARCH_FLOOR,),
            trace,
        )

    low = last_passing
    high = first_failing if first_failing is not None else max_rate
    top_lowered = first_failing is not None
    while high - low > eps:
        tx = (low + high) / 2.0
        dr, reps = _checked_evaluate(driver, tx, cfg, policy, trace)
        if dr < pass_mark:
            high = tx
            top_lowered = True
            decision = LOWER_HIGH
        else:
            low = tx
            decision = RAISE_LOW
        trace.entries.append(TraceEntry(tx, dr, decision, reps))
    flags = () if top_lowered else (FLAG_LINE_RATE_LIMITED,)
    return FinderResult(RateInterval(low, high), flags, trace)


@dataclass(frozen=True)
class ValidationResult:
    stats: SummaryStats
    results: tuple[FinderResult, ...]


def validate_pdr(
    driver: TrafficDriver,
    line_packet_rate_pps: float,
    cfg: Optional[SearchConfig] = None,
    policy: Optional[TrialPolicy] = None,
    runs: int = 10,
    algorithm=find_pdr,
) -> ValidationResult:
    """Repeat a full search and summarize the interval midpoints."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    results = tuple(
        algorithm(driver, line_packet_rate_pps, cfg, policy) for _ in range(runs)
    )
    stats = summarize([r.interval.midpoint_pps for r in results])
    return ValidationResult(stats=stats, results=results)
