"""Command-line frontend.

Exit codes: 0 full success, 2 configuration error, 3 partial campaign
(some behaviors errored, others completed). Every subcommand is a thin
adapter over the library API.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .catalog import BehaviorId, catalog, spec_as_dict, traffic_requirement
from .errors import Srv6BenchError
from .orchestrator import (
    CampaignResult,
    parse_experiment_config,
    parse_testbed_config,
    run_campaign,
)
from .packet import build_test_packet, hexdump, Sid
from .ratemath import ETHERNET_HEADER_LEN, LinkSpec, line_packet_rate

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PARTIAL = 3

log = logging.getLogger("srv6bench")


def _cmd_lpr(args) -> int:
    link = LinkSpec(line_bit_rate_bps=args.bit_rate)
    frame = args.ip_packet_size + ETHERNET_HEADER_LEN
    pps = line_packet_rate(link, frame)
    print(f"frame size: {frame} B (IP {args.ip_packet_size} B + {ETHERNET_HEADER_LEN} B Ethernet)")
    print(f"line packet rate: {pps:.2f} pps ({pps / 1e3:.0f} kpps)")
    return EXIT_OK


def _cmd_behaviors(args) -> int:
    specs = catalog()
    if args.format == "json":
        print(json.dumps([spec_as_dict(s) for s in specs], indent=2))
        return EXIT_OK
    header = f"{'Behavior':<20} {'Category':<18} {'Linux':<6} {'VPP':<5} {'Measured':<9}"
    print(header)
    print("-" * len(header))
    for s in specs:
        print(
            f"{s.id.value:<20} {s.category.value:<18} "
            f"{'yes' if s.linux_supported else 'no':<6} "
            f"{'yes' if s.vpp_supported else 'no':<5} "
            f"{'yes' if s.measured else 'no':<9}"
        )
    return EXIT_OK


def _cmd_packet(args) -> int:
    behavior = BehaviorId.parse(args.behavior)
    req = traffic_requirement(behavior)
    sids = [Sid.from_str("fc00:0:0:1::1"), Sid.from_str("fc00:0:0:2::1")]
    template = build_test_packet(req, sids[: max(req.srh_sid_count, req.min_sids)])
    print(f"# {behavior.value}: {template.frame_size}-byte frame")
    print(hexdump(template))
    return EXIT_OK


def _write_outputs(result: CampaignResult, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "campaign.json").write_text(
        json.dumps(result.to_json_dict(), indent=2), encoding="utf-8"
    )
    (out_dir / "campaign.csv").write_text(result.to_csv(), encoding="utf-8")

    plot_lines = ["behavior,run,tx_rate_pps,delivery_ratio,throughput_pps"]
    for entry in result.entries:
        trace_doc = []
        for run_idx, trace in enumerate(entry.traces):
            trace_doc.append(
                [
                    {
                        "tx_rate_pps": t.tx_rate_pps,
                        "delivery_ratio": t.delivery_ratio,
                        "decision": t.decision,
                        "repetitions": t.repetitions,
                    }
                    for t in trace.entries
                ]
            )
            for t in trace.entries:
                plot_lines.append(
                    f"{entry.behavior.value},{run_idx},{t.tx_rate_pps:.2f},"
                    f"{t.delivery_ratio:.6f},{t.tx_rate_pps * t.delivery_ratio:.2f}"
                )
        if entry.traces:
            safe = entry.behavior.value.replace(".", "_")
            (out_dir / f"trace_{safe}.json").write_text(
                json.dumps(trace_doc, indent=2), encoding="utf-8"
            )
    (out_dir / "plot_data.csv").write_text("\n".join(plot_lines) + "\n", encoding="utf-8")


def _cmd_run(args) -> int:
    try:
        experiment_text = Path(args.experiment).read_text(encoding="utf-8")
        testbed_text = Path(args.testbed).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    experiment = parse_experiment_config(experiment_text)
    testbed = parse_testbed_config(testbed_text)
    result = run_campaign(experiment, testbed)
    _write_outputs(result, Path(args.out))
    for entry in result.entries:
        if entry.error:
            print(f"{entry.behavior.value}: ERROR: {entry.error}")
        else:
            mid = entry.interval.midpoint_pps / 1e3
            flags = f" [{', '.join(entry.flags)}]" if entry.flags else ""
            print(
                f"{entry.behavior.value}: PDR midpoint {mid:.1f} kpps "
                f"(CV {entry.stats.cv_percent:.3f}%, CI95 {entry.stats.ci95_percent:.3f}%)"
                f"{flags}"
            )
    print(f"outputs written to {args.out}")
    return EXIT_PARTIAL if result.partial else EXIT_OK


def _cmd_report(args) -> int:
    try:
        doc = json.loads(Path(args.campaign).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read campaign file: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    result = CampaignResult.from_json_dict(doc)
    if args.format == "csv":
        print(result.to_csv(), end="")
    else:
        for entry in result.entries:
            if entry.error:
                print(f"{entry.behavior.value}: ERROR: {entry.error}")
            elif entry.interval:
                print(
                    f"{entry.behavior.value}: [{entry.interval.low_pps:.0f}, "
                    f"{entry.interval.high_pps:.0f}] pps"
                    + (f" [{', '.join(entry.flags)}]" if entry.flags else "")
                )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srv6bench",
        description="SRv6 dataplane benchmarking: PDR campaigns, catalog "
        "inspection, line-rate math and packet fixtures.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a benchmarking campaign")
    p_run.add_argument("--experiment", required=True, help="experiment YAML file")
    p_run.add_argument("--testbed", required=True, help="testbed YAML file")
    p_run.add_argument("--out", required=True, help="output directory")
    p_run.set_defaults(func=_cmd_run)

    p_beh = sub.add_parser("behaviors", help="dump the behavior catalog")
    p_beh.add_argument("--format", choices=("table", "json"), default="table")
    p_beh.set_defaults(func=_cmd_behaviors)

    p_lpr = sub.add_parser("lpr", help="compute the line packet rate")
    p_lpr.add_argument("--bit-rate", type=float, default=10e9, help="line bit rate in bps")
    p_lpr.add_argument("--ip-packet-size", type=int, required=True, help="IP packet size in bytes")
    p_lpr.set_defaults(func=_cmd_lpr)

    p_pkt = sub.add_parser("packet", help="hex-dump a behavior's test packet")
    p_pkt.add_argument("--behavior", required=True)
    p_pkt.add_argument("--hex", action="store_true", help="accepted for symmetry; hex is the only output form")
    p_pkt.set_defaults(func=_cmd_packet)

    p_rep = sub.add_parser("report", help="re-render a stored campaign.json")
    p_rep.add_argument("--campaign", required=True, help="campaign.json path")
    p_rep.add_argument("--format", choices=("table", "csv"), default="table")
    p_rep.set_defaults(func=_cmd_report)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("SRV6BENCH_LOG", "WARNING"))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Srv6BenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
