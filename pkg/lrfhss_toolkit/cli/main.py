"""Main CLI entry point for the LR-FHSS toolkit."""

import argparse
import json
import logging
import math
import sys

from lrfhss_toolkit.core import (
    DEFAULT_TRANSITION_TIME_MS,
    LrFhssError,
    get_profile,
    list_profiles,
    load_calibration_file,
)
from lrfhss_toolkit.core.config_store import emit, render_csv
from lrfhss_toolkit.energy import (
    SWEEP_COLUMNS,
    VERTEX_COLUMNS,
    SweepDimension,
    Transmission,
    build_state_timeline,
    energy_report,
    sample_range,
    sweep,
)
from lrfhss_toolkit.framing import BLOCK_COLUMNS, DEFAULT_CHANNELS, HopGrid, build_frame_plan, fragment_count
from lrfhss_toolkit.toa import (
    COMPARE_COLUMNS,
    compare_models,
    compare_row,
    model_i_divisor,
    total_bits,
    transition_count,
)

logger = logging.getLogger(__name__)

DR_CHOICES = ["DR8", "DR9", "DR10", "DR11", "DR5US", "DR6US"]
EXIT_DOMAIN_ERROR = 1


def setup_logging(verbose: bool = False):
    """Configure logging for the CLI."""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(levelname)s: %(message)s",
    )


def payload_bytes(text: str) -> int:
    """argparse type: payload length in 1..255 bytes."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid payload length '{text}'") from None
    if not 1 <= value <= 255:
        raise argparse.ArgumentTypeError(f"payload length must be within 1..255 bytes, got {value}")
    return value


def channel_count(text: str) -> int:
    """argparse type: hop grid size of at least 2 channels."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid channel count '{text}'") from None
    if value < 2:
        raise argparse.ArgumentTypeError(f"hop grid needs at least 2 channels, got {value}")
    return value


def seed_u64(text: str) -> int:
    """argparse type: unsigned 64-bit seed."""
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed '{text}'") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {value}")
    return value


def finite_float(text: str) -> float:
    """argparse type: any finite number."""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number '{text}'") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"value must be finite, got {value}")
    return value


def positive_float(text: str) -> float:
    """argparse type: strictly positive finite number."""
    value = finite_float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"value must be positive, got {value}")
    return value


def non_negative_float(text: str) -> float:
    """argparse type: finite number >= 0."""
    value = finite_float(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"value must be non-negative, got {value}")
    return value


def _fail(message: str, verbose: bool = False):
    print(f"Error: {message}", file=sys.stderr)
    if verbose:
        import traceback
        traceback.print_exc()
    sys.exit(EXIT_DOMAIN_ERROR)


def cmd_toa(args):
    """Handle the toa command - one packet under all three ToA models."""
    try:
        dr = get_profile(args.dr)
        row = compare_row(args.payload, dr, args.tt)
        details = {
            "code_rate": str(dr.code_rate),
            "header_replicas": dr.header_replicas,
            "fragments": fragment_count(args.payload, dr),
            "transitions": transition_count(args.payload, dr),
            "total_bits": total_bits(args.payload, dr),
            "transition_time_ms": args.tt,
        }

        if args.format == "json":
            emit(json.dumps({**row.to_dict(), **details}, indent=2) + "\n")
            return

        print(f"{row.dr} (CR={details['code_rate']}, N_H={details['header_replicas']}), "
              f"L={row.L} B, T_T={args.tt} ms")
        print(f"  N_F={details['fragments']}  N_T={details['transitions']}  P_B={details['total_bits']} bits")
        print(f"  proposed: {row.toa_proposed_ms:.6f} ms")
        print(f"  model I:  {row.toa_model1_ms:.6f} ms (delta {row.delta1_ms:+.6f} ms, {row.rel1_pct:+.2f}%)")
        print(f"  model II: {row.toa_model2_ms:.6f} ms (delta {row.delta2_ms:+.6f} ms, {row.rel2_pct:+.2f}%)")

    except LrFhssError as e:
        _fail(str(e), args.verbose)


def cmd_compare(args):
    """Handle the compare command - ToA model comparison over a payload range."""
    try:
        dr = get_profile(args.dr)
        rows = compare_models(range(args.from_, args.to + 1), dr, args.tt)

        if args.format == "json":
            text = json.dumps([r.to_dict() for r in rows], indent=2) + "\n"
        else:
            text = render_csv((r.to_dict() for r in rows), COMPARE_COLUMNS)
        emit(text, args.out)
        logger.info(f"Compared {len(rows)} payload lengths")

    except LrFhssError as e:
        _fail(str(e), args.verbose)


def cmd_energy(args):
    """Handle the energy command - current budget of one configuration."""
    try:
        cal = load_calibration_file(args.cal)
        tx = Transmission(payload_len=args.payload, dr=get_profile(args.dr), p_tx_dbm=args.ptx)
        report = energy_report(tx, args.period * 1000.0, cal, capacity_mah=args.battery)

        if args.format == "json":
            emit(json.dumps(report.to_dict(), indent=2) + "\n")
            return

        print(f"{report.dr}, L={report.payload_len} B, P_tx={report.p_tx_dbm} dBm, "
              f"period={args.period} s")
        print(f"  ToA:             {report.toa_ms:.6f} ms")
        print(f"  active time:     {report.active_duration_ms:.6f} ms")
        print(f"  average current: {report.average_current:.6f} mA")
        print(f"  charge/packet:   {report.charge_per_packet_mah * 1000.0:.6f} uAh")
        print("  charge per state (mA*ms):")
        for state, charge in report.state_charge_mams.items():
            print(f"    {state:14s} {charge:.6f}")
        if report.lifetime_h is not None:
            print(f"  lifetime:        {report.lifetime_h:.6f} h "
                  f"({report.lifetime_days:.2f} days, {report.lifetime_years:.3f} years) "
                  f"at {report.capacity_mah} mAh")

    except LrFhssError as e:
        _fail(str(e), args.verbose)


def cmd_sweep(args):
    """Handle the sweep command - CSV of ToA, current and lifetime over one input."""
    try:
        cal = load_calibration_file(args.cal)
        drs = [get_profile(dr) for dr in (args.dr or ["DR8"])]
        base = Transmission(payload_len=args.payload, dr=drs[0], p_tx_dbm=args.ptx)
        values = sample_range(args.start, args.stop, args.step)

        rows = sweep(
            SweepDimension(args.dimension),
            values,
            base,
            args.period,
            cal,
            drs=drs,
            capacity_mah=args.battery,
            workers=args.workers,
        )

        if args.format == "json":
            text = json.dumps([r.to_dict() for r in rows], indent=2) + "\n"
        else:
            text = render_csv((r.to_dict() for r in rows), SWEEP_COLUMNS)
        emit(text, args.out)

    except (LrFhssError, ValueError) as e:
        _fail(str(e), args.verbose)


def cmd_frame(args):
    """Handle the frame command - dump a frame plan with hop channels."""
    try:
        dr = get_profile(args.dr)
        plan = build_frame_plan(args.payload, dr, HopGrid(n_channels=args.channels, seed=args.seed))

        if args.format == "csv":
            text = render_csv(plan.block_rows(args.tt), BLOCK_COLUMNS)
        else:
            text = json.dumps(plan.to_dict(), indent=2) + "\n"
        emit(text, args.out)

    except LrFhssError as e:
        _fail(str(e), args.verbose)


def cmd_timeline(args):
    """Handle the timeline command - current profile of one notification period."""
    try:
        cal = load_calibration_file(args.cal)
        tx = Transmission(payload_len=args.payload, dr=get_profile(args.dr), p_tx_dbm=args.ptx)
        timeline = build_state_timeline(
            tx, args.period * 1000.0, cal, HopGrid(n_channels=args.channels, seed=args.seed)
        )

        if args.format == "json":
            text = json.dumps(timeline.to_dict(), indent=2) + "\n"
        else:
            text = render_csv(timeline.vertex_rows(), VERTEX_COLUMNS)
        emit(text, args.out)

    except LrFhssError as e:
        _fail(str(e), args.verbose)


def cmd_profiles(args):
    """Handle the profiles command - list supported data rates."""
    profiles = list_profiles()
    print(f"LR-FHSS data rates ({len(profiles)}):")
    print()
    for profile in profiles:
        alias = "" if profile.id is profile.canonical else f" (alias of {profile.canonical.value})"
        print(f"  {profile.id.value:7s} CR={str(profile.code_rate):4s} N_H={profile.header_replicas} "
              f"M={model_i_divisor(profile)}{alias}")


def _add_dr(parser: argparse.ArgumentParser, **kwargs):
    parser.add_argument("--dr", type=str.upper, choices=DR_CHOICES, **kwargs)


def _add_calibration(parser: argparse.ArgumentParser):
    parser.add_argument("--cal", help="Calibration JSON (default: $LRFHSS_CAL or bundled table4.json)")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all sub-commands."""
    parser = argparse.ArgumentParser(
        prog="lrfhss",
        description="LR-FHSS Time-on-Air, current consumption and battery lifetime models",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging")

    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    # toa command
    toa_parser = subparsers.add_parser("toa", help="ToA of one packet under all three models")
    _add_dr(toa_parser, default="DR8", help="Data rate (default: DR8)")
    toa_parser.add_argument("--payload", required=True, type=payload_bytes, help="Payload in bytes (1..255)")
    toa_parser.add_argument("--tt", type=non_negative_float, default=DEFAULT_TRANSITION_TIME_MS,
                            help="Transition time in ms (default: 0.61)")
    toa_parser.add_argument("--format", choices=["text", "json"], default="text")
    toa_parser.set_defaults(func=cmd_toa)

    # compare command
    compare_parser = subparsers.add_parser("compare", help="Compare ToA models over a payload range (CSV)")
    _add_dr(compare_parser, default="DR8", help="Data rate (default: DR8)")
    compare_parser.add_argument("--from", dest="from_", type=payload_bytes, default=10, help="First payload (default: 10)")
    compare_parser.add_argument("--to", type=payload_bytes, default=65, help="Last payload (default: 65)")
    compare_parser.add_argument("--tt", type=non_negative_float, default=DEFAULT_TRANSITION_TIME_MS,
                                help="Transition time in ms (default: 0.61)")
    compare_parser.add_argument("--out", help="Output file (default: stdout)")
    compare_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    compare_parser.set_defaults(func=cmd_compare)

    # energy command
    energy_parser = subparsers.add_parser("energy", help="Average current and lifetime of one configuration")
    _add_calibration(energy_parser)
    _add_dr(energy_parser, default="DR8", help="Data rate (default: DR8)")
    energy_parser.add_argument("--payload", required=True, type=payload_bytes, help="Payload in bytes (1..255)")
    energy_parser.add_argument("--ptx", required=True, type=finite_float, help="Transmit power in dBm")
    energy_parser.add_argument("--period", required=True, type=positive_float, help="Notification period in seconds")
    energy_parser.add_argument("--battery", type=positive_float, help="Battery capacity in mAh")
    energy_parser.add_argument("--format", choices=["text", "json"], default="text")
    energy_parser.set_defaults(func=cmd_energy)

    # sweep command
    sweep_parser = subparsers.add_parser("sweep", help="Sweep p_tx, payload or notification period (CSV)")
    _add_calibration(sweep_parser)
    _add_dr(sweep_parser, action="append", help="Data rate; repeat for several (default: DR8)")
    sweep_parser.add_argument("--dimension", required=True, choices=[d.value for d in SweepDimension])
    sweep_parser.add_argument("--start", required=True, type=finite_float, help="First sample")
    sweep_parser.add_argument("--stop", required=True, type=finite_float, help="Last sample (inclusive)")
    sweep_parser.add_argument("--step", type=positive_float, default=1.0, help="Sample spacing (default: 1)")
    sweep_parser.add_argument("--payload", type=payload_bytes, default=10, help="Payload in bytes (default: 10)")
    sweep_parser.add_argument("--ptx", type=finite_float, default=14.0, help="Transmit power in dBm (default: 14)")
    sweep_parser.add_argument("--period", type=positive_float, default=900.0,
                              help="Notification period in seconds (default: 900)")
    sweep_parser.add_argument("--battery", type=positive_float, help="Battery capacity in mAh")
    sweep_parser.add_argument("--workers", type=int, default=1, help="Threads for row evaluation")
    sweep_parser.add_argument("--out", help="Output file (default: stdout)")
    sweep_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    sweep_parser.set_defaults(func=cmd_sweep)

    # frame command
    frame_parser = subparsers.add_parser("frame", help="Dump a frame plan with hop channels")
    _add_dr(frame_parser, default="DR8", help="Data rate (default: DR8)")
    frame_parser.add_argument("--payload", required=True, type=payload_bytes, help="Payload in bytes (1..255)")
    frame_parser.add_argument("--channels", type=channel_count, default=DEFAULT_CHANNELS,
                              help=f"OBW channels in the hop grid (default: {DEFAULT_CHANNELS})")
    frame_parser.add_argument("--seed", type=seed_u64, default=0, help="Hop generator seed (default: 0)")
    frame_parser.add_argument("--tt", type=non_negative_float, default=DEFAULT_TRANSITION_TIME_MS,
                              help="Transition time in ms used for block start times")
    frame_parser.add_argument("--out", help="Output file (default: stdout)")
    frame_parser.add_argument("--format", choices=["json", "csv"], default="json")
    frame_parser.set_defaults(func=cmd_frame)

    # timeline command
    timeline_parser = subparsers.add_parser("timeline", help="Current profile of one notification period")
    _add_calibration(timeline_parser)
    _add_dr(timeline_parser, default="DR8", help="Data rate (default: DR8)")
    timeline_parser.add_argument("--payload", required=True, type=payload_bytes, help="Payload in bytes (1..255)")
    timeline_parser.add_argument("--ptx", required=True, type=finite_float, help="Transmit power in dBm")
    timeline_parser.add_argument("--period", required=True, type=positive_float,
                                 help="Notification period in seconds")
    timeline_parser.add_argument("--channels", type=channel_count, default=DEFAULT_CHANNELS)
    timeline_parser.add_argument("--seed", type=seed_u64, default=0)
    timeline_parser.add_argument("--out", help="Output file (default: stdout)")
    timeline_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    timeline_parser.set_defaults(func=cmd_timeline)

    # profiles command
    profiles_parser = subparsers.add_parser("profiles", help="List supported data rates")
    profiles_parser.set_defaults(func=cmd_profiles)

    return parser


def _check_ranges(parser: argparse.ArgumentParser, args):
    """Reject reversed ranges as usage errors."""
    if args.command == "compare" and args.to < args.from_:
        parser.error(f"--to ({args.to}) must not be below --from ({args.from_})")
    if args.command == "sweep" and args.stop < args.start:
        parser.error(f"--stop ({args.stop}) must not be below --start ({args.start})")


def main(argv: list[str] | None = None):
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.verbose)

    if not args.command:
        parser.print_help()
        sys.exit(2)
    _check_ranges(parser, args)

    args.func(args)


if __name__ == "__main__":
    main()
