"""Command-line front end: simulate, sweep, reproduce, analytics."""

import argparse
import dataclasses
import json
import sys

from ..analytics import (JobClassSpec, UtilizationSample, additive_utilization,
                         class_utilization, domination_factor,
                         interval_contains, mg1_wait, one_sample_t_summary,
                         rho_ap, theorem_c1_check, theorem_c2_interval)
from ..model import run_replication, simulate
from ..model.facility import OUTCOME_NAMES
from ..model.simulate import DEFAULT_SEED
from .export import FORMATS, export, format_number, render
from .reproduce import EXHIBITS, check_table, reproduce
from .runner import ResultTable, TableRow, run_sweep
from .scenario import ScenarioError, parse_scenario

FAST_HORIZON = (185, 60)
FAST_REPS = 20

PATIENT_EVENTS = ("queue", "seize", "release", "renege")


def _add_output_flags(parser):
    parser.add_argument("--format", choices=FORMATS, default="csv",
                        help="export format (default csv)")
    parser.add_argument("--out", metavar="PATH",
                        help="write the result table to this file")


def _add_run_flags(parser):
    parser.add_argument("--seed", type=int, default=None,
                        help="base random seed")
    parser.add_argument("--reps", type=int, default=None,
                        help="replication count override")
    parser.add_argument("--fast", action="store_true",
                        help="reduced budget: 20 reps of 185/60 days")


def _apply_fast(spec, args):
    """Scenario with the budget flags folded in."""
    changes = {}
    if args.fast:
        changes["horizon_days"], changes["warmup_days"] = FAST_HORIZON
        changes["n_replications"] = FAST_REPS
    if args.reps is not None:
        changes["n_replications"] = args.reps
    if args.seed is not None:
        changes["base_seed"] = args.seed
    return dataclasses.replace(spec, **changes) if changes else spec


def _emit(table, args, default_out=None):
    out = args.out or default_out
    if out:
        export(table, fmt=args.format, out=out)
        print("wrote %s" % out)
    else:
        sys.stdout.write(render(table, args.format))


def _write_trace(config, spec, path):
    result = run_replication(config, replication=0,
                             base_seed=spec.base_seed,
                             horizon_days=spec.horizon_days,
                             warmup_days=spec.warmup_days, keep_trace=True)
    with open(path, "w") as handle:
        handle.write("time,patient,class,resource,event\n")
        for time, kind, where, what in result.trace:
            if kind not in PATIENT_EVENTS:
                continue
            cls = str(what).split("-")[0]
            handle.write("%.4f,%s,%s,%s,%s\n"
                         % (time, what, cls, where, kind))
    print("wrote %s" % path)


def _cmd_simulate(args):
    spec = _apply_fast(parse_scenario(args.scenario), args)
    if spec.sweep:
        raise ScenarioError(
            "scenario declares sweep axes; use the sweep verb")
    config = spec.base_configuration()
    report = simulate(config, n_replications=spec.n_replications,
                      horizon_days=spec.horizon_days,
                      warmup_days=spec.warmup_days,
                      base_seed=spec.base_seed)
    table = ResultTable(
        title=spec.label or ("setup-%d run" % spec.config_id),
        axes=(),
        outcomes=OUTCOME_NAMES,
        rows=[TableRow(key=(), mean=dict(report.mean), sd=dict(report.sd),
                       n_replications=spec.n_replications,
                       base_seed=spec.base_seed)],
        orient="outcomes_as_rows",
    )
    if args.trace:
        _write_trace(config, spec, args.trace)
    _emit(table, args, default_out=spec.output)
    return 0


def _cmd_sweep(args):
    spec = _apply_fast(parse_scenario(args.scenario), args)
    table = run_sweep(spec)
    _emit(table, args, default_out=spec.output)
    return 0


def _cmd_reproduce(args):
    table = reproduce(args.exhibit, reps=args.reps, fast=args.fast,
                      base_seed=args.seed if args.seed is not None
                      else DEFAULT_SEED)
    report = check_table(table, args.exhibit, fast=args.fast)
    for r in report.results:
        status = "INFO" if not r.binding else ("PASS" if r.passed else "FAIL")
        tol = "" if r.tolerance is None else " tol=%s" % format_number(
            r.tolerance)
        if r.decimals is not None:
            tol = " exact to %d dp" % r.decimals
        print("%s %s %s %s: got %s, reference %s%s"
              % (status, r.exhibit, r.row, r.column,
                 format_number(r.observed), format_number(r.target), tol))
    for description, ok in report.shape_checks:
        print("%s %s: %s" % ("PASS" if ok else "FAIL", args.exhibit,
                             description))
    if args.out:
        export(table, fmt=args.format, out=args.out)
        print("wrote %s" % args.out)
    if args.check and not report.ok:
        return 1
    return 0


def analyze_classes(data):
    """Closed-form estimates for a job-class file; first class dominates."""
    if not isinstance(data, dict) or "classes" not in data:
        raise ValueError("classes file needs a top-level 'classes' list")
    servers = data.get("servers", 1)
    raw = data["classes"]
    if not isinstance(raw, list) or not raw:
        raise ValueError("'classes' must be a nonempty list")

    shared = []
    unshared = []
    for i, entry in enumerate(raw):
        try:
            name = entry.get("name", "class-%d" % (i + 1))
            rate = float(entry["arrival_rate_per_min"])
            mean = float(entry["service_mean_min"])
        except (KeyError, TypeError, ValueError):
            raise ValueError(
                "classes[%d]: needs numeric arrival_rate_per_min "
                "and service_mean_min" % i)
        share = float(entry.get("window_share", 1.0))
        scv = entry.get("service_scv")
        variance = mean * mean * float(scv) if scv is not None else 0.0
        shared.append(JobClassSpec(arrival_rate=rate * share,
                                   service_mean=mean,
                                   service_variance=variance,
                                   servers=servers, name=name))
        unshared.append(JobClassSpec(arrival_rate=rate, service_mean=mean,
                                     service_variance=variance,
                                     servers=servers, name=name))

    result = {
        "per_class_utilization": {
            spec.name: class_utilization(spec) for spec in shared},
        "additive_utilization": additive_utilization(shared),
        "single_class_utilization": class_utilization(shared[0]),
        "setup_augmented_utilization": rho_ap(unshared, 0),
        "dominant_share": domination_factor(shared, 0),
    }
    dominant = unshared[0]
    if dominant.service_variance and class_utilization(dominant) < 1.0:
        result["dominant_mg1_wait"] = mg1_wait(
            dominant.arrival_rate / servers, dominant.service_mean,
            dominant.service_variance)

    sample = data.get("sample")
    if sample is not None:
        s = UtilizationSample(rho_hat=float(sample["mean"]),
                              s_hat=float(sample["sd"]),
                              n=int(sample["n"]))
        t, p = one_sample_t_summary(s.rho_hat, s.s_hat, s.n,
                                    result["additive_utilization"])
        band = theorem_c2_interval(result["single_class_utilization"],
                                   result["setup_augmented_utilization"],
                                   s.half_width_ratio)
        result["t_statistic"] = t
        result["p_value"] = p
        result["threshold_check"] = theorem_c1_check(
            result["dominant_share"], s)
        result["interval_check"] = interval_contains(
            band, result["dominant_share"])
    return result


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten("%s.%s" % (prefix, key) if prefix else key,
                     value[key], rows)
    else:
        rows.append((prefix, value))


def _cmd_analytics(args):
    with open(args.classes) as handle:
        data = json.load(handle)
    result = analyze_classes(data)
    if args.format == "json":
        text = json.dumps(result, indent=2, sort_keys=True, default=str) + "\n"
    else:
        rows = []
        _flatten("", result, rows)
        lines = ["quantity,value"]
        for key, value in rows:
            if isinstance(value, float):
                value = format_number(value)
            lines.append("%s,%s" % (key, value))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
        print("wrote %s" % args.out)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="phcsim",
        description="Clinic capacity simulation and queueing estimates.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("simulate", help="run one scenario file")
    p.add_argument("scenario", help="scenario JSON file")
    _add_run_flags(p)
    _add_output_flags(p)
    p.add_argument("--trace", metavar="PATH",
                   help="write replication 0's patient event log here")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("sweep", help="run a scenario file's sweep grid")
    p.add_argument("scenario", help="scenario JSON file")
    _add_run_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("reproduce",
                       help="rerun a published exhibit and compare")
    p.add_argument("exhibit", choices=EXHIBITS)
    _add_run_flags(p)
    _add_output_flags(p)
    p.add_argument("--check", action="store_true",
                   help="exit nonzero if any binding comparison fails")
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("analytics",
                       help="closed-form estimates for a job-class file")
    p.add_argument("classes", help="job-class JSON file")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_analytics)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ScenarioError, ValueError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except OSError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
