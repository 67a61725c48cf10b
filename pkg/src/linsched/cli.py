"""Command-line frontend: file-in/file-out pipelines over the library.

Exit codes: 0 success, 1 negative domain verdict (infeasible schedule,
violated bound, two-slot answer "no"), 2 usage or input errors.  All output
is deterministic given identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, gen, hardness, oracle, scheduler, sinr
from .model import FormatError, Instance, load_instance, load_schedule, save_instance, save_schedule, validate_instance


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _load_checked_instance(path: str, check_triangle: bool) -> Instance:
    inst = load_instance(_read(path))
    diags = validate_instance(inst, check_triangle=check_triangle)
    errors = [d for d in diags if d.severity == "error"]
    for d in diags:
        if d.severity == "warning":
            print(f"warning [{d.code}]: {d.message}", file=sys.stderr)
    if errors:
        raise FormatError(
            f"instance {path} is invalid: "
            + "; ".join(f"[{d.code}] {d.message}" for d in errors)
        )
    return inst


def _parse_c(text: str, inst: Instance) -> tuple[scheduler.SchedulerConfig, bool]:
    """Returns (config, auto_mode)."""
    if text == "auto":
        return scheduler.SchedulerConfig.auto(inst.params), True
    try:
        value = float(text)
    except ValueError:
        raise FormatError(f"--c must be 'auto' or a number, got {text!r}") from None
    return scheduler.SchedulerConfig(c=value), False


def _cmd_gen(args: argparse.Namespace) -> int:
    params_kwargs = dict(
        alpha=args.alpha, beta=args.beta, noise=args.noise, c_l=args.cl,
        K=args.K, m=args.m,
    )
    params = gen.PhysicalParams(**params_kwargs)
    if args.family == "random-euclidean":
        spec = gen.GenSpec(
            n=args.n, params=params, box=args.box, lmin=args.lmin,
            lmax=args.lmax, seed=args.seed,
        )
        inst = gen.random_euclidean(spec)
    elif args.family == "collocated":
        inst = gen.collocated(args.n, params)
    elif args.family == "spread":
        if args.separation is None:
            raise FormatError("--separation is required for the spread family")
        inst = gen.spread(args.n, args.separation, params)
    else:  # pragma: no cover - argparse restricts choices
        raise FormatError(f"unknown family {args.family!r}")
    _write(args.out, save_instance(inst))
    return 0


def _cmd_schedule(args: argparse.Namespace) -> int:
    inst = _load_checked_instance(args.infile, not args.no_triangle_check)
    cfg, auto = _parse_c(args.c, inst)
    sched = scheduler.greedy_schedule(inst, cfg)
    _write(args.out, save_schedule(sched))
    report = bounds.bound_report(inst, sched, cfg)
    feasible: bool | None = None
    if not auto:
        feasible = sinr.schedule_feasible(sched, inst).feasible
    _emit(
        {
            "c": cfg.c,
            "c_mode": "auto" if auto else "manual",
            "schedule_length": report.schedule_length,
            "I_value": report.I_value,
            "upper_bound": report.upper_bound,
            "bound_holds": report.bound_holds,
            "feasible": feasible,
        }
    )
    if feasible is False:
        return 1
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = _load_checked_instance(args.infile, not args.no_triangle_check)
    sched = load_schedule(_read(args.sched))
    report = sinr.schedule_feasible(sched, inst)
    _emit(
        {
            "verdict": report.verdict,
            "partition_problems": list(report.partition_problems),
            "first_infeasible_slot": report.first_infeasible_slot(),
            "slots": [
                {
                    "feasible": r.feasible,
                    "worst_link": r.worst_link,
                    "worst_margin": r.worst_margin,
                }
                for r in report.slot_results
            ],
        }
    )
    return 0 if report.feasible else 1


def _cmd_bound(args: argparse.Namespace) -> int:
    inst = _load_checked_instance(args.infile, not args.no_triangle_check)
    sched = load_schedule(_read(args.sched))
    cfg, _ = _parse_c(args.c, inst)
    report = bounds.bound_report(inst, sched, cfg)
    _emit(
        {
            "c": cfg.c,
            "schedule_length": report.schedule_length,
            "I_value": report.I_value,
            "argmax_node": report.argmax_node,
            "upper_bound": report.upper_bound,
            "bound_holds": report.bound_holds,
        }
    )
    return 0 if report.bound_holds else 1


def _cmd_exact(args: argparse.Namespace) -> int:
    inst = _load_checked_instance(args.infile, not args.no_triangle_check)
    sched = oracle.optimal_schedule(inst, cap=args.cap)
    _write(args.out, save_schedule(sched))
    _emit({"optimal_length": sched.length})
    return 0


def _cmd_decide2(args: argparse.Namespace) -> int:
    inst = _load_checked_instance(args.infile, not args.no_triangle_check)
    answer = oracle.two_slot_decision(inst, cap=args.cap)
    _emit({"two_slot_schedulable": answer})
    return 0 if answer else 1


def _cmd_reduce(args: argparse.Namespace) -> int:
    try:
        values = [int(x) for x in args.partition.split(",") if x.strip() != ""]
    except ValueError:
        raise FormatError(
            f"--partition must be comma-separated integers, got {args.partition!r}"
        ) from None
    art = hardness.build_reduction(values, alpha=args.alpha, beta=args.beta)
    _write(args.out, save_instance(art.instance))
    report = hardness.verify_reduction(art, cap=args.cap)
    sidecar = {
        "A": list(art.original_a),
        "B": list(art.padded_b),
        "S_of_B": art.sum_b,
        "node_map": art.node_map,
        "report": report.to_dict(),
    }
    sidecar_path = Path(args.out).with_suffix(".verify.json")
    _write(str(sidecar_path), json.dumps(sidecar, sort_keys=True, indent=2) + "\n")
    _emit(report.to_dict())
    return 0


def _cmd_constants(args: argparse.Namespace) -> int:
    thr = 1.0 / args.beta - args.noise / args.cl
    if thr <= 0:
        raise FormatError("c_l must exceed beta*noise for any slot to be feasible")
    c0 = scheduler.compute_c0(args.alpha, args.K, args.m)
    c = scheduler.compute_c(args.alpha, 1.0 / thr, args.K, args.m)
    _emit({"c0": c0, "c": c})
    return 0


def _add_instance_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", required=True, help="instance file")
    p.add_argument(
        "--no-triangle-check",
        action="store_true",
        help="skip the cubic triangle-inequality validation on matrix metrics",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linsched",
        description="SINR link scheduling with linear power assignment",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a deterministic instance file")
    p.add_argument(
        "--family",
        required=True,
        choices=["random-euclidean", "collocated", "spread"],
    )
    p.add_argument("--n", type=int, required=True, help="number of links")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--cl", type=float, default=1.0, help="linear power coefficient")
    p.add_argument("--K", type=float, default=1.0)
    p.add_argument("--m", type=float, default=2.0)
    p.add_argument("--box", type=float, default=100.0)
    p.add_argument("--lmin", type=float, default=1.0)
    p.add_argument("--lmax", type=float, default=2.0)
    p.add_argument("--separation", type=float, default=None, help="spread family only")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("schedule", help="run the greedy scheduler")
    _add_instance_arg(p)
    p.add_argument("--c", default="auto", help="'auto' or a separation constant > 1")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_schedule)

    p = sub.add_parser("verify", help="check a schedule for SINR feasibility")
    _add_instance_arg(p)
    p.add_argument("--sched", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bound", help="schedule length vs interference bound")
    _add_instance_arg(p)
    p.add_argument("--sched", required=True)
    p.add_argument("--c", default="auto")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("exact", help="exact minimum-length schedule (small n)")
    _add_instance_arg(p)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("decide2", help="can the links fit in two slots?")
    _add_instance_arg(p)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=_cmd_decide2)

    p = sub.add_parser("reduce", help="build an adversarial instance from PARTITION")
    p.add_argument("--partition", required=True, help="comma-separated positive ints")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("constants", help="closed-form scheduler constants")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--K", type=float, default=1.0)
    p.add_argument("--m", type=float, default=2.0)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--cl", type=float, default=1.0)
    p.set_defaults(func=_cmd_constants)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
