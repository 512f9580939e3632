#!/usr/bin/env python3
"""
SchemeMate - Command Line

Parser and verb handlers. stdout carries machine output only (rainbow /
report JSON, tensor dumps, SRG lines, params tables); human summaries and
log records go to stderr.

Exit codes: 0 holds / ok, 1 property fails, 2 bad input, 3 internal failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from ..config import (
    APP_DESCRIPTION,
    APP_NAME,
    APP_VERSION,
    get_builder_config,
    get_setting,
    list_presets,
)
from ..core.errors import SchemeError, SpecInvalid, exit_code_for
from ..core.toolkit import SchemeToolkit
from ..core.verify import IntersectionTensor
from .formats import (
    closure_report_to_json,
    format_rainbow,
    properness_report_to_json,
    read_cover_spec,
    read_rainbow,
    read_wfdf_spec,
    srg_line,
    tensor_dump,
)
from .reporting import render_params, render_properness

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int = 0) -> None:
    """Send log records to stderr at the configured or requested level."""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, str(get_setting("log_level")).upper(), logging.WARNING)
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT, level=level, force=True)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schememate", description=APP_DESCRIPTION)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    build = verbs.add_parser("build", help="construct a scheme")
    builders = build.add_subparsers(dest="builder", required=True)

    wfdf = builders.add_parser("wfdf", help="WFDF rank-five Jordan scheme")
    wfdf.add_argument("--d", type=int)
    wfdf.add_argument("--diamond", choices=["cyclic", "random"], default="cyclic")
    wfdf.add_argument("--sigma", choices=["identity", "random"], default="identity")
    wfdf.add_argument("--theta", choices=["plus", "random"], default="plus")
    wfdf.add_argument("--seed", type=int)
    wfdf.add_argument("--spec", help="WfdfSpec JSON file (replaces the other options)")
    wfdf.add_argument("--out")

    cover = builders.add_parser("cover", help="cyclotomic base scheme")
    cover.add_argument("--q", type=int)
    cover.add_argument("--m", type=int)
    cover.add_argument("--spec", help="CoverSpec JSON file")
    cover.add_argument("--out")

    switch = builders.add_parser("switch", help="switched proper Jordan scheme")
    switch.add_argument("--q", type=int, required=True)
    switch.add_argument("--m", type=int, required=True)
    switch.add_argument("--fiber", type=int, default=0)
    switch.add_argument("--out")

    thin = builders.add_parser("thin", help="thin scheme of a cyclic group")
    thin.add_argument("--k", type=int, required=True)
    thin.add_argument("--out")

    example = builders.add_parser("example", help="named reference colouring")
    example.add_argument("--name", choices=list_presets(), required=True)
    example.add_argument("--out")

    verify = verbs.add_parser("verify", help="check the coherent / Jordan condition")
    verify.add_argument("--kind", choices=["cc", "jc", "fusion"], required=True)
    verify.add_argument("--dump", action="store_true", help="print the intersection tensor")
    verify.add_argument("path")

    closure = verbs.add_parser("closure", help="coherent or Jordan closure")
    closure.add_argument("--kind", choices=["wl", "jordan"], required=True)
    closure.add_argument("--out")
    closure.add_argument("--report", action="store_true")
    closure.add_argument("path")

    proper = verbs.add_parser("proper", help="decide properness of a Jordan scheme")
    proper.add_argument("--report", action="store_true")
    proper.add_argument("path")

    params = verbs.add_parser("params", help="structure report and intersection tensor")
    params.add_argument("path")

    srg = verbs.add_parser("srg", help="strongly regular parameters of one colour")
    srg.add_argument("--color", type=int, required=True)
    srg.add_argument("path")

    symmetrize = verbs.add_parser("symmetrize", help="merge every colour with its transpose")
    symmetrize.add_argument("--out")
    symmetrize.add_argument("path")
    return parser


def emit(text: str, out: Optional[str] = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def summarize(message: str) -> None:
    sys.stderr.write(message + "\n")


def handle_build(toolkit: SchemeToolkit, args: argparse.Namespace) -> int:
    if args.builder == "wfdf":
        if args.spec:
            options = {"spec": read_wfdf_spec(args.spec)}
        elif args.d is None:
            raise SpecInvalid("build wfdf needs --d or --spec")
        else:
            options = {
                "d": args.d,
                "diamond": args.diamond,
                "sigma": args.sigma,
                "theta": args.theta,
                "seed": args.seed,
            }
    elif args.builder == "cover":
        if args.spec:
            spec = read_cover_spec(args.spec)
            options = {"q": spec.q, "m": spec.m}
        elif args.q is None or args.m is None:
            raise SpecInvalid("build cover needs --q and --m, or --spec")
        else:
            options = {"q": args.q, "m": args.m}
    elif args.builder == "switch":
        options = {"q": args.q, "m": args.m, "fiber": args.fiber}
    elif args.builder == "thin":
        options = {"k": args.k}
    else:
        options = {"name": args.name}
    rainbow = toolkit.build(args.builder, **options)
    emit(format_rainbow(rainbow, args.out), args.out)
    family = get_builder_config(args.builder)["family"]
    summarize(f"built {args.builder} ({family}): order {rainbow.order}, rank {rainbow.rank}")
    return 0


def handle_verify(toolkit: SchemeToolkit, args: argparse.Namespace) -> int:
    rainbow = read_rainbow(args.path)
    holds, message, payload = toolkit.verify(rainbow, args.kind)
    summarize(message)
    if args.dump and holds and isinstance(payload, IntersectionTensor):
        emit(tensor_dump(payload))
    return 0 if holds else 1


def handle_closure(toolkit: SchemeToolkit, args: argparse.Namespace) -> int:
    rainbow = read_rainbow(args.path)
    report = toolkit.closure(rainbow, args.kind)
    if args.report:
        emit(closure_report_to_json(report), args.out)
    else:
        emit(format_rainbow(report.result, args.out), args.out)
    summarize(
        f"{args.kind} closure: rank {report.result.rank} after {report.rounds} rounds "
        f"(history {report.rank_history})"
    )
    return 0


def handle_proper(toolkit: SchemeToolkit, args: argparse.Namespace) -> int:
    report = toolkit.proper(read_rainbow(args.path))
    summarize(render_properness(report))
    if args.report:
        emit(properness_report_to_json(report))
    return 0 if report.proper else 1


def handle_params(toolkit: SchemeToolkit, args: argparse.Namespace) -> int:
    rainbow = read_rainbow(args.path)
    emit(render_params(rainbow, toolkit.params(rainbow)))
    return 0


def handle_srg(toolkit: SchemeToolkit, args: argparse.Namespace) -> int:
    params = toolkit.srg(read_rainbow(args.path), args.color)
    if params is None:
        summarize(f"colour {args.color} is not a strongly regular graph")
        return 1
    emit(srg_line(params))
    return 0


def handle_symmetrize(toolkit: SchemeToolkit, args: argparse.Namespace) -> int:
    rainbow = toolkit.symmetrize(read_rainbow(args.path))
    emit(format_rainbow(rainbow, args.out), args.out)
    summarize(f"symmetrized: rank {rainbow.rank}")
    return 0


HANDLERS: Dict[str, Callable[[SchemeToolkit, argparse.Namespace], int]] = {
    "build": handle_build,
    "verify": handle_verify,
    "closure": handle_closure,
    "proper": handle_proper,
    "params": handle_params,
    "srg": handle_srg,
    "symmetrize": handle_symmetrize,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Execute one command.

    Args:
        argv: arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging(args.verbose)
    toolkit = SchemeToolkit()
    try:
        return HANDLERS[args.verb](toolkit, args)
    except SchemeError as e:
        logger.error("%s: %s", e.kind, e)
        return exit_code_for(e)
    except Exception as e:
        logger.exception("internal failure")
        return exit_code_for(e)
