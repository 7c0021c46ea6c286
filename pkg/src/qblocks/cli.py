"""Command-line front end.

Every command prints one JSON envelope ``{command, version, inputs, results,
warnings}`` with sorted keys, except ``--dot`` output, which is Graphviz text.
Exit codes: 0 success, 1 verification mismatch, 2 bad input.

Weights are comma-separated rationals; a weight starting with ``-`` must
follow ``--`` so it is not read as an option.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .acceptance import Settings, run_all
from .bgg import UnsupportedBlock, block_report, projective_summary
from .characters import (
    WindowError,
    character_stats,
    completion_margin,
    euler_character,
    finite_euler_character,
)
from .quivers import (
    QuiverError,
    UnstableError,
    algebra_json,
    block_algebra,
    block_quiver,
    filtration_dot,
    quiver_dot,
)
from .weights import (
    SimpleLabel,
    Weight,
    WeightError,
    block_class,
    clifford_data,
    is_regular_dominant,
)
from .wild import representation_type

DEFAULTS = {"depth": 20, "bound": 8, "cap": 12}


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


def _env_int(name: str) -> int:
    raw = os.environ.get(f"QBLOCKS_{name.upper()}")
    if raw is None:
        return DEFAULTS[name]
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"QBLOCKS_{name.upper()} must be an integer, got {raw!r}") from None


def _weight(text: str) -> Weight:
    try:
        return Weight.parse(text)
    except WeightError as exc:
        raise InputError(str(exc)) from None


def _block(args: argparse.Namespace):
    lam = _weight(args.weight)
    try:
        return lam, block_class(lam, args.algebra)
    except (WeightError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _setting(args: argparse.Namespace, name: str) -> int:
    value = getattr(args, name, None)
    return _env_int(name) if value is None else value


def envelope(command: str, inputs: dict, results: Any, warnings: list[str]) -> str:
    doc = {"command": command, "version": __version__, "inputs": inputs,
           "results": results, "warnings": warnings}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# --- commands -----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> tuple[dict, Any, list[str]]:
    lam, block = _block(args)
    data = clifford_data(lam, args.algebra)
    results = {
        "blockClass": block.block_class.value,
        "block": block.name,
        "canonical": block.is_canonical,
        "centralWeight": str(block.wt),
        "regularDominant": is_regular_dominant(lam),
        "clifford": {"dimE": data.dim_e, "dimKernel": data.dim_kernel,
                     "simpleDim": str(data.simple_dim), "type": data.type.value},
    }
    return {"weight": lam.key(), "algebra": args.algebra}, results, []


def cmd_block(args: argparse.Namespace) -> tuple[dict, Any, list[str]]:
    lam, block = _block(args)
    bound = _setting(args, "bound")
    warnings = []
    results: dict[str, Any] = {
        "blockClass": block.block_class.value,
        "block": block.name,
        "algebra": block.algebra,
        "base": block.base.key(),
        "canonical": block.is_canonical,
        "weights": [w.key() for w in block.weights(bound)],
    }
    try:
        quiver, relations = block_quiver(block, bound)
        results["quiver"] = {
            "vertices": [str(v) for v in quiver.vertices],
            "arrows": len(quiver.arrows),
            "relations": sorted({r.text for r in relations.relations}),
            "convention": relations.convention,
        }
    except QuiverError as exc:
        warnings.append(f"no quiver: {exc}")
    return {"weight": lam.key(), "algebra": args.algebra, "bound": bound}, results, warnings


def cmd_euler(args: argparse.Namespace) -> tuple[dict, Any, list[str]]:
    lam = _weight(args.weight)
    depth = _setting(args, "depth")
    try:
        ch = euler_character(lam, args.algebra, depth)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    warnings = []
    results: dict[str, Any] = {
        "terms": [{"weight": Weight(k).key(), "even": v.even, "odd": v.odd}
                  for k, v in sorted(ch.certified_terms().items(), reverse=True)],
        "window": ch.window,
    }
    if completion_margin(lam, depth) >= 0:
        stats = character_stats(finite_euler_character(lam, args.algebra, depth))
        results["stats"] = {"dim": stats.total_dim, "sdim": stats.super_dim,
                            "snInvariant": stats.is_sn_invariant}
    else:
        warnings.append(f"window of depth {depth} does not cover the whole character")
    return {"weight": lam.key(), "algebra": args.algebra, "depth": depth}, results, warnings


def cmd_projectives(args: argparse.Namespace) -> tuple[dict, Any, list[str]]:
    lam, block = _block(args)
    bound = _setting(args, "bound")
    try:
        results = {"summary": projective_summary(block, bound), "report": block_report(block, bound)}
    except UnsupportedBlock as exc:
        raise InputError(str(exc)) from None
    return {"weight": lam.key(), "algebra": args.algebra, "bound": bound}, results, []


def _algebra(args: argparse.Namespace):
    lam, block = _block(args)
    bound, cap = _setting(args, "bound"), _setting(args, "cap")
    try:
        return lam, block, block_algebra(block, bound, cap)
    except QuiverError as exc:
        raise InputError(str(exc)) from None


def cmd_quiver(args: argparse.Namespace) -> tuple[dict, Any, list[str]] | str:
    lam, block, algebra = _algebra(args)
    if args.dot:
        return quiver_dot(algebra.quiver)
    inputs = {"weight": lam.key(), "algebra": args.algebra,
              "bound": _setting(args, "bound"), "cap": _setting(args, "cap")}
    return inputs, algebra_json(algebra), ["vertices beyond the interior are truncation-affected"]


def cmd_filtration(args: argparse.Namespace) -> tuple[dict, Any, list[str]] | str:
    lam, block, algebra = _algebra(args)
    target = SimpleLabel(_weight(args.vertex) if args.vertex else lam, args.shifted)
    quiver = algebra.quiver
    if target not in quiver.vertices:
        raise InputError(f"{target} is not a vertex of {block.name}")
    v = quiver.vertex(target)
    if args.dot:
        return filtration_dot(algebra, v)
    warnings = [] if quiver.is_interior(v) else [f"{target} is near the cutoff; layers untrusted"]
    filt = algebra.radical_filtration(v)
    inputs = {"weight": lam.key(), "algebra": args.algebra, "vertex": str(target),
              "bound": _setting(args, "bound"), "cap": _setting(args, "cap")}
    return inputs, {"vertex": str(target), "layers": filt.as_strings(), "sizes": filt.sizes()}, warnings


def cmd_wildness(args: argparse.Namespace) -> tuple[dict, Any, list[str]]:
    lam, block = _block(args)
    bound = max(_setting(args, "bound"), 6)
    try:
        verdict = representation_type(block, bound)
    except QuiverError as exc:
        raise InputError(str(exc)) from None
    return {"weight": lam.key(), "algebra": args.algebra, "cutoff": bound}, verdict.to_json(), []


def cmd_verify_all(args: argparse.Namespace) -> tuple[dict, Any, list[str]]:
    settings = Settings(_setting(args, "depth"), _setting(args, "bound"), _setting(args, "cap"))
    if settings.bound < 6:
        raise InputError("verify-all needs a bound of at least 6")
    results = [r.to_json() for r in run_all(settings)]
    inputs = {"depth": settings.depth, "bound": settings.bound, "cap": settings.cap}
    return inputs, {"ok": all(r["ok"] for r in results), "criteria": results}, []


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qblocks", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qblocks {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def weighted(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("weight", help="comma-separated rationals, e.g. 3/2,1/2,-1/2")
        p.add_argument("--algebra", choices=("q", "sq"), default="q")
        return p

    weighted("classify", "block class and Clifford data of a dominant weight")
    weighted("block", "block descriptor and quiver summary").add_argument("--bound", type=int)
    p = weighted("euler", "windowed Euler characteristic character")
    p.add_argument("--depth", type=int)
    weighted("projectives", "projective multiplicity table").add_argument("--bound", type=int)
    for name, help_text in (("quiver", "quiver with relations"),
                            ("filtration", "radical filtration of a projective")):
        p = weighted(name, help_text)
        p.add_argument("--bound", type=int, help="vertex cutoff")
        p.add_argument("--cap", type=int, help="path length cap")
        p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
        p.add_argument("-o", "--output", type=Path, help="write DOT to this file")
        if name == "filtration":
            p.add_argument("--vertex", help="weight of the projective (default: the weight)")
            p.add_argument("--shifted", action="store_true", help="use the parity-shifted vertex")
    weighted("wildness", "tame/wild verdict").add_argument("--bound", type=int, help="vertex cutoff")
    p = sub.add_parser("verify-all", help="run every acceptance check")
    p.add_argument("--bound", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--cap", type=int)
    return parser


COMMANDS = {
    "classify": cmd_classify, "block": cmd_block, "euler": cmd_euler,
    "projectives": cmd_projectives, "quiver": cmd_quiver, "filtration": cmd_filtration,
    "wildness": cmd_wildness, "verify-all": cmd_verify_all,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        out = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"qblocks {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (UnstableError, WindowError) as exc:
        print(f"qblocks {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(out, str):
        if getattr(args, "output", None):
            args.output.write_text(out)
        else:
            sys.stdout.write(out)
        return 0
    inputs, results, warnings = out
    sys.stdout.write(envelope(args.command, inputs, results, warnings))
    if args.command == "verify-all" and not results["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
