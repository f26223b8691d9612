"""Command-line front end.

Five subcommands share one set of flags::

    barycenters analyze   --rho-over-4pi 9/8 --alpha -1/2,-1/2
    barycenters scan      --rho-max 5 --alpha -1/2
    barycenters graph     --rho-over-4pi 9/8 --alpha -1/2,-1/2 --dot sgraph.gv
    barycenters singular  --rho-over-4pi 2 --alpha -1/2,-1/3
    barycenters threshold --rho-over-4pi 3/2 --alpha -1/2 --index 1

Exit codes: 0 success, 2 singular rho, 3 invalid input, 4 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import analysis, strata
from .core import Params, format_rational, is_singular, normalize_params, parse_rational, singular_values
from .errors import BarycenterError, InvalidInput, SingularRho, SizeLimit, ThresholdOutOfRange

EXIT_OK = 0
EXIT_SINGULAR = 2
EXIT_INVALID = 3
EXIT_SIZE = 4

COMMANDS = ("analyze", "scan", "graph", "singular", "threshold")
_VALUE_FLAGS = ("--rho-over-4pi", "--rho-max", "--alpha", "--index", "--rho")

UNITS_NOTE = (
    "rho is given in units of 4*pi: pass --rho-over-4pi p/q for rho = 4*pi * p/q "
    "(absolute rho would need pi numerically and break exact decisions)"
)


class UsageError(InvalidInput):
    pass


@dataclass
class RunConfig:
    command: str
    r: Optional[Fraction] = None
    alphas: list = field(default_factory=list)
    r_max: Optional[Fraction] = None
    index: Optional[int] = None
    output_format: str = "text"
    output_path: Optional[str] = None
    dot_path: Optional[str] = None
    size_cap: int = strata.DEFAULT_CAP


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational_arg(flag):
    def parse(text):
        if "pi" in text.lower():
            raise UsageError(f"{flag}: {text!r} is not rational; {UNITS_NOTE}")
        try:
            return parse_rational(text)
        except InvalidInput as exc:
            raise UsageError(f"{flag}: {exc}") from None
    return parse


def _alpha_list(text):
    if not text.strip():
        return []
    return [_rational_arg("--alpha")(part) for part in text.split(",")]


def _build_parser():
    parser = _Parser(prog="barycenters", description="Classify spaces of formal barycenters exactly.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    helps = {
        "analyze": "full report for one parameter set",
        "scan": "verdict on every interval between singular values below --rho-max",
        "graph": "write the S-graph in Graphviz format",
        "singular": "list singular values up to --rho-over-4pi",
        "threshold": "weight threshold for the point --index",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("--rho-over-4pi", dest="r", type=str, default=None,
                       help="rho/(4*pi) as p/q or a finite decimal")
        p.add_argument("--rho-max", dest="r_max", type=str, default=None,
                       help="upper end of the scan, in units of 4*pi")
        p.add_argument("--alpha", type=str, default="",
                       help="comma-separated cone weights in (-1, 0)")
        p.add_argument("--index", type=int, default=None,
                       help="1-based user index (threshold: varied weight; singular: excluded weight)")
        p.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
        p.add_argument("--out", dest="output_path", default=None, help="write the report here")
        p.add_argument("--dot", dest="dot_path", default=None, help="graph: Graphviz output file")
        p.add_argument("--cap", dest="size_cap", type=int, default=strata.DEFAULT_CAP,
                       help="maximum number of admissible strata")
        p.add_argument("--rho", dest="absolute_rho", default=None, help=argparse.SUPPRESS)
    return parser


def _glue_values(argv):
    # "--alpha -1/2" would read as an option; glue value flags to their argument
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def parse_args(argv) -> RunConfig:
    ns = _build_parser().parse_args(_glue_values(list(argv)))
    if ns.absolute_rho is not None:
        raise UsageError(f"--rho: absolute rho is not accepted; {UNITS_NOTE}")
    cfg = RunConfig(
        command=ns.command,
        alphas=_alpha_list(ns.alpha),
        index=ns.index,
        output_format=ns.output_format,
        output_path=ns.output_path,
        dot_path=ns.dot_path,
        size_cap=ns.size_cap,
    )
    if ns.command == "scan":
        if ns.r_max is None:
            raise UsageError("--rho-max is required for scan")
        cfg.r_max = _rational_arg("--rho-max")(ns.r_max)
        if cfg.r_max <= 0:
            raise UsageError("--rho-max must be positive")
    else:
        if ns.r is None:
            raise UsageError(f"--rho-over-4pi is required for {ns.command}; {UNITS_NOTE}")
        cfg.r = _rational_arg("--rho-over-4pi")(ns.r)
    if ns.command == "threshold" and ns.index is None:
        raise UsageError("--index is required for threshold")
    if cfg.index is not None and not 1 <= cfg.index <= len(cfg.alphas):
        raise UsageError(f"--index {cfg.index} outside 1..{len(cfg.alphas)}")
    if cfg.size_cap < 1:
        raise UsageError("--cap must be positive")
    return cfg


# ---------------------------------------------------------------- reports

def _q(x):
    return format_rational(x)


def _approx(x):
    return f"{float(x):.6g}~"


def _user_label(params, lab):
    return str(params.label_to_user(lab))


def _params_doc(params: Params):
    return {
        "rho_over_4pi": _q(params.r),
        "alphas": [_q(a) for a in params.user_alphas],
        "alphas_sorted": [_q(a) for a in params.alphas],
        "sorted_to_user": list(params.permutation),
    }


def _params_text(params: Params):
    lines = [f"rho = 4*pi * {_q(params.r)}"]
    if params.m:
        lines.append("weights (user order): " + ", ".join(
            f"alpha_{i} = {_q(a)}" for i, a in enumerate(params.user_alphas, 1)))
        lines.append("weights (sorted order, debug): " + ", ".join(
            f"[{i}] {_q(a)} (user {params.to_user(i)})" for i, a in enumerate(params.alphas, 1)))
    else:
        lines.append("weights: none (regular equation)")
    return lines


def analyze_document(params: Params, cap: int = strata.DEFAULT_CAP) -> dict:
    """Structured analyze report; raises :class:`SingularRho` at singular values."""
    if is_singular(params):
        raise SingularRho(f"rho is a singular value (rho/(4*pi) = {_q(params.r)})")
    nodes = strata.enumerate_strata(params, cap)
    dec = strata.maximal_strata(params, cap)
    verdict = analysis.solvability_verdict(params, cap)
    empty = not dec.maximal
    prof = verdict.stability
    return {
        "params": _params_doc(params),
        "strata_count": len(nodes),
        "maximal": [_user_label(params, lab) for lab in dec],
        "maximal_sorted_indices": [str(lab) for lab in dec],
        "stability": None if prof is None else {
            "user": list(prof.user), "sorted": list(prof.sorted)},
        "contractible": None if empty else analysis.is_contractible(params, cap),
        "witnesses": [
            {"label": _user_label(params, w.label), "label_sorted_indices": str(w.label),
             "degree": w.degree, "case": str(w.case)}
            for w in verdict.witnesses
        ],
        "verdict": {"kind": str(verdict.kind), "advisory": verdict.advisory},
        "citations": list(verdict.citations),
    }


def _yes_no(flag):
    return {True: "yes", False: "no", None: "n/a (empty space)"}[flag]


def analyze_text(doc: dict) -> str:
    p = doc["params"]
    params = normalize_params(parse_rational(p["rho_over_4pi"]), [parse_rational(a) for a in p["alphas"]])
    lines = _params_text(params)
    lines.append(f"admissible strata: {doc['strata_count']}")
    lines.append("maximal strata (user indices): " + (", ".join(doc["maximal"]) or "none"))
    lines.append("maximal strata (sorted indices, debug): " + (", ".join(doc["maximal_sorted_indices"]) or "none"))
    if doc["stability"] is not None:
        lines.append("p_j-stability (user order): " + ", ".join(
            f"p_{i} {_yes_no(s)}" for i, s in enumerate(doc["stability"]["user"], 1)))
    lines.append(f"contractible: {_yes_no(doc['contractible'])}")
    if doc["witnesses"]:
        lines.append("non-contractibility witnesses:")
        for w in doc["witnesses"]:
            lines.append(f"  {w['label']}  reduced Z2-homology non-zero in degree {w['degree']}  ({w['case']})")
    lines.append(f"verdict: {doc['verdict']['kind']}")
    if doc["verdict"]["advisory"]:
        lines.append(f"advisory: {doc['verdict']['advisory']}")
    lines.append("based on:")
    lines += [f"  - {c}" for c in doc["citations"]]
    return "\n".join(lines) + "\n"


def _verdict_doc(params, v):
    return {
        "kind": str(v.kind),
        "witnesses": [{"label": _user_label(params, w.label), "degree": w.degree, "case": str(w.case)}
                      for w in v.witnesses],
        "stability": None if v.stability is None else list(v.stability.user),
    }


def scan_document(alphas, r_max, cap=strata.DEFAULT_CAP) -> dict:
    params = normalize_params(r_max, alphas)
    rows = analysis.scan_rho(alphas, r_max, cap)
    return {
        "alphas": [_q(a) for a in params.user_alphas],
        "rho_max_over_4pi": _q(r_max),
        "intervals": [
            {"lo": _q(row.lo), "hi": _q(row.hi), **_verdict_doc(params, row.verdict)}
            for row in rows
        ],
    }


def scan_text(doc) -> str:
    lines = [f"scan of rho/(4*pi) over (0, {doc['rho_max_over_4pi']}), weights "
             f"[{', '.join(doc['alphas'])}]"]
    width = max(len(f"({r['lo']}, {r['hi']})") for r in doc["intervals"])
    for row in doc["intervals"]:
        span = f"({row['lo']}, {row['hi']})".ljust(width)
        wit = "; ".join(f"{w['label']} deg {w['degree']}" for w in row["witnesses"])
        lines.append(f"{span}  {row['kind']:<24}  {wit}".rstrip())
    return "\n".join(lines) + "\n"


def _emit(cfg: RunConfig, text: str, out) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def run(cfg: RunConfig, out=None) -> int:
    """Execute a parsed command; library errors propagate to :func:`main`."""
    out = sys.stdout if out is None else out
    structured = cfg.output_format == "json"

    if cfg.command == "scan":
        doc = scan_document(cfg.alphas, cfg.r_max, cfg.size_cap)
        _emit(cfg, _dump(doc) if structured else scan_text(doc), out)
        return EXIT_OK

    if cfg.command == "singular":
        params = normalize_params(cfg.r, cfg.alphas)
        exclude = None if cfg.index is None else params.to_sorted(cfg.index)
        values = singular_values(params, exclude, cfg.r)
        if structured:
            text = _dump({"alphas": [_q(a) for a in params.user_alphas], "upper": _q(cfg.r),
                          "excluded_index": cfg.index, "values": [_q(v) for v in values]})
        else:
            text = ", ".join(_q(v) for v in values) + "\n"
        _emit(cfg, text, out)
        return EXIT_OK

    if cfg.command == "threshold":
        j = cfg.index
        others = cfg.alphas[: j - 1] + cfg.alphas[j:]
        current = cfg.alphas[j - 1]
        normalize_params(cfg.r, cfg.alphas)
        try:
            value, clamped = analysis.alpha_threshold(others, cfg.r), False
        except ThresholdOutOfRange as exc:
            value, clamped = Fraction(exc.clamped), True
        doc = {
            "rho_over_4pi": _q(cfg.r),
            "index": j,
            "other_alphas": [_q(a) for a in others],
            "alpha_threshold": _q(value),
            "alpha_threshold_approx": _approx(value),
            "clamped": clamped,
            "current_alpha": _q(current),
            "current_below_threshold": current < value,
        }
        if structured:
            text = _dump(doc)
        else:
            text = (
                f"rho = 4*pi * {_q(cfg.r)}; varying alpha_{j} with the other weights fixed\n"
                f"alpha* = {_q(value)}  (decimal approximation {_approx(value)})\n"
                f"for alpha_{j} < alpha* the space is p_{j}-stable, hence contractible\n"
                f"current alpha_{j} = {_q(current)}: "
                f"{'below' if current < value else 'not below'} the threshold\n"
            )
        _emit(cfg, text, out)
        return EXIT_OK

    params = normalize_params(cfg.r, cfg.alphas)

    if cfg.command == "graph":
        if is_singular(params):
            raise SingularRho(f"rho is a singular value (rho/(4*pi) = {_q(params.r)})")
        g = strata.s_graph(params, cfg.size_cap)
        dot = g.to_dot(params.permutation)
        if cfg.dot_path:
            with open(cfg.dot_path, "w", encoding="utf-8") as fh:
                fh.write(dot)
        if structured:
            text = _dump({
                "params": _params_doc(params),
                "nodes": [_user_label(params, n) for n in g.nodes],
                "edges": [[_user_label(params, a), _user_label(params, b)] for a, b in g.edges],
            })
        elif cfg.dot_path:
            text = f"S-graph: {len(g.nodes)} nodes, {len(g.edges)} edges written to {cfg.dot_path}\n"
        else:
            text = dot
        _emit(cfg, text, out)
        return EXIT_OK

    doc = analyze_document(params, cfg.size_cap)
    _emit(cfg, _dump(doc) if structured else analyze_text(doc), out)
    return EXIT_OK


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(parse_args(argv))
    except SingularRho as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except SizeLimit as exc:
        print(f"error: size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (InvalidInput, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BarycenterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
