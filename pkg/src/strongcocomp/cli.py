"""Command-line interface.

The first line of standard output is always the verdict (``YES``/``NO``) for
``recognize``, ``certify`` and ``oracle``; exit status is 0 for YES, 1 for NO,
2 for malformed input and 3 when an oracle's size guard is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .avoidance import recognize_via_avoidance
from .certificates import (
    format_certificate,
    search_strong_ordering,
    verify_weak_edge_asteroid,
)
from .comparability import recognize_comparability, verify_transitive
from .constructions import (
    bipartite_double,
    certify_cocomparability_bigraph,
    close_both_sides,
    recognize_cocomparability_bigraph,
)
from .errors import GraphFormatError, InternalError, OracleGuardError
from .forcing import recognize_strong_cocomparability
from .graph_core import (
    complement_simple,
    decode_graph,
    encode_graph,
    is_bigraph_slash_free,
    is_slash_free_ordering,
)
from .oracle import (
    MODES,
    Report,
    crosscheck_enumerate,
    oracle_cocomp_bigraph,
    oracle_comparability,
    oracle_strong_cocomp,
)

CLASS_KIND = {
    "strong-cocomp": "reflexive",
    "cocomp": "reflexive",
    "comparability": "simple",
    "cocomp-bigraph": "bigraph",
}
OP_KIND = {"bipartite-double": "reflexive", "h-plus-plus": "bigraph", "complement": "reflexive"}
EXTENSION_KIND = {".g": "reflexive", ".sg": "simple", ".bg": "bigraph"}

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str, kind_flag: str | None, required: str):
    kind = kind_flag or EXTENSION_KIND.get(Path(path).suffix, required)
    if kind != required:
        raise InputError(f"{path}: this command needs a {required} graph, got kind {kind}")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    try:
        return decode_graph(text, kind)
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _verdict(yes: bool) -> int:
    print("YES" if yes else "NO")
    return EXIT_YES if yes else EXIT_NO


def cmd_recognize(args) -> int:
    g = _load(args.file, args.kind, CLASS_KIND[args.cls])
    if args.cls == "strong-cocomp":
        if args.route == "avoidance":
            return _verdict(recognize_via_avoidance(g))
        return _verdict(recognize_strong_cocomparability(g, ordering_bound=0).is_strong)
    if args.cls == "cocomp":
        return _verdict(recognize_comparability(complement_simple(g)) is not None)
    if args.cls == "comparability":
        return _verdict(recognize_comparability(g) is not None)
    return _verdict(recognize_cocomparability_bigraph(g))


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _checked(ok: bool, what: str) -> None:
    # the CLI never prints a certificate its verifier rejects
    if not ok:
        raise InternalError(f"{what} failed re-verification")


def cmd_certify(args) -> int:
    g = _load(args.file, args.kind, CLASS_KIND[args.cls])
    certificate = None
    if args.cls == "strong-cocomp":
        decision = recognize_strong_cocomparability(g, ordering_bound=0)
        yes = decision.is_strong
        if not yes:
            _checked(verify_weak_edge_asteroid(g, decision.asteroid), "weak edge-asteroid")
            certificate = decision.asteroid
        else:
            search = search_strong_ordering(g, args.node_budget)
            if search.ordering is not None:
                _checked(is_slash_free_ordering(g, search.ordering), "ordering")
                certificate = search.ordering
    elif args.cls in ("cocomp", "comparability"):
        target = complement_simple(g) if args.cls == "cocomp" else g
        orientation = recognize_comparability(target)
        yes = orientation is not None
        if yes:
            _checked(verify_transitive(target, orientation), "orientation")
            certificate = orientation
    else:
        yes, certificate = certify_cocomparability_bigraph(g, ordering_bound=args.max_order_n)
        if yes and certificate is not None:
            _checked(is_bigraph_slash_free(g, *certificate), "ordering pair")
        elif not yes:
            _checked(verify_weak_edge_asteroid(close_both_sides(g), certificate), "weak edge-asteroid")
    status = _verdict(yes)
    if certificate is not None:
        sys.stdout.write(format_certificate(certificate))
    else:
        _note("no certificate available for this verdict")
    return status


def cmd_construct(args) -> int:
    g = _load(args.file, args.kind, OP_KIND[args.op])
    if args.op == "bipartite-double":
        out = bipartite_double(g)
    elif args.op == "h-plus-plus":
        out = close_both_sides(g)
    else:
        out = complement_simple(g)
    sys.stdout.write(encode_graph(out))
    return 0


def cmd_oracle(args) -> int:
    g = _load(args.file, args.kind, CLASS_KIND[args.cls])
    if args.cls == "strong-cocomp":
        return _verdict(oracle_strong_cocomp(g) is not None)
    if args.cls == "cocomp":
        return _verdict(oracle_comparability(complement_simple(g)) is not None)
    if args.cls == "comparability":
        return _verdict(oracle_comparability(g) is not None)
    return _verdict(oracle_cocomp_bigraph(g) is not None)


def emit_report(report: Report, fmt: str = "text") -> str:
    """Deterministic serialization of a cross-check report.

    ``text`` is a commented header plus one line per graph; ``structured`` is
    JSON Lines, a header object followed by one object per graph.
    """
    header = {
        "n": report.n,
        "recognizers": list(report.modes),
        "seed": report.seed,
        "samples": report.samples,
        "graphs": len(report.records),
        "strong": {m: report.strong_count(m) for m in report.modes} if report.records else {},
        "disagreements": len(report.disagreements),
        "certificate_failures": len(report.certificate_failures),
    }
    if fmt == "structured":
        lines = [json.dumps(header, sort_keys=True)]
        for r in report.records:
            lines.append(json.dumps(
                {
                    "bitmask": r.bitmask,
                    "verdicts": r.verdicts,
                    "certificate": r.certificate,
                    "certified": r.certified,
                },
                sort_keys=True,
            ))
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    strong = " ".join(f"{m}={c}" for m, c in header["strong"].items()) or "-"
    lines = [
        f"# crosscheck n={report.n} seed={report.seed if report.seed is not None else '-'}"
        f" samples={report.samples if report.samples is not None else 'all'}",
        f"# graphs={header['graphs']} strong: {strong}",
        f"# disagreements={header['disagreements']} certificate_failures={header['certificate_failures']}",
        "# bitmask " + " ".join(report.modes) + " certificate",
    ]
    for r in report.records:
        verdicts = " ".join("YES" if r.verdicts[m] else "NO" for m in report.modes)
        cert = r.certificate if r.certified else "FAILED"
        lines.append(f"{r.bitmask} {verdicts} {cert or '-'}")
    return "\n".join(lines) + "\n"


def cmd_crosscheck(args) -> int:
    modes = tuple(args.recognizers.split(","))
    report = crosscheck_enumerate(
        args.n,
        modes,
        seed=args.seed,
        samples=args.samples,
        certify=not args.no_certify,
        workers=args.workers,
    )
    text = emit_report(report, args.format)
    if args.output:
        Path(args.output).write_text(text)
        _note(f"wrote {len(report.records)} records to {args.output}")
    else:
        sys.stdout.write(text)
    return 0 if not report.disagreements and not report.certificate_failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongcocomp",
        description="Recognize and certify strong cocomparability graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, help: str, classes=tuple(CLASS_KIND)):
        p = sub.add_parser(name, help=help)
        p.add_argument("--class", dest="cls", choices=classes, default="strong-cocomp")
        p.add_argument("--kind", choices=("reflexive", "simple", "bigraph"),
                       help="graph kind (default: from file extension, else from --class)")
        p.add_argument("file", help="graph file in edge-list format, or - for stdin")
        return p

    p = graph_command("recognize", "print YES or NO")
    p.add_argument("--route", choices=("pairs", "avoidance"), default="pairs",
                   help="strong-cocomp recognition route")
    p.set_defaults(func=cmd_recognize)

    p = graph_command("certify", "print the verdict followed by a verified certificate")
    p.add_argument("--node-budget", type=int, default=200_000,
                   help="placement budget for the Slash-free ordering search")
    p.add_argument("--max-order-n", type=int, default=16,
                   help="largest H++ for which a bigraph ordering pair is searched")
    p.set_defaults(func=cmd_certify)

    p = graph_command("oracle", "brute-force verdict (small inputs only)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("construct", help="print a derived graph in canonical format")
    p.add_argument("--op", choices=tuple(OP_KIND), required=True)
    p.add_argument("--kind", choices=("reflexive", "simple", "bigraph"))
    p.add_argument("file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("crosscheck", help="compare recognizers on labeled graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--recognizers", default=",".join(MODES))
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--output")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-certify", action="store_true")
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _note(f"error: {exc}")
        return EXIT_INPUT
    except OracleGuardError as exc:
        _note(f"error: {exc}")
        return EXIT_GUARD
    except ValueError as exc:
        _note(f"error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
