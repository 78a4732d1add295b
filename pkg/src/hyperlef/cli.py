"""Command-line surface.

    hyperlef analyze --demo mn --n 3 --format machine
    hyperlef analyze --spec path/to/spec.json --strict
    hyperlef classify-hypersurface 3
    hyperlef braid liftclass --strands 6 1 2 1 2 ...

Exit codes: 0 ok, 2 invalid spec, 3 undecided under --strict,
4 unsupported classification, 64 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import constructions, delpezzo, model
from .braid import mcg, words
from .errors import HyperlefError, MalformedDocument

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNDECIDED = 3
EXIT_UNSUPPORTED = 4
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _analyze_parser() -> _Parser:
    pa = _Parser(prog="hyperlef analyze",
                 description="analyze fibration specs")
    pa.add_argument("--spec", action="append", default=[], metavar="FILE",
                    help="spec document to analyze (repeatable)")
    pa.add_argument("--demo", choices=["mn"],
                    help="analyze a built-in demo family instead of a file")
    pa.add_argument("--n", type=int, default=0,
                    help="twist parameter for the demo family")
    pa.add_argument("--m", type=int, default=None,
                    help="section intersection number for the Y class")
    pa.add_argument("--format", choices=["text", "machine"], default="text")
    pa.add_argument("--strict", action="store_true",
                    help="treat Undecided/Unknown as failure")
    pa.add_argument("--budget", type=int, default=mcg.DEFAULT_BUDGET,
                    help="rewrite search node limit")
    pa.add_argument("--out", metavar="DIR",
                    help="write one report file per input into DIR")
    return pa


def _classify_parser() -> _Parser:
    pc = _Parser(prog="hyperlef classify-hypersurface",
                 description="classify a degree-k hypersurface of CP^3")
    pc.add_argument("k", type=int)
    pc.add_argument("--format", choices=["text", "machine"], default="text")
    return pc


def _braid_parser() -> _Parser:
    pb = _Parser(prog="hyperlef braid", description="braid word utilities")
    pb.add_argument("subcommand", choices=["perm", "degree", "liftclass"])
    pb.add_argument("--strands", type=int, required=True)
    pb.add_argument("--ambient", choices=["planar", "spherical"],
                    default="spherical")
    pb.add_argument("--budget", type=int, default=mcg.DEFAULT_BUDGET)
    pb.add_argument("--strict", action="store_true")
    pb.add_argument("letters", type=int, nargs="*",
                    help="signed generator indices (i for the i-th "
                         "generator, -i for its inverse)")
    return pb


_USAGE = """usage: hyperlef COMMAND [options]

commands:
  analyze                 analyze fibration specs (--spec FILE or --demo mn)
  classify-hypersurface   classify a degree-k hypersurface of CP^3
  braid                   braid word utilities (perm, degree, liftclass)

run `hyperlef COMMAND --help` for command options
"""


# ---------------------------------------------------------------------------

def _machine_dump(payload: dict) -> str:
    payload = dict(payload)
    payload["schema_version"] = SCHEMA_VERSION
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _report_text(report: dict) -> str:
    lines = []
    h1 = report["h1"]
    h1_str = "unknown (no section)" if h1 is None else str(
        _h1_group(h1))
    lines.append(f"genus {report['genus']}, {report['letter_count']} letters,"
                 f" {report['reducible_fibers']} reducible fibers")
    lines.append(f"chi = {report['chi']}")
    lines.append(f"sigma = {report['sigma'] if report['sigma'] is not None else 'unknown'}")
    lines.append(f"H1 = {h1_str}")
    if report["b2plus"] is not None:
        lines.append(f"b1 = {report['b1']}, b2+ = {report['b2plus']},"
                     f" b2- = {report['b2minus']}")
    lines.append(f"complex structure: {report['complex_structure']}")
    lines.append(f"global braid lift class: {report['lift_class']}")
    if report["ambient_bundle"]:
        lines.append(f"ambient bundle: {report['ambient_bundle']['bundle']}")
    ledger = report["blow_up_ledger"]
    lines.append(
        f"blow-up ledger: {ledger['fiberwise_line_blowups']} fiberwise lines,"
        f" {ledger['point_blowups']} points,"
        f" curves {ledger['curve_blowups']}; chi(X) = {report['chi_ambient']}")
    lines.append(f"Y = {report['y_descriptor']},"
                 f" [Y] = {report['class_of_y']['a']} A +"
                 f" {report['class_of_y']['b']} B")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def _h1_group(h1: dict) -> str:
    parts = ["Z"] * h1["rank"] + [f"Z/{t}" for t in h1["torsion"]]
    return " + ".join(parts) if parts else "0"


def _emit(name: str, content: str, out_dir: str | None) -> None:
    if out_dir is None:
        sys.stdout.write(content)
        return
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(content)
    os.replace(tmp, path)  # atomic per file


def _cmd_analyze(args) -> int:
    inputs = []  # (name, spec, digest)
    if args.demo:
        spec = constructions.family_mn(args.n)
        inputs.append((f"demo_mn_{args.n}", spec,
                       _digest(model.serialize_spec(spec))))
    for path in args.spec:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            print(f"hyperlef: cannot read {path}: {exc}", file=sys.stderr)
            return EXIT_INVALID
        spec = model.parse_spec(text)
        name = os.path.splitext(os.path.basename(path))[0]
        inputs.append((name, spec, _digest(text)))
    if not inputs:
        print("hyperlef: nothing to analyze; give --spec or --demo",
              file=sys.stderr)
        return EXIT_USAGE

    code = EXIT_OK
    for name, spec, digest in inputs:
        report = constructions.analyze(spec, m=args.m, budget=args.budget)
        report["input_digest"] = digest
        if args.format == "machine":
            content = _machine_dump(report)
        else:
            content = _report_text(report)
        _emit(f"{name}.{'json' if args.format == 'machine' else 'txt'}",
              content, args.out)
        if args.strict and (report["lift_class"] == mcg.UNDECIDED
                            or report["warnings"]):
            code = EXIT_UNDECIDED
    return code


def _cmd_classify(args) -> int:
    if args.k < 1:
        print("hyperlef: degree must be a positive integer", file=sys.stderr)
        return EXIT_USAGE
    data = delpezzo.classify(args.k)
    if args.format == "machine":
        payload = {
            "k": data.k,
            "c1_coefficient": data.c1_coefficient,
            "c2_coefficient": data.c2_coefficient,
            "chi": data.chi,
            "sigma": data.sigma,
            "b2minus": data.b2minus,
            "spin": data.spin,
            "diffeo_type": data.diffeo_type,
        }
        sys.stdout.write(_machine_dump(payload))
    else:
        label = delpezzo.DIFFEO_LABELS[data.diffeo_type]
        if data.diffeo_type == delpezzo.UNSUPPORTED:
            print(f"degree {data.k}: {label}")
        else:
            spin = ", spin" if data.spin else ""
            print(f"degree {data.k}: {label}, chi = {data.chi},"
                  f" sigma = {data.sigma}, b2- = {data.b2minus}{spin}")
    if data.diffeo_type == delpezzo.UNSUPPORTED:
        return EXIT_UNSUPPORTED
    return EXIT_OK


def _cmd_braid(args) -> int:
    try:
        w = words.BraidWord(strands=args.strands, ambient=args.ambient,
                            letters=tuple(args.letters))
    except ValueError as exc:
        print(f"hyperlef: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.subcommand == "perm":
        perm = words.permutation_of(w)
        print(" ".join(str(x + 1) for x in perm))
        return EXIT_OK
    if args.subcommand == "degree":
        print(words.degree(w))
        return EXIT_OK
    # liftclass
    if w.ambient != words.SPHERICAL:
        print("hyperlef: lift class needs a spherical word", file=sys.stderr)
        return EXIT_USAGE
    trivial = mcg.mcg_image_trivial(w, budget=args.budget)
    print(f"mcg-trivial: {trivial}")
    if trivial is not True:
        return EXIT_OK
    lc = mcg.lift_class(w, budget=args.budget)
    print(f"lift class: {lc}")
    if args.strict and lc == mcg.UNDECIDED:
        return EXIT_UNDECIDED
    return EXIT_OK


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(_USAGE)
        return EXIT_OK if argv else EXIT_USAGE
    command, rest = argv[0], argv[1:]
    handlers = {
        "analyze": (_analyze_parser, _cmd_analyze),
        "classify-hypersurface": (_classify_parser, _cmd_classify),
        "braid": (_braid_parser, _cmd_braid),
    }
    if command not in handlers:
        print(f"hyperlef: unknown command {command!r}", file=sys.stderr)
        sys.stderr.write(_USAGE)
        return EXIT_USAGE
    build, run = handlers[command]
    try:
        args = build().parse_intermixed_args(rest)
    except SystemExit as exc:
        # argparse help exits 0; usage errors come through our error()
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return run(args)
    except MalformedDocument as exc:
        print(f"hyperlef: malformed spec: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HyperlefError as exc:
        print(f"hyperlef: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
