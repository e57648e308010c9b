"""Command-line interface: ``sgs analyze|census|construct|verify|spectrum``."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .census import MAX_CENSUS_K, census
from .cycles import spanning_tree
from .errors import CapExceededError, SignedGraphError
from .graph import parse, serialize
from .poly import char_poly, matching_poly, odd_part
from .spectral import eigenvalues, numeric_symmetry_check
from .suites import CONSTRUCTIONS, SUITES, named_construction, verify_suite
from .symmetry import MAX_AUTOMORPHISM_N, classify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise SignedGraphError(f"cannot read {path}: {e.strerror}") from None


def _envelope(command: str, source: str, result) -> str:
    return json.dumps({"tool_version": __version__, "command": command,
                       "input_hash": hashlib.sha256(source.encode()).hexdigest(),
                       "result": result}, indent=2, sort_keys=False)


def _poly_json(p) -> list[str]:
    return p.to_json()


def cmd_analyze(args) -> int:
    text = _read(args.file)
    g = parse(text)
    verdict = classify(g, max_n=args.max_aut_n)
    t = spanning_tree(g)
    result = {
        "n": g.n, "m": g.m, "k": t.k,
        "char_poly": _poly_json(char_poly(g)),
        "matching_poly": _poly_json(matching_poly(g)),
        "odd_part": _poly_json(odd_part(g)),
        **verdict.to_json(),
    }
    if args.json:
        print(_envelope("analyze", text, result))
    else:
        print(f"n={g.n} m={g.m} k={t.k}")
        print(f"char_poly: {char_poly(g)}")
        print(f"matching_poly: {matching_poly(g)}")
        print(f"odd_part: {odd_part(g)}")
        print(f"spectrally_symmetric: {verdict.spectrally_symmetric}")
        print(f"sign_symmetric: {verdict.sign_symmetric}")
        print(f"odd_exchangeable: {verdict.odd_exchangeable}")
        print(f"witness: {verdict.witness if verdict.witness else None}")
        print(f"automorphism_count: {verdict.automorphism_count}")
        for note in verdict.findings:
            print(f"finding: {note}")
    return EXIT_OK


def cmd_census(args) -> int:
    text = _read(args.file)
    g = parse(text)
    report = census(g, max_k=args.max_k, workers=args.workers, max_aut_n=args.max_aut_n)
    if args.json:
        print(_envelope("census", text, report.to_json()))
    else:
        print(f"n={report.n} m={report.m} k={report.k} classes={len(report.classes)}")
        print("strata: " + " ".join(f"t={t}:{c}" for t, c in report.strata().items()))
        for key, count in report.summary.items():
            print(f"{key}: {count}")
        for c in report.classes:
            v = c.verdict
            neg = " ".join(f"{a}-{b}" for a, b in c.negative_cotree_edges) or "(none)"
            print(f"class {c.subset} t={c.t} negative={neg} spectral={v.spectrally_symmetric} "
                  f"sign={v.sign_symmetric} odd_exchangeable={v.odd_exchangeable}")
    return EXIT_OK


def cmd_construct(args) -> int:
    params = {}
    for item in args.params:
        key, sep, value = item.partition("=")
        if not sep:
            raise SignedGraphError(f"parameter {item!r} is not of the form key=value")
        params[key] = value
    out = named_construction(args.name, **params)
    text = serialize(out.graph)
    cert = json.dumps(out.certificate(), indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        with open(args.output + ".cert.json", "w") as fh:
            fh.write(cert + "\n")
    else:
        sys.stdout.write(text)
        print(cert, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        # every corpus suite takes max_n; the constructions suite has fixed parameters
        kw = {"max_n": args.max_n} if args.max_n is not None and name != "constructions" else {}
        reports.append(verify_suite(name, **kw))
    if args.json:
        print(_envelope("verify", args.suite, [r.to_json() for r in reports]))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.name}: {r.checked} checks in {r.elapsed:.1f}s {r.message}".rstrip())
            if r.counterexample:
                print(r.counterexample, end="")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_spectrum(args) -> int:
    text = _read(args.file)
    g = parse(text)
    spec = eigenvalues(g)
    values = spec.rounded(args.digits)
    if args.json:
        print(_envelope("spectrum", text, {"eigenvalues": values,
                                           "numerically_symmetric": numeric_symmetry_check(spec)}))
    else:
        print(" ".join(f"{v:.{args.digits}f}" for v in values))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sgs", description="Spectral symmetry of small signed graphs.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="polynomials and symmetry verdict of one signed graph")
    p.add_argument("file", help="signed graph file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-aut-n", type=int, default=MAX_AUTOMORPHISM_N)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", help="classify every switching class on the underlying graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-k", type=int, default=MAX_CENSUS_K)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-aut-n", type=int, default=MAX_AUTOMORPHISM_N)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("construct", help=f"build a named construction ({', '.join(CONSTRUCTIONS)})")
    p.add_argument("name")
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.add_argument("-o", "--output", help="write the graph here and the certificate to OUTPUT.cert.json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--max-n", type=int, default=None, help="largest graph order for corpus suites")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="numeric eigenvalues")
    p.add_argument("file")
    p.add_argument("--digits", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as e:
        print(f"sgs: resource cap: {e}", file=sys.stderr)
        return EXIT_CAP
    except SignedGraphError as e:
        print(f"sgs: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
