"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import PermPairError
from .graph import build_model, export_dot
from .notation import parse_label, parse_pair
from .oracle import DEFAULT_CAP, is_transitive_oracle
from .pair import analyze, classify_exceptional, classify_type, genus_effect
from .perm import format_permutation
from .reroute import conjugate_by_transposition, predict_branch_type, reroute

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_pair_file(path):
    """Two non-blank, non-comment lines: white then black.  A line may be
    prefixed with ``white:`` or ``black:``."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 2:
        raise UsageError(f"{path}: expected 2 lines (white, black), found {len(lines)}")
    out = []
    for ln, name in zip(lines, ("white", "black")):
        head, sep, rest = ln.partition(":")
        out.append(rest.strip() if sep and head.strip().lower() == name else ln)
    return out


def _load_pair(args):
    if args.pair_file:
        if args.white or args.black:
            raise UsageError("give either --pair-file or --white/--black, not both")
        white, black = _read_pair_file(args.pair_file)
    else:
        if args.white is None or args.black is None:
            raise UsageError("--white and --black are required")
        white, black = args.white, args.black
    return parse_pair(white, black, args.degree)


def _load_ab(args, pair, required=True):
    if args.a is None and args.b is None:
        if required:
            raise UsageError("--a and --b are required")
        return None
    if args.a is None or args.b is None:
        raise UsageError("--a and --b must be given together")
    a, b = parse_label(args.a), parse_label(args.b)
    if a == b:
        raise UsageError("--a and --b must be distinct")
    for x in (a, b):
        if x not in pair.ground:
            raise UsageError(f"{x} is not an element of the pair")
    return a, b


def _pair_dict(pair):
    return {"white": format_permutation(pair.white), "black": format_permutation(pair.black)}


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(data):
    return json.dumps(data, indent=2)


def cmd_analyze(args):
    pair = _load_pair(args)
    report = analyze(pair)
    if args.json:
        _emit(args, _dump(dict(_pair_dict(pair), **report.to_dict())))
    else:
        _emit(args, f"white: {format_permutation(pair.white)}\n"
                    f"black: {format_permutation(pair.black)}\n" + report.to_text())
    return EXIT_OK


def classify_row(pair, a, b) -> dict:
    t = classify_type(pair, a, b)
    conj = conjugate_by_transposition(pair, a, b)
    return {
        "a": str(a),
        "b": str(b),
        "type": t.value,
        "exceptional": classify_exceptional(pair, a, b).value,
        "genus_effect": genus_effect(pair, a, b).value,
        "predicted_branch": predict_branch_type(pair, a, b).value,
        "transitive_after": is_transitive_oracle(conj),
    }


_COLUMNS = ("a", "b", "type", "exceptional", "genus_effect", "predicted_branch", "transitive_after")


def _table(rows):
    cells = [list(_COLUMNS)] + [
        [str(r[c]).lower() if isinstance(r[c], bool) else str(r[c]) for c in _COLUMNS] for r in rows
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(_COLUMNS))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells)


def cmd_classify(args):
    pair = _load_pair(args)
    ab = _load_ab(args, pair, required=False)
    if ab:
        rows = [classify_row(pair, *ab)]
    else:
        ground = list(pair.ground)
        rows = [classify_row(pair, a, b) for a in ground for b in ground if a != b]
    if args.json:
        _emit(args, _dump(dict(_pair_dict(pair), rows=rows)))
    else:
        _emit(args, _table(rows))
    return EXIT_OK


def cmd_reroute(args):
    pair = _load_pair(args)
    a, b = _load_ab(args, pair)
    result = reroute(pair, a, b)
    before, after = analyze(pair), analyze(result.pair)
    data = dict(
        _pair_dict(result.pair),
        a_white=str(result.a_white),
        a_black=str(result.a_black),
        type=classify_type(pair, a, b).value,
        chi_before=before.chi,
        chi_after=after.chi,
        genus_before=before.genus,
        genus_after=after.genus,
    )
    if args.json:
        _emit(args, _dump(data))
    else:
        _emit(args, "\n".join(f"{k}: {v}" for k, v in data.items()))
    return EXIT_OK


def cmd_conjugate(args):
    pair = _load_pair(args)
    a, b = _load_ab(args, pair)
    conj = conjugate_by_transposition(pair, a, b)
    before, after = analyze(pair), analyze(conj)
    data = dict(
        _pair_dict(conj),
        transitive=after.transitive,
        genus_before=before.genus,
        genus_after=after.genus,
        nu_product_before=before.nu_product,
        nu_product_after=after.nu_product,
    )
    if args.json:
        _emit(args, _dump(data))
    else:
        _emit(args, "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in data.items()))
    return EXIT_OK


def cmd_verify(args):
    from .verify import verify_all

    degree = args.degree if args.degree is not None else 3
    cap = args.max_degree if args.max_degree is not None else DEFAULT_CAP
    if not 2 <= degree <= cap:
        raise UsageError(f"degree must be between 2 and {cap}, got {degree}")
    if degree > DEFAULT_CAP and args.sample is None:
        raise UsageError(f"degrees above {DEFAULT_CAP} need --sample")
    report = verify_all(degree, threads=args.threads, sample=args.sample, seed=args.seed, cap=cap)
    _emit(args, report.to_json())
    if report.failures:
        return EXIT_FAIL
    if not report.sampled and report.cases_checked != report.expected_cases:
        return EXIT_FAIL
    return EXIT_OK


def cmd_export_dot(args):
    pair = _load_pair(args)
    ab = _load_ab(args, pair, required=False)
    if ab:
        pair = reroute(pair, *ab).pair
    _emit(args, export_dot(build_model(pair)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permpairs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_flags(p, with_ab):
        p.add_argument("--white", help="white permutation in cycle notation, e.g. '(1,2)(3)'")
        p.add_argument("--black", help="black permutation in cycle notation")
        p.add_argument("--pair-file", help="file with the white and black permutations on two lines")
        p.add_argument("--degree", type=int, help="ground set {1..n}; default is the largest element mentioned")
        if with_ab:
            p.add_argument("--a", help="first edge")
            p.add_argument("--b", help="second edge")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write to this file instead of standard output")

    for name, func, with_ab, text in (
        ("analyze", cmd_analyze, False, "Euler characteristic, genus, cycle counts, transitivity"),
        ("classify", cmd_classify, True, "type, exceptional class and genus effect for (a, b) or all pairs"),
        ("reroute", cmd_reroute, True, "apply the reroute surgery relative to (a, b)"),
        ("conjugate", cmd_conjugate, True, "conjugate white by the transposition (a b)"),
        ("export-dot", cmd_export_dot, True, "Graphviz model; with --a/--b, of the rerouted pair"),
    ):
        p = sub.add_parser(name, help=text)
        pair_flags(p, with_ab)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check every theorem over S_n x S_n")
    p.add_argument("--degree", type=int, help="n (default 3)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-degree", type=int, help=f"raise the degree cap (default {DEFAULT_CAP})")
    p.add_argument("--sample", type=int, help="check this many random pairs instead of all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, PermPairError, OSError) as exc:
        print(f"permpairs {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
