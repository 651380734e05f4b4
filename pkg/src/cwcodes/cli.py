"""Command-line entry point: ``cwcodes {bound,sweep,extract,verify,table}``.

Exit codes: 0 success, 1 mismatch or refuted claim, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from cwcodes import codebook
from cwcodes.codebook import CodeFileError
from cwcodes.propagate import (
    InfeasibleSweep,
    avg_bound,
    avg_bound_extended,
    extract_extended,
    extract_fixed,
    sweep_modes,
    target_distance,
    write_bound_csv,
    write_sweep_csv,
)
from cwcodes.registry import TABLE_IDS, entries_for_table
from cwcodes.reproduce import EXAMPLES, MISMATCH, RunConfig, run_example
from cwcodes.verify import verify_claim, write_claim_csv
from cwcodes.words import Word

log = logging.getLogger("cwcodes")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"7..14"``, ``"9,11,13"`` or ``"7"``; pieces may be mixed."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight range {text!r}") from None
    return sorted(set(out))


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(",")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M,DELTA, got {text!r}") from None


def _config(args) -> RunConfig:
    return RunConfig(
        threads=args.threads,
        seed=args.seed,
        budget=args.budget,
        pair_budget=args.pair_budget,
        out=args.out,
        matrix_paths=args.matrix_path or [Path("data")],
    )


def _modes(mode: str) -> list[str]:
    return ["fixed", "extend"] if mode == "both" else [mode]


def _add_code_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--bch", type=_pair, metavar="M,DELTA", help="narrow-sense BCH code")
    src.add_argument("--rm1", type=int, metavar="M", help="first-order Reed-Muller code RM(1,M)")
    src.add_argument("--matrix", help="generator matrix file (searched in --matrix-path)")
    src.add_argument("--code", type=Path, help="explicit code file")
    p.add_argument("--shorten", type=int, default=0, metavar="I", help="shorten at the last I positions")
    p.add_argument("--puncture", type=int, default=0, metavar="I", help="puncture the last I positions")


def _load_code(args, config: RunConfig):
    if args.bch:
        code = codebook.bch_code(*args.bch)
    elif args.rm1 is not None:
        code = codebook.reed_muller_1(args.rm1)
    elif args.matrix:
        path = Path(args.matrix)
        if not path.is_file():
            path = config.find_matrix(args.matrix)
            if path is None:
                raise UsageError(f"matrix file {args.matrix} not found in {config.header()}")
        code = codebook.load_generator_matrix(path)
    else:
        code = codebook.load_explicit_code(args.code)
    if args.puncture:
        code = codebook.puncture(code, args.puncture)
    if args.shorten:
        code = codebook.shorten(code, args.shorten)
    return code


def _source_distance(code) -> int:
    if isinstance(code, codebook.LinearCode) and code.k and code.size <= codebook.DEFAULT_ENUMERATION_BUDGET:
        return codebook.min_weight_linear(code)
    return code.spec.design_distance


def cmd_bound(args, config: RunConfig) -> int:
    if (args.log2M is None) == (args.M is None):
        raise UsageError("give exactly one of --log2M and --M")
    size = 1 << args.log2M if args.log2M is not None else args.M
    results = []
    for mode in _modes(args.mode):
        fn = avg_bound if mode == "fixed" else avg_bound_extended
        results.extend(fn(args.n, args.q, size, w, args.d) for w in args.w)
    print(f"# {config.header()}")
    write_bound_csv(results, sys.stdout)
    if not args.expect:
        return EXIT_OK
    expected = {}
    for e in entries_for_table(args.expect):
        if e.kind == "exact-bound":
            expected[(e.n, e.w)] = e
    status = EXIT_OK
    for r in results:
        e = expected.get((r.length, r.w))
        if e is None:
            print(f"NO-ENTRY  A({r.length},*,{r.w}) value {r.value}")
            continue
        ok = e.value == r.value
        print(f"{'PASS' if ok else MISMATCH:<9} {e.label} expected {e.value} got {r.value}")
        if not ok:
            status = EXIT_MISMATCH
    return status


def cmd_sweep(args, config: RunConfig) -> int:
    code = _load_code(args, config)
    strategy = "sample" if args.sample else "exhaustive"
    reports = sweep_modes(code, args.w, _modes(args.mode), strategy, config.budget, config.seed,
                          config.threads)
    print(f"# {config.header()}")
    write_sweep_csv(reports.values(), sys.stdout)
    if not args.extract:
        return EXIT_OK
    out = config.out or Path(".")
    out.mkdir(parents=True, exist_ok=True)
    d_true = _source_distance(code)
    checks = []
    for mode, report in reports.items():
        extract = extract_fixed if mode == "fixed" else extract_extended
        for w, entry in report.entries.items():
            extracted = extract(code, entry.representative, w, d_true)
            length = code.n + (mode == "extend")
            path = out / f"{code.spec.code_id}_{mode}_w{w}.txt"
            codebook.save_explicit_code(extracted, path, [config.header(),
                                                          f"representative {entry.representative}"])
            checks.append(verify_claim(extracted, length, target_distance(d_true), w, entry.count,
                                       config.pair_budget))
    write_claim_csv(checks, sys.stdout)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_MISMATCH


def cmd_extract(args, config: RunConfig) -> int:
    code = _load_code(args, config)
    try:
        u = Word.parse(args.rep, code.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d_true = _source_distance(code)
    extract = extract_fixed if args.mode == "fixed" else extract_extended
    extracted = extract(code, u, args.w, d_true)
    comments = [config.header(), f"representative {u}"]
    if args.output:
        codebook.save_explicit_code(extracted, args.output, comments)
    else:
        print(f"{extracted.n} {extracted.size} 2 {extracted.spec.design_distance}")
        for word in extracted.words:
            print(word)
    check = verify_claim(extracted, extracted.n, target_distance(d_true), args.w, extracted.size,
                         config.pair_budget)
    print(f"# {check.verdict} size={check.measured_size} distance={check.measured_distance}",
          file=sys.stderr)
    return EXIT_OK if check.ok else EXIT_MISMATCH


def cmd_verify(args, config: RunConfig) -> int:
    code = codebook.load_explicit_code(args.file)
    check = verify_claim(code, args.n, args.d, args.w, args.size, config.pair_budget)
    write_claim_csv([check], sys.stdout)
    return EXIT_OK if check.ok else EXIT_MISMATCH


def cmd_table(args, config: RunConfig) -> int:
    examples = EXAMPLES if args.example == "all" else [args.example]
    status = EXIT_OK
    print(f"# {config.header()}")
    for ex in examples:
        result = run_example(ex, config)
        print(f"== {ex} ==")
        for row in result.rows:
            print(row.line())
        for problem in result.problems:
            print(f"CONSISTENCY {problem}")
        summary = ", ".join(f"{k}={v}" for k, v in sorted(result.counts().items()))
        print(f"{ex}: {'ok' if result.ok else 'FAILED'} ({summary}) in {result.elapsed:.2f}s")
        if not result.ok:
            status = EXIT_MISMATCH
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cwcodes", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")
    parser.add_argument("--budget", type=int, default=10_000, help="representatives per sampled sweep")
    parser.add_argument("--pair-budget", type=int, default=10**5, help="max words for pairwise checks")
    parser.add_argument("--out", type=Path, help="directory for extracted code files")
    parser.add_argument("--matrix-path", type=Path, action="append",
                        help="directory searched for matrix files (repeatable; default ./data)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="exact averaging lower bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--log2M", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--d", type=int, help="source distance, for the d_prime column")
    p.add_argument("--w", type=parse_range, required=True)
    p.add_argument("--mode", choices=["fixed", "extend", "both"], default="fixed")
    p.add_argument("--expect", choices=TABLE_IDS, help="compare against a published table")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="best cosets for each weight")
    _add_code_args(p)
    p.add_argument("--w", type=parse_range, required=True)
    p.add_argument("--mode", choices=["fixed", "extend", "both"], default="fixed")
    p.add_argument("--sample", action="store_true", help="sample --budget cosets instead of all")
    p.add_argument("--extract", action="store_true", help="write and verify the best codes")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extract", help="constant-weight code from one coset")
    _add_code_args(p)
    p.add_argument("--rep", required=True, help="coset representative, e.g. 0011")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--mode", choices=["fixed", "extend"], default="fixed")
    p.add_argument("--output", type=Path)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="check a constant-weight code claim")
    p.add_argument("file", type=Path)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="reproduce a worked example against published values")
    p.add_argument("example", choices=[*EXAMPLES, "all"])
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, _config(args))
    except (UsageError, CodeFileError, InfeasibleSweep, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
