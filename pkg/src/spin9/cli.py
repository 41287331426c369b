"""Command line entry point: verify, export, conjecture, bench.

Exit codes: 0 all checks passed or verdict delivered, 1 check failure,
2 usage error, 3 I/O error.  All randomized behavior is reproducible
from (--seed, --samples); --jobs never changes any numeric output.
"""

import argparse
import concurrent.futures
import sys
import time

from .bpt import materialize_bpt_8form
from .canonical import (
    canonical_8form,
    canonical_8form_alt,
    conjecture_8form,
    conjecture_verdict,
    export_coefficients,
    omega2,
)
from .stabilizer import stabilizer_system
from .suites import SUITE_NAMES, RunConfig, run_suite

EXPORT_FORMS = ("omega8", "omega8-alt", "conjecture-rhs", "bpt")
BENCH_KERNELS = ("wedge", "stabilizer-assembly", "bpt-materialize")


def _run_one(args):
    name, config = args
    return name, run_suite(name, config)


def cmd_verify(args) -> int:
    config = RunConfig(seed=args.seed, samples=args.samples, jobs=args.jobs)
    if args.suite == "all" and args.jobs > 1:
        # fan out per suite; output order stays fixed by suite name
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=min(args.jobs, len(SUITE_NAMES))
        ) as pool:
            results = dict(
                pool.map(_run_one, [(s, config) for s in SUITE_NAMES])
            )
        reports = [results[s] for s in SUITE_NAMES]
    else:
        reports = [run_suite(args.suite, config)]
    ok = True
    for report in reports:
        for line in report.lines():
            print(line)
        ok = ok and report.passed
    return 0 if ok else 1


def _export_form(name):
    if name == "omega8":
        return canonical_8form()
    if name == "omega8-alt":
        return canonical_8form_alt()
    if name == "conjecture-rhs":
        return conjecture_8form("antisymmetric")
    return materialize_bpt_8form()


def cmd_export(args) -> int:
    form = _export_form(args.form)
    data = export_coefficients(form, args.format)
    records = form.term_count()
    if args.out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        print(
            f"export {args.form}: records={records} bytes={len(data)}",
            file=sys.stderr,
        )
        return 0
    try:
        with open(args.out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        print(f"export {args.form}: cannot write {args.out}: {exc}",
              file=sys.stderr)
        return 3
    print(
        f"export {args.form}: records={records} bytes={len(data)} "
        f"out={args.out}"
    )
    return 0


def _print_verdict(v) -> None:
    word = "EQUAL" if v.equal else "NOT-EQUAL"
    print(f"conjecture: {word} (convention={v.convention})")
    print(
        f"conjecture.detail lhs_terms={v.lhs_terms} rhs_terms={v.rhs_terms} "
        f"difference_terms={v.difference_terms}"
    )
    if not v.equal:
        for idx, coeff in v.sample_monomials:
            print(
                "conjecture.sample indices="
                + ",".join(str(i) for i in idx)
                + f" coefficient={coeff}"
            )


def cmd_conjecture(args) -> int:
    verdict = conjecture_verdict()
    _print_verdict(verdict)
    if verdict.alternative is not None:
        _print_verdict(verdict.alternative)
    return 0


def _wedge_chunk(pairs):
    ops = 0
    checksum = 0
    for (i, j), (k, l) in pairs:
        a = omega2(i, j)
        b = omega2(k, l)
        ops += a.term_count() * b.term_count()
        w = a.wedge(b)
        checksum += sum(v for _, v in w.items())
    return ops, checksum


def _bench_wedge(jobs):
    two_forms = [(i, j) for i in range(9) for j in range(i + 1, 9)]
    pairs = [
        (two_forms[a], two_forms[b])
        for a in range(len(two_forms))
        for b in range(a, len(two_forms))
    ]
    t0 = time.perf_counter()
    if jobs > 1:
        step = (len(pairs) + jobs - 1) // jobs
        chunks = [pairs[k:k + step] for k in range(0, len(pairs), step)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_wedge_chunk, chunks))
        ops = sum(p[0] for p in parts)
        checksum = sum(p[1] for p in parts)
    else:
        ops, checksum = _wedge_chunk(pairs)
    elapsed = time.perf_counter() - t0
    print(
        f"bench wedge: products={len(pairs)} term_pairs={ops} "
        f"checksum={checksum}"
    )
    rate = ops / elapsed if elapsed > 0 else float("inf")
    print(f"bench wedge: time={elapsed:.3f}s term_pairs_per_s={rate:.0f}")


def _bench_stabilizer_assembly():
    form = canonical_8form()
    t0 = time.perf_counter()
    rows = stabilizer_system(form, 16)
    elapsed = time.perf_counter() - t0
    checksum = sum(abs(v) for row in rows for v in row.values())
    print(
        f"bench stabilizer-assembly: rows=12870 cols=256 "
        f"nonzero_rows={len(rows)} checksum={checksum}"
    )
    print(f"bench stabilizer-assembly: time={elapsed:.3f}s")


def _bench_bpt_materialize():
    t0 = time.perf_counter()
    form = materialize_bpt_8form.__wrapped__()
    elapsed = time.perf_counter() - t0
    checksum = sum(abs(v) for _, v in form.items())
    print(
        f"bench bpt-materialize: nonzero={form.term_count()} "
        f"checksum={checksum}"
    )
    print(f"bench bpt-materialize: time={elapsed:.3f}s")


def cmd_bench(args) -> int:
    if args.kernel == "wedge":
        _bench_wedge(args.jobs)
    elif args.kernel == "stabilizer-assembly":
        _bench_stabilizer_assembly()
    else:
        _bench_bpt_materialize()
    return 0


def _add_run_flags(parser) -> None:
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property checks")
    parser.add_argument("--samples", type=int, default=25,
                        help="sample count for randomized property checks")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallelism hint; never changes numeric output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spin9",
        description="Exact constructor and verifier for the invariant "
        "8-form on R^16 built from nine symmetric involutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="run an invariant suite and report one line per check"
    )
    p_verify.add_argument(
        "--suite", choices=("all",) + SUITE_NAMES, default="all"
    )
    _add_run_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser(
        "export", help="write a coefficient table, byte-stable across runs"
    )
    p_export.add_argument("form", choices=EXPORT_FORMS)
    p_export.add_argument("--format", choices=("json", "csv"),
                          default="json")
    p_export.add_argument("--out", default=None,
                          help="destination file (default: stdout)")
    p_export.set_defaults(func=cmd_export)

    p_conj = sub.add_parser(
        "conjecture",
        help="report whether the quarter sigma-sum equals the 8-form",
    )
    _add_run_flags(p_conj)
    p_conj.set_defaults(func=cmd_conjecture)

    p_bench = sub.add_parser(
        "bench", help="time one computational kernel (informational only)"
    )
    p_bench.add_argument("kernel", choices=BENCH_KERNELS)
    _add_run_flags(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
