"""Command-line front end.

Exit codes: 0 when every requested property holds exactly, 1 when a property
fails, 2 for usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as cons
from . import jsonio, spectral
from .qarray import QArray, first_offpeak_nonzero, is_pqa, right_autocorr, split, transform
from .quaternion import in_alphabet_c, parse_token
from .search import SearchConfig, SearchError, search_pqa, verify_catalog
from .worked_example import D, D_H, D_TILDE_FIRST, D_TILDE_SECOND, D_V

PASS, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Outcome:
    def __init__(self):
        self.lines: list[str] = []
        self.report: dict = {}
        self.code = PASS

    def say(self, text: str):
        self.lines.append(text)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.report.setdefault("checks", []).append({"name": name, "ok": bool(ok), "detail": detail})
        self.say(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
        if not ok:
            self.code = FAIL
        return ok


def _fmt_index(index) -> str:
    return "(" + ",".join(str(i) for i in index) + ")"


def _load_pair_args(paths: list[str]):
    """One pair file, or two array files."""
    if len(paths) == 1:
        obj = jsonio.read_json(paths[0])
        if not jsonio.is_pair_obj(obj):
            raise UsageError(f"{paths[0]} is not a pair file; pass two array files instead")
        pair = jsonio.pair_from_obj(obj)
        return pair.first, pair.second
    if len(paths) == 2:
        return jsonio.load_array(paths[0]), jsonio.load_array(paths[1])
    raise UsageError("expected a pair file or two array files")


def _write(obj_text: str, path: str | None, out: Outcome):
    if path:
        Path(path).write_text(obj_text)
        out.say(f"wrote {path}")
    else:
        out.say(obj_text.rstrip("\n"))


# --- commands ---------------------------------------------------------------

def cmd_verify_pqa(args, out: Outcome):
    arr = jsonio.load_array(args.file)
    corr = right_autocorr(arr)
    offender = first_offpeak_nonzero(corr)
    out.report["shape"] = list(arr.shape)
    out.report["peak"] = str(corr.data[0])
    detail = f"peak {corr.data[0]}" if offender is None else \
        f"nonzero correlation {corr[offender]} at shift {_fmt_index(offender)}"
    if offender is not None:
        out.report["offender"] = list(offender)
    out.check("perfect quaternion array", offender is None, detail)


def cmd_verify_pcp(args, out: Outcome):
    x, y = _load_pair_args(args.files)
    if x.shape != y.shape:
        raise UsageError(f"shape mismatch: {x.shape} vs {y.shape}")
    if not (x.is_complex() and y.is_complex()):
        raise UsageError("pair members must be complex arrays")
    corr = right_autocorr(x) + right_autocorr(y)
    offender = first_offpeak_nonzero(corr)
    detail = "" if offender is None else \
        f"nonzero summed correlation {corr[offender]} at shift {_fmt_index(offender)}"
    if offender is not None:
        out.report["offender"] = list(offender)
    out.check("periodic complementary pair", offender is None, detail)
    quaternary = all(in_alphabet_c(q) for q in x.data + y.data)
    out.report["quaternary"] = quaternary
    out.say(f"entries in {{1,i,-1,-i}}: {'yes' if quaternary else 'no'}")
    out.report["commutative"] = cons.check_commutativity(x, y)
    out.say(f"commutes under star correlation: {'yes' if out.report['commutative'] else 'no'}")


def cmd_decompose(args, out: Outcome):
    arr = jsonio.load_array(args.file)
    try:
        if args.mode == "right":
            pair = cons.quaternary_pair_right(arr)
        elif args.mode == "left":
            pair = cons.quaternary_pair_left(arr)
        else:
            pair = cons.theorem1_decompose(arr)
    except (cons.NotPQAError, cons.AlphabetError) as exc:
        out.check("decomposable input", False, str(exc))
        return
    out.check("pair is a PCP", pair.verified)
    out.report["pair"] = jsonio.pair_to_obj(pair)
    if args.first:
        jsonio.save_array(pair.first, args.first)
        out.say(f"wrote {args.first}")
    if args.second:
        jsonio.save_array(pair.second, args.second)
        out.say(f"wrote {args.second}")
    if args.output or not (args.first or args.second):
        _write(jsonio.dumps(jsonio.pair_to_obj(pair)), args.output, out)


def cmd_compose(args, out: Outcome):
    bh, bv = _load_pair_args(args.files)
    try:
        arr = cons.compose_pqa(bh, bv)
    except cons.ComposePqaError as exc:
        out.report["condition"] = exc.condition
        out.report["index"] = list(exc.index)
        out.check("composition conditions", False,
                  f"condition ({exc.condition}) fails at {_fmt_index(exc.index)}")
        return
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.check("composed array is a PQA", is_pqa(arr))
    _write(jsonio.dumps(jsonio.array_to_obj(arr)), args.output, out)


def cmd_search(args, out: Outcome):
    try:
        shape = tuple(int(s) for s in args.shape.split(","))
        cfg = SearchConfig(shape, max_results=args.limit, fix_first_entry=not args.all_orbits,
                           time_budget=args.budget, parallel_width=args.workers,
                           hard_cap=args.cap)
    except (ValueError, SearchError) as exc:
        raise UsageError(str(exc)) from exc
    report = search_pqa(cfg)
    out.report["search"] = report.summary()
    out.say(f"shape {list(shape)}: {len(report.results)} PQA(s), {report.nodes} nodes, "
            f"{report.elapsed:.3f}s" + (" [budget exhausted]" if report.budget_exhausted else ""))
    if args.output:
        jsonio.write_jsonl(report.results, args.output)
        out.say(f"wrote {args.output}")
    else:
        for arr in report.results:
            out.say(jsonio.dumps(jsonio.array_to_obj(arr)).rstrip("\n"))
    out.check("all results verified", report.failed == 0)


def cmd_verify_catalog(args, out: Outcome):
    report = verify_catalog(jsonio.read_catalog(args.file))
    out.report["catalog"] = {"passed": report.passed, "failed": report.failed}
    for n, (ok, off) in enumerate(zip(report.verdicts, report.offenders)):
        out.say(f"#{n}: " + ("pass" if ok else f"fail at shift {_fmt_index(off)}"))
    out.check(f"catalog ({report.passed} pass, {report.failed} fail)", report.failed == 0)


def cmd_spectrum(args, out: Outcome):
    obj = jsonio.read_json(args.files[0])
    if jsonio.is_pair_obj(obj) or len(args.files) == 2:
        x, y = _load_pair_args(args.files)
        members = [x, y]
    else:
        members = [jsonio.array_from_obj(obj)]
    for arr in members:
        if not arr.is_complex():
            raise UsageError("spectrum needs complex arrays")
    spectra = [spectral.Spectrum.of(a) for a in members]
    for n, sp in enumerate(spectra):
        out.say(f"member {n}: min {sp.values.min():.6g} max {sp.values.max():.6g}")
    total = spectra[0] if len(spectra) == 1 else spectra[0] + spectra[1]
    if len(spectra) == 2:
        dev = spectral.flatness_deviation(*members)
        out.report["flatness_deviation"] = dev
        out.say(f"sum level 2*size = {2 * total.size}; max deviation from flatness {dev:.3e}")
        out.check("flat summed spectrum", dev <= spectral.default_tolerance(total.size))
    if args.pgm:
        for n, sp in enumerate(spectra):
            path = args.pgm if len(spectra) == 1 else _suffixed(args.pgm, n)
            sp.write_pgm(path)
            out.say(f"wrote {path}")
    if args.csv:
        total.write_csv(args.csv)
        out.say(f"wrote {args.csv}")


def _suffixed(path: str, n: int) -> str:
    p = Path(path)
    return str(p.with_name(f"{p.stem}_{n}{p.suffix}"))


def cmd_transform(args, out: Outcome):
    arr = jsonio.load_array(args.file)
    op = args.op
    try:
        if op in ("conj", "flip"):
            res = transform(arr, op)
        elif op.startswith("shift="):
            res = transform(arr, "shift", [int(r) for r in op[6:].split(",")])
        elif op.startswith("scale="):
            res = transform(arr, "scale", parse_token(op[6:]))
        else:
            raise UsageError(f"unknown op {op!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _write(jsonio.dumps(jsonio.array_to_obj(res)), args.output, out)


def cmd_selftest(args, out: Outcome):
    r = right_autocorr(D)
    out.check("D is a PQA with R_D = 4 delta", r == QArray.delta(D.shape, 4))
    h, v = split(D)
    out.check("split of D matches (D_h, D_v)", (h, v) == (D_H, D_V))
    pair = cons.theorem1_decompose(D)
    out.check("(D_h, D_v) is a PCP", pair.verified)
    out.check("(D_h, D_v) commute under star correlation", pair.commutative)
    right = cons.quaternary_pair_right(D)
    out.check("quaternary pair matches the worked values",
              (right.first, right.second) == (D_TILDE_FIRST, D_TILDE_SECOND))
    out.check("quaternary pair is a PCP", right.verified)
    out.check("quaternary entries in {1,i,-1,-i}",
              all(in_alphabet_c(q) for q in right.first.data + right.second.data))
    out.check("quaternary members are not perfect",
              not spectral.is_perfect_complex(right.first)
              and not spectral.is_perfect_complex(right.second))
    out.check("compose round-trips to D", cons.compose_pqa(right.first, right.second) == D)
    left = cons.quaternary_pair_left(D)
    out.check("left-construction pair is a PCP", left.verified)


# --- wiring -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatpcp", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="print a machine-readable JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-pqa", help="check that an array is a perfect quaternion array")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_pqa)

    p = sub.add_parser("verify-pcp", help="check a periodic complementary pair")
    p.add_argument("files", nargs="+", metavar="FILE", help="pair file, or FILE_X FILE_Y")
    p.set_defaults(func=cmd_verify_pcp)

    p = sub.add_parser("decompose", help="turn a PQA into a complex pair")
    p.add_argument("--mode", choices=("right", "left", "split"), default="right")
    p.add_argument("-o", "--output", help="pair file to write")
    p.add_argument("--first", help="also write the first member here")
    p.add_argument("--second", help="also write the second member here")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compose", help="rebuild a PQA from a quaternary pair")
    p.add_argument("-o", "--output")
    p.add_argument("files", nargs="+", metavar="FILE", help="pair file, or FILE_X FILE_Y")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("search", help="enumerate PQAs over the basic unit quaternions")
    p.add_argument("--shape", required=True, help="comma-separated lengths, e.g. 2,2")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=12, help="maximum number of entries")
    p.add_argument("--all-orbits", action="store_true",
                   help="do not pin the first entry to 1")
    p.add_argument("-o", "--output", help="JSON-lines file for the results")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-catalog", help="re-verify every array in a JSON-lines file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_catalog)

    p = sub.add_parser("spectrum", help="squared DFT magnitudes and flatness")
    p.add_argument("files", nargs="+", metavar="FILE", help="array, pair file, or FILE_X FILE_Y")
    p.add_argument("--pgm", help="write 8-bit PGM heatmap(s)")
    p.add_argument("--csv", help="write (index, value) CSV of the summed spectrum")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("transform", help="conjugate, flip, shift or scale an array")
    p.add_argument("--op", required=True, help="conj | flip | shift=r1,r2 | scale=TOKEN")
    p.add_argument("-o", "--output")
    p.add_argument("file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("selftest", help="replay the 2x2 worked example")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else PASS
    out = Outcome()
    try:
        args.func(args, out)
    except (UsageError, jsonio.FormatError, OSError) as exc:
        out.code = USAGE
        out.report["error"] = str(exc)
        out.say(f"error: {exc}")
    if args.json:
        out.report["command"] = args.command
        out.report["exit_code"] = out.code
        stdout.write(json.dumps(out.report, default=str) + "\n")
    else:
        for line in out.lines:
            stdout.write(line + "\n")
    return out.code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
