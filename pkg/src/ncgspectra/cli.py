"""Command-line front end: spectra, grid verification, integrality searches.

All big integers are serialized as decimal strings in JSON so that 64-bit
consumers never lose precision; characteristic polynomial coefficients exceed
2^63 almost immediately.  Exit codes: 0 success (verify: all matched), 1
verification mismatch found, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .closedform import (
    QuadraticEig,
    SpectrumSpec,
    spectrum_for,
    spectrum_to_polynomial,
)
from .exactalg import char_poly
from .graphs import ALL_KINDS, MatrixKind, NotCompleteMultipartite
from .groups import FAMILIES, GroupSpec, InvalidParameters
from .verify import (
    DEFAULT_ORDER_CAP,
    IntegralityRecord,
    OrderCapExceeded,
    VerificationReport,
    _factor_out,
    oracle_matrix,
    search_integral,
    verify_grid,
)

USAGE_ERROR = 2


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a range like 2..12, got {text!r}"
        ) from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncgspectra",
        description=(
            "Exact distance, distance Laplacian and distance signless "
            "Laplacian spectra of non-commuting graphs of finite groups."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="print one spectrum")
    sp.add_argument("--group", required=True, choices=FAMILIES)
    sp.add_argument("--n", required=True, type=int)
    sp.add_argument("--m", type=int, help="required for metacyclic")
    sp.add_argument("--matrix", required=True, choices=["d", "dl", "dq"])
    sp.add_argument("--method", default="closed", choices=["closed", "oracle"])
    sp.add_argument("--format", default="text", choices=["text", "json", "csv"])
    sp.add_argument("--charpoly", action="store_true",
                    help="include characteristic polynomial coefficients")
    sp.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    sp.add_argument("--out", help="write to a file instead of standard output")

    vp = sub.add_parser("verify", help="closed forms vs oracle over a grid")
    vp.add_argument("--group", required=True, choices=FAMILIES)
    vp.add_argument("--n-range", required=True, type=_parse_range)
    vp.add_argument("--m-range", type=_parse_range, help="required for metacyclic")
    vp.add_argument("--matrix", default="all", choices=["d", "dl", "dq", "all"])
    vp.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    vp.add_argument("--jobs", type=int, default=1)
    vp.add_argument("--format", default="text", choices=["text", "json", "csv"])
    vp.add_argument("--out", help="write to a file instead of standard output")

    ip = sub.add_parser("search-integral", help="scan parameters for integral spectra")
    ip.add_argument("--group", required=True, choices=FAMILIES)
    ip.add_argument("--matrix", required=True, choices=["d", "dl", "dq"])
    ip.add_argument("--max-n", required=True, type=int)
    ip.add_argument("--m", type=int, help="required for metacyclic")
    ip.add_argument("--format", default="csv", choices=["text", "json", "csv"])
    ip.add_argument("--out", help="write to a file instead of standard output")
    return parser


def _make_spec(family: str, n: int, m: int | None) -> GroupSpec:
    if family == "metacyclic":
        if m is None:
            raise InvalidParameters("metacyclic requires --m")
        return GroupSpec.metacyclic(m, n)
    if m is not None:
        raise InvalidParameters(f"--m is only valid for metacyclic, not {family}")
    if family == "q4n":
        return GroupSpec.q4n(n)
    if family == "qd":
        return GroupSpec.qd(n)
    return GroupSpec.u6n(n)


def _spectrum_entries(spectrum: SpectrumSpec) -> list[dict]:
    out = []
    for desc, mult in spectrum.entries:
        if isinstance(desc, QuadraticEig):
            out.append(
                {
                    "type": "quadratic",
                    "sum": str(desc.s),
                    "product": str(desc.p),
                    "mult": mult,
                }
            )
        else:
            out.append({"type": "integer", "value": str(desc), "mult": mult})
    return out


def _params(spec: GroupSpec) -> dict[str, int]:
    return spec.params()


def _emit(lines: list[str], out: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def _csv_lines(header: list[str], rows: list[list]) -> list[str]:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().splitlines()


def _spectrum_text(record: dict) -> list[str]:
    head = " ".join(
        [f"family={record['family']}"]
        + [f"{k}={v}" for k, v in record["params"].items()]
        + [f"matrix={record['matrix']}", f"order={record['order']}"]
    )
    lines = [head]
    for e in record["spectrum"]:
        if e["type"] == "integer":
            lines.append(f"  {e['value']}  multiplicity {e['mult']}")
        else:
            quad = QuadraticEig(int(e["sum"]), int(e["product"]))
            lines.append(f"  roots of {quad}  multiplicity {e['mult']}")
    lines.append(f"integral: {str(record['integral']).lower()}")
    if "charpoly" in record:
        lines.append("charpoly (ascending): " + " ".join(record["charpoly"]))
    return lines


def cmd_spectrum(args: argparse.Namespace) -> int:
    spec = _make_spec(args.group, args.n, args.m)
    kind = MatrixKind(args.matrix)
    closed = spectrum_for(spec, kind)
    record: dict = {
        "family": spec.family,
        "params": _params(spec),
        "matrix": kind.value,
        "order": closed.order,
        "method": args.method,
    }
    include_poly = args.charpoly
    if args.method == "closed":
        record["spectrum"] = _spectrum_entries(closed)
        poly = spectrum_to_polynomial(closed)
    else:
        matrix, _ = oracle_matrix(spec, kind)
        if matrix.n > args.order_cap:
            raise OrderCapExceeded(
                f"{spec.label()} graph order {matrix.n} exceeds --order-cap "
                f"{args.order_cap}"
            )
        poly = char_poly(matrix)
        residual, leftover = _factor_out(poly, closed)
        if residual.coeffs == (1,) and not leftover:
            record["spectrum"] = _spectrum_entries(closed)
        else:
            include_poly = True
    record["integral"] = closed.is_integral
    if include_poly:
        record["charpoly"] = [str(c) for c in poly.coeffs]
    if args.format == "json":
        _emit([_json_line(record)], args.out)
    elif args.format == "csv":
        rows = []
        m = record["params"].get("m", "")
        n = record["params"]["n"]
        for e in record.get("spectrum", []):
            if e["type"] == "integer":
                rows.append(
                    [record["family"], m, n, record["matrix"], record["order"],
                     "integer", e["value"], "", "", e["mult"],
                     str(record["integral"]).lower()]
                )
            else:
                rows.append(
                    [record["family"], m, n, record["matrix"], record["order"],
                     "quadratic", "", e["sum"], e["product"], e["mult"],
                     str(record["integral"]).lower()]
                )
        if not rows:
            rows.append(
                [record["family"], m, n, record["matrix"], record["order"],
                 "charpoly", " ".join(record["charpoly"]), "", "", "",
                 str(record["integral"]).lower()]
            )
        _emit(
            _csv_lines(
                ["family", "m", "n", "matrix", "order", "type", "value",
                 "sum", "product", "mult", "integral"],
                rows,
            ),
            args.out,
        )
    else:
        _emit(_spectrum_text(record), args.out)
    return 0


def _verify_record(report: VerificationReport) -> dict:
    record: dict = {
        "family": report.group.family,
        "params": _params(report.group),
        "matrix": report.kind.value,
        "order": report.order,
        "matched": report.matched,
    }
    if report.error:
        record["error"] = report.error
    elif not report.matched:
        record["diff"] = report.diff_summary
        record["residual"] = str(report.residual)
        record["unmatched_closed"] = [
            {"factor": str(d), "mult": m} for d, m in report.unmatched_closed
        ]
    return record


def cmd_verify(args: argparse.Namespace) -> int:
    lo, hi = args.n_range
    if args.group == "metacyclic":
        if args.m_range is None:
            raise InvalidParameters("metacyclic requires --m-range")
        mlo, mhi = args.m_range
        specs = [
            GroupSpec.metacyclic(m, n)
            for m in range(mlo, mhi + 1)
            for n in range(lo, hi + 1)
        ]
    else:
        if args.m_range is not None:
            raise InvalidParameters("--m-range is only valid for metacyclic")
        specs = [_make_spec(args.group, n, None) for n in range(lo, hi + 1)]
    kinds = ALL_KINDS if args.matrix == "all" else (MatrixKind(args.matrix),)
    reports = verify_grid(specs, kinds, order_cap=args.order_cap, jobs=args.jobs)
    records = [_verify_record(r) for r in reports]
    if args.format == "json":
        _emit([_json_line(r) for r in records], args.out)
    elif args.format == "csv":
        rows = [
            [r["family"], r["params"].get("m", ""), r["params"]["n"], r["matrix"],
             r["order"], str(r["matched"]).lower(),
             r.get("error") or r.get("diff", "")]
            for r in records
        ]
        _emit(
            _csv_lines(
                ["family", "m", "n", "matrix", "order", "matched", "detail"], rows
            ),
            args.out,
        )
    else:
        lines = []
        for rep, rec in zip(reports, records):
            tag = "ok" if rec["matched"] else "MISMATCH"
            if rec.get("error"):
                tag = "ERROR"
            head = (
                f"[{tag}] {rep.group.label()} matrix={rec['matrix']} "
                f"order={rec['order']}"
            )
            lines.append(head)
            if rec.get("error"):
                lines.append(f"    {rec['error']}")
            elif not rec["matched"]:
                lines.append(f"    {rec['diff']}")
                lines.append(f"    residual oracle factor: {rec['residual']}")
                for item in rec["unmatched_closed"]:
                    lines.append(
                        f"    unmatched closed factor: ({item['factor']})^{item['mult']}"
                    )
        ok = sum(1 for r in records if r["matched"])
        lines.append(f"{ok}/{len(records)} matched")
        _emit(lines, args.out)
    return 0 if all(r["matched"] and "error" not in r for r in records) else 1


def _search_record(rec: IntegralityRecord) -> dict:
    return {
        "family": rec.group.family,
        "params": _params(rec.group),
        "matrix": rec.kind.value,
        "predicted": rec.predicted_integral,
        "computed": rec.computed_integral,
        "witness": None if rec.witness is None else str(rec.witness),
        "note": rec.note,
    }


def cmd_search_integral(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise InvalidParameters(f"--max-n must be at least 1, got {args.max_n}")
    specs = []
    for n in range(1, args.max_n + 1):
        try:
            specs.append(_make_spec(args.group, n, args.m))
        except InvalidParameters as exc:
            if "requires --m" in str(exc) or "--m is only valid" in str(exc):
                raise
            continue
    kind = MatrixKind(args.matrix)
    records = search_integral(specs, kind)
    dicts = [_search_record(r) for r in records]
    if args.format == "json":
        _emit([_json_line(d) for d in dicts], args.out)
    elif args.format == "csv":
        rows = [
            [d["family"], d["params"].get("m", ""), d["params"]["n"],
             d["matrix"], d["witness"] or ""]
            for d in dicts
        ]
        _emit(_csv_lines(["family", "m", "n", "matrix", "witness"], rows), args.out)
    else:
        lines = []
        for d in dicts:
            mark = "integral" if d["computed"] else "NOT integral"
            extra = "" if d["predicted"] == d["computed"] else (
                f"  [condition disagrees: predicted="
                f"{str(d['predicted']).lower()}, {d['note']}]"
            )
            params = " ".join(f"{k}={v}" for k, v in d["params"].items())
            witness = f" witness={d['witness']}" if d["witness"] else ""
            lines.append(
                f"{d['family']} {params} matrix={d['matrix']}: {mark}{witness}{extra}"
            )
        if not lines:
            lines.append("no integral parameters found")
        _emit(lines, args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        if args.command == "spectrum":
            return cmd_spectrum(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_search_integral(args)
    except (InvalidParameters, OrderCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except NotCompleteMultipartite as exc:
        print(f"structural violation: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())
