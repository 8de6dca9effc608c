"""Command-line interface: build surfaces, enumerate classes, compute
systoles and kissing numbers, classify systoles, evaluate bounds, and run
the verification battery.

Exit codes: 0 success, 1 usage error, 2 invalid surface, 3 enumeration
budget exceeded (a partial report is still emitted with complete=false),
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
import time

from . import enumeration, formulas, halfplane, topology
from .enumeration import DEFAULT_NODE_CAP
from .errors import (
    BadGenusError,
    BudgetExceededError,
    DisconnectedError,
    NoneApplicableError,
    SignatureError,
    SurfaceFormatError,
    UnknownPresetError,
    UnpairedSideError,
    UsageError,
    ZeroShearError,
)
from .surfaces import PRESET_NAMES, load_surface, preset, save_surface

__all__ = ["main", "console_main", "run_verify_battery"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="zeroshear", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_surface_opts(p):
        p.add_argument("--preset", choices=PRESET_NAMES)
        p.add_argument("--g", type=int, help="genus for the genus preset")
        p.add_argument("--file", help="surface file path")

    def add_common(p, surface=True):
        if surface:
            add_surface_opts(p)
        p.add_argument("--trace-max", type=int, default=None)
        p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("build", help="construct a preset and write a surface file")
    add_surface_opts(p)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    for name, help_text in (
        ("enumerate", "all classes below a trace bound"),
        ("systole", "shortest essential classes, certified"),
        ("kiss", "number of systole classes"),
        ("classify", "two-cusp / cusp-bounding / generic systole labels"),
    ):
        p = sub.add_parser(name, help=help_text)
        add_common(p)

    p = sub.add_parser("bounds", help="evaluate every bound formula")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--cusps", type=int, required=True)
    p.add_argument("--length", type=float, default=None)
    p.add_argument("--trace", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=20240601)

    return parser


def _load_requested_surface(args):
    given = [x for x in (args.preset, args.file) if x]
    if len(given) != 1:
        raise UsageError("exactly one of --preset or --file is required")
    if args.preset:
        if args.preset == "genus":
            if args.g is None or args.g < 2:
                raise UsageError("--preset genus needs --g >= 2")
            return preset("genus", args.g), {"preset": "genus", "g": args.g}
        return preset(args.preset), {"preset": args.preset}
    return load_surface(args.file), {"file": args.file}


def _class_rows(classes):
    """Report rows grouped by canonical word: (word, trace, length, peripheral, count)."""
    grouped: dict[str, dict] = {}
    for c in classes:
        row = grouped.setdefault(
            str(c.word),
            {"word": str(c.word), "trace": c.trace, "length": c.length,
             "peripheral": c.peripheral, "count": 0},
        )
        row["count"] += 1
    return sorted(grouped.values(), key=lambda r: (r["trace"], r["word"]))


def _topology_dict(surface):
    topo = surface.topology()
    return {
        "genus": topo.genus,
        "cusps": topo.cusps,
        "triangles": topo.triangles,
        "edges": topo.edges,
        "face_census": {str(k): v for k, v in sorted(surface.dual.face_census().items())},
    }


def _cmd_build(args):
    surface, request = _load_requested_surface(args)
    save_surface(surface, args.out)
    return request, {"written": args.out, "topology": _topology_dict(surface)}, True


def _cmd_enumerate(args):
    surface, request = _load_requested_surface(args)
    if args.trace_max is None:
        raise UsageError("enumerate needs --trace-max")
    request["trace_max"] = args.trace_max
    classes = enumeration.enumerate_classes(
        surface, args.trace_max, node_cap=args.node_cap, threads=args.threads
    )
    return request, {
        "topology": _topology_dict(surface),
        "classes": _class_rows(classes),
        "class_total": len(classes),
    }, True


def _systole_payload(surface, args):
    res = enumeration.systole(
        surface, trace_max=args.trace_max, node_cap=args.node_cap, threads=args.threads
    )
    return res, {
        "topology": _topology_dict(surface),
        "systole": {
            "length": res.length,
            "trace": res.trace,
            "trace_budget": res.trace_budget,
            "bound_used": res.bound_used,
            "kissing_number": res.kissing_number,
            "classes": _class_rows(res.classes),
        },
    }


def _cmd_systole(args):
    surface, request = _load_requested_surface(args)
    _, payload = _systole_payload(surface, args)
    return request, payload, True


def _cmd_kiss(args):
    surface, request = _load_requested_surface(args)
    res, payload = _systole_payload(surface, args)
    payload["kissing_number"] = res.kissing_number
    return request, payload, True


def _cmd_classify(args):
    surface, request = _load_requested_surface(args)
    res, payload = _systole_payload(surface, args)
    labels = topology.classify_systoles(surface, result=res)
    rows = []
    for cls, label in sorted(labels.items(), key=lambda kv: kv[0].sort_key()):
        witness: list = []
        if label.label == "A":
            witness = [int(x) for x in label.witnesses]
        elif label.label == "B":
            witness = [" ".join(map(str, w)) for w in label.witnesses]
        rows.append(
            {
                "word": str(cls.word),
                "trace": cls.trace,
                "label": label.label,
                "witnesses": witness,
                "representative": " ".join(map(str, cls.darts)),
            }
        )
    payload["classification"] = rows
    payload["label_totals"] = {
        lab: sum(1 for r in rows if r["label"] == lab) for lab in ("A", "B", "C")
    }
    return request, payload, True


def _cmd_bounds(args):
    report = formulas.bound_report(args.genus, args.cusps, args.length, args.trace)
    request = {
        "genus": args.genus,
        "cusps": args.cusps,
        "length": args.length,
        "trace": args.trace,
    }
    return request, {"bounds": report.to_dict()}, True


# -- the verification battery ---------------------------------------------------------

def _check(name, passed, detail):
    return {"check": name, "status": "pass" if passed else "fail", **detail}


def run_verify_battery(seed=20240601):
    """All half-plane verifications, the bound audit, and the preset sweep.

    Returns (sections, ok).  Expected documentation flags (the small-genus
    excess of the case maximum over 2 log g + 8) are reported with status
    'pass' and an ``expected_flag`` marker.
    """
    rng = random.Random(seed)
    checks = []

    # half-plane: two-cusp quadrilateral vs closed form and formulas module
    worst = 0.0
    for _ in range(100):
        r = rng.uniform(0.1, 5.0)
        measured = halfplane.verify_two_cusp_pants(r)
        closed = 4.0 * math.acosh(math.exp(r))
        pair, _ = formulas.horoball_tangency_lengths(r)
        worst = max(worst, abs(measured - closed), abs(measured - pair))
    checks.append(_check(
        "two_cusp_quadrilateral", worst < 1e-9,
        {"max_deviation": worst, "samples": 100, "note": halfplane.TWO_CUSP_RADIUS_NOTE},
    ))

    worst = 0.0
    worst_d = 0.0
    for _ in range(100):
        r = rng.uniform(1.0, 5.0)
        a = rng.uniform(0.05, 0.5)
        res = halfplane.verify_self_tangency(r, a)
        if not res.degenerate_a:
            worst = max(worst, abs(res.length_a - 2.0 * math.acosh(a * math.exp(r))))
        if not res.degenerate_b:
            worst = max(worst, abs(res.length_b - 2.0 * math.acosh((1 - a) * math.exp(r))))
    for r in [1.0 + 0.5 * k for k in range(9)]:
        res = halfplane.verify_self_tangency(r, 0.5)
        if not res.degenerate_a:
            want = formulas.pants_quantities(res.length_a).big_d
            worst_d = max(worst_d, abs(res.cusp_to_alpha - want))
    checks.append(_check(
        "self_tangency_pants", worst < 1e-9 and worst_d < 1e-9,
        {"max_deviation": worst, "max_cusp_distance_deviation": worst_d, "samples": 100},
    ))

    worst = -1.0
    violated = False
    grid = [2.0 + 0.5 * k for k in range(21)]
    for ell in grid:
        arc = halfplane.horocyclic_arc(ell)
        bound = 1.0 / math.cosh(ell / 4.0)
        violated = violated or arc < bound - 1e-6
        worst = max(worst, abs(arc - bound))
    checks.append(_check(
        "horocyclic_arc", not violated,
        {"max_equality_gap": worst, "grid": [grid[0], grid[-1]], "points": len(grid)},
    ))

    worst = 0.0
    for _ in range(100):
        ell = rng.uniform(0.5, 8.0)
        h = rng.uniform(0.05, 1.0) * ell
        angle = halfplane.verify_angle_relation(ell, h)
        want = math.asin(min(1.0, math.sinh(h / 2.0) / math.sinh(ell / 2.0)))
        worst = max(worst, abs(angle - want))
    checks.append(_check("right_triangle_angle", worst < 1e-9,
                         {"max_deviation": worst, "samples": 100}))

    # bound audit: the three case values against the packaged 2 log g + 8
    table = formulas.genus_bound_case_table(10)
    flagged = [row["g"] for row in table if row["exceeds"]]
    checks.append({
        "check": "genus_bound_packaging_audit",
        "status": "pass",
        "expected_flag": 1 in flagged,
        "flagged_genera": flagged,
        "rows": table,
        "note": "case maximum exceeds 2 log g + 8 at small genus; "
                "documented discrepancy, not a computation failure",
    })

    # preset sweep: computed systoles against every applicable bound
    sweep = []
    ok_sweep = True
    for name, g in (("torus16", None), ("sphere4", None), ("genus", 2), ("genus", 3)):
        surface = preset(name, g)
        res = enumeration.systole(surface)
        topo = surface.topology()
        sig = formulas.Signature(topo.genus, topo.cusps)
        sys_bounds = formulas.sys_upper(sig)
        caps = formulas.kiss_upper(sig, res.length, trace=res.trace)
        entry_ok = all(res.length <= v + 1e-9 for v in sys_bounds.candidates().values())
        if caps.total_by_length is not None:
            entry_ok &= res.kissing_number <= caps.total_by_length
        if caps.total_by_signature is not None:
            entry_ok &= res.kissing_number <= caps.total_by_signature
        if caps.sphere is not None:
            entry_ok &= res.kissing_number <= caps.sphere
        sweep.append({
            "surface": name if g is None else f"{name}(g={g})",
            "signature": [topo.genus, topo.cusps],
            "systole": res.length,
            "trace": res.trace,
            "kissing_number": res.kissing_number,
            "sys_upper": sys_bounds.candidates(),
            "total_by_length": caps.total_by_length,
            "total_by_signature": caps.total_by_signature,
            "sphere": caps.sphere,
            "ok": entry_ok,
        })
        ok_sweep &= entry_ok
    checks.append({"check": "preset_bound_sweep", "status": "pass" if ok_sweep else "fail",
                   "surfaces": sweep})

    # the two-cusp cap coincidence at (1, 16), systole trace 34
    caps = formulas.kiss_upper(formulas.Signature(1, 16), 2 * math.acosh(17.0), trace=34)
    coincide = caps.a_cap == 48.0 and caps.a_cap_euler == 48.0
    checks.append(_check("two_cusp_cap_coincidence", coincide,
                         {"a_cap": caps.a_cap, "a_cap_euler": caps.a_cap_euler}))

    ok = all(c["status"] == "pass" for c in checks)
    return checks, ok


def _cmd_verify(args):
    checks, ok = run_verify_battery(args.seed)
    for c in checks:
        line = f"[{c['status'].upper():4}] {c['check']}"
        if c.get("expected_flag"):
            line += "  (expected flag: case-2 value exceeds 2 log g + 8 at g = 1)"
        print(line, file=sys.stderr)
        if c["check"] == "genus_bound_packaging_audit":
            for row in c["rows"]:
                marker = "  <-- exceeds 2 log g + 8" if row["exceeds"] else ""
                print(
                    f"    g={row['g']:2d}  cases=({row['case1']:.5f}, {row['case2']:.5f}, "
                    f"{row['case3']:.5f})  max={row['max']:.5f}  "
                    f"packaged={row['packaged']:.5f}{marker}",
                    file=sys.stderr,
                )
    return {"seed": args.seed}, {"checks": checks, "all_passed": ok}, ok


_COMMANDS = {
    "build": _cmd_build,
    "enumerate": _cmd_enumerate,
    "systole": _cmd_systole,
    "kiss": _cmd_kiss,
    "classify": _cmd_classify,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
}

_CSV_COLUMNS = {
    "enumerate": ("word", "trace", "length", "peripheral", "count"),
    "systole": ("word", "trace", "length", "peripheral", "count"),
    "kiss": ("word", "trace", "length", "peripheral", "count"),
    "classify": ("word", "trace", "label", "witnesses", "representative"),
}


def _csv_rows(command, results):
    if command in ("systole", "kiss"):
        return results["systole"]["classes"]
    if command == "enumerate":
        return results["classes"]
    if command == "classify":
        rows = []
        for r in results["classification"]:
            r = dict(r)
            r["witnesses"] = ";".join(map(str, r["witnesses"]))
            rows.append(r)
        return rows
    if command == "bounds":
        flat = []

        def walk(prefix, obj):
            if isinstance(obj, dict):
                for k, v in obj.items():
                    walk(f"{prefix}.{k}" if prefix else k, v)
            elif isinstance(obj, (list, tuple)):
                for i, v in enumerate(obj):
                    walk(f"{prefix}.{i}", v)
            else:
                flat.append({"key": prefix, "value": obj})

        walk("", results["bounds"])
        return flat
    if command == "verify":
        return [
            {"check": c["check"], "status": c["status"]} for c in results["checks"]
        ]
    return [{"key": k, "value": v} for k, v in results.items()]


def _emit(report, command, fmt, out):
    if fmt == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        rows = _csv_rows(command, report["results"])
        columns = _CSV_COLUMNS.get(command) or (list(rows[0].keys()) if rows else ["key", "value"])
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1

    started = time.monotonic()
    complete = True
    exit_code = 0
    try:
        handler = _COMMANDS[args.command]
        request, results, ok = handler(args)
        if args.command == "verify" and not ok:
            exit_code = 4
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (BadGenusError, UnknownPresetError, SignatureError, NoneApplicableError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (SurfaceFormatError, UnpairedSideError, DisconnectedError) as exc:
        print(f"invalid surface: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        request = {"command": args.command}
        results = {
            "classes": _class_rows(exc.partial),
            "nodes": exc.nodes,
            "error": str(exc),
        }
        complete = False
        exit_code = 3
    except ZeroShearError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    report = {
        "command": args.command,
        "request": request,
        "results": results,
        "complete": complete,
        "threads": enumeration._resolve_threads(getattr(args, "threads", None)),
        "kernel": enumeration.kernel_name(),
        "timing_seconds": time.monotonic() - started,
    }
    report_out = getattr(args, "out", None)
    if args.command == "build":
        report_out = None  # --out names the surface file; the report goes to stdout
    _emit(report, args.command, getattr(args, "format", "json"), report_out)
    return exit_code


def console_main():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()
