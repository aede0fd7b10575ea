"""Command line interface: spectra, batch, heatmap subcommands."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .analysis import heatmap_table, symmetry_report
from .errors import ComputationError, DiagramError, KhovlapError, PDSyntaxError
from .pd import parse_pd, serialize_pd
from .spectral import spectra_table

EXIT_OK = 0
EXIT_COMPUTE = 1
EXIT_INPUT = 2


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="khovlap", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--tol", type=float, default=1e-6,
                        help="tolerance for spectrum comparisons")
        sp.add_argument("--precision", type=int, default=6,
                        help="significant figures for printed floats")
        sp.add_argument("--cache-dir", type=Path, default=None,
                        help="directory for content-addressed result cache")

    sp = sub.add_parser("spectra", help="spectra and symmetry report for one diagram")
    sp.add_argument("pd", help="PD code, e.g. 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'")
    sp.add_argument("--r", type=int, default=None, help="restrict to one homological degree")
    sp.add_argument("--q", type=int, default=None, help="restrict to one quantum degree")
    common(sp)

    bp = sub.add_parser("batch", help="process a file of 'name: PD' lines")
    bp.add_argument("table", type=Path)
    bp.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(bp)

    hp = sub.add_parser("heatmap", help="least nonzero eigenvalue per (r, q) cell, as CSV")
    hp.add_argument("pd")
    common(hp)
    return p


def _cache_key(pd_text: str, kind: str) -> str:
    payload = f"{__version__}\n{kind}\n{pd_text}".encode()
    return hashlib.sha256(payload).hexdigest()


def _cache_read(cache_dir: Path | None, key: str) -> str | None:
    if cache_dir is None:
        return None
    path = cache_dir / f"{key}.json"
    try:
        return path.read_text()
    except OSError:
        return None


def _cache_write(cache_dir: Path | None, key: str, text: str) -> None:
    if cache_dir is None:
        return
    cache_dir.mkdir(parents=True, exist_ok=True)
    # write-then-rename so concurrent runs never see a torn file
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, cache_dir / f"{key}.json")
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


def _spectra_payload(pd_text: str, args, knot: str = "") -> str:
    d = parse_pd(pd_text)
    canonical = serialize_pd(d)
    want_r = getattr(args, "r", None)
    want_q = getattr(args, "q", None)
    key = _cache_key(canonical, f"spectra:{knot}:r={want_r}:q={want_q}:tol={args.tol}")
    cached = _cache_read(args.cache_dir, key)
    if cached is not None:
        return cached
    report = symmetry_report(d, tol=args.tol, knot=knot)
    if want_r is not None or want_q is not None:
        cells = tuple(
            c
            for c in report.cells
            if (want_r is None or c.r == want_r) and (want_q is None or c.q == want_q)
        )
        report = type(report)(report.knot, all(c.verdict == "symmetric" for c in cells), cells)
    text = report.to_json(precision=args.precision)
    _cache_write(args.cache_dir, key, text)
    return text


def _spectra_csv(pd_text: str, args) -> str:
    import csv
    import io

    d = parse_pd(pd_text)
    table = spectra_table(d)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "q", "betti", "lambda", "eigenvalues"])
    for (r, q), spec in sorted(table.items()):
        if args.r is not None and r != args.r:
            continue
        if args.q is not None and q != args.q:
            continue
        lam = spec.least_nonzero
        w.writerow(
            [
                r,
                q,
                spec.zero_multiplicity,
                "" if lam is None else f"{lam:.{args.precision}g}",
                " ".join(f"{v:.{args.precision}g}" for v in spec.values),
            ]
        )
    return buf.getvalue()


def _cmd_spectra(args) -> int:
    if args.format == "csv":
        sys.stdout.write(_spectra_csv(args.pd, args))
    else:
        print(_spectra_payload(args.pd, args))
    return EXIT_OK


def _batch_one(item: tuple[str, str], args) -> tuple[str, str | None, str | None]:
    name, pd_text = item
    try:
        return name, _spectra_payload(pd_text, args, knot=name), None
    except KhovlapError as exc:
        return name, None, f"{type(exc).__name__}: {exc}"


def _batch_entries(text: str) -> list[tuple[str, str]]:
    # split lines here rather than via parse_knot_table so one malformed
    # entry fails alone instead of aborting the whole batch
    entries = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise PDSyntaxError(f"line {lineno}: expected 'name: pd-code'", 0)
        name, code = line.split(":", 1)
        entries.append((name.strip(), code.strip()))
    return sorted(entries)


def _cmd_batch(args) -> int:
    entries = _batch_entries(args.table.read_text())
    results: list[tuple[str, str | None, str | None]] = []
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(partial(_batch_one, args=args), entries))
    else:
        results = [_batch_one(item, args) for item in entries]

    failed = False
    reports = []
    for name, payload, err in results:
        if err is not None:
            failed = True
            print(f"{name}: FAILED: {err}", file=sys.stderr)
        else:
            reports.append(json.loads(payload))
    summary = {
        "symmetric": sum(1 for rep in reports if rep["all_symmetric"]),
        "asymmetric": sum(1 for rep in reports if not rep["all_symmetric"]),
        "failed": sum(1 for _, payload, _err in results if payload is None),
    }
    print(json.dumps({"knots": reports, "summary": summary}, indent=2))
    return EXIT_COMPUTE if failed else EXIT_OK


def _cmd_heatmap(args) -> int:
    d = parse_pd(args.pd)
    sys.stdout.write(heatmap_table(d).to_csv(precision=args.precision))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"spectra": _cmd_spectra, "batch": _cmd_batch, "heatmap": _cmd_heatmap}
    try:
        return handlers[args.command](args)
    except PDSyntaxError as exc:
        print(f"error: invalid PD code at byte {exc.offset}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DiagramError as exc:
        print(f"error: invalid diagram: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ComputationError, KhovlapError) as exc:
        print(f"error: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    raise SystemExit(main())
