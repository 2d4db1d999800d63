"""Command-line front door: build lineups to SVG + key files, reveal
keys, compute visual p-values, and launch the session service.

Exit codes: 0 success, 2 usage error, 3 data error (parsing, schema,
spec validation, key verification), 4 generation error (model fitting or
null generation during the build).
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import serialize
from .errors import LineupError
from .lineup import build_lineup, compute_digest, spec_for_kind, validate_spec, visual_p_value
from .render import render_lineup
from .table import parse_csv

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_GENERATION = 4


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def atomic_write_text(path: Path, text: str) -> None:
    """Write via a sibling temp file and rename, so the target is either
    absent or complete."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name + ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lineuplab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_lineup = sub.add_parser("lineup", help="build a lineup, writing an SVG and a key file")
    p_lineup.add_argument("--data", required=True, help="input CSV path")
    p_lineup.add_argument(
        "--kind",
        required=True,
        choices=["boxplot", "scatter_residual", "binned_residual", "empirical_logit", "qq"],
    )
    p_lineup.add_argument("--response", required=True)
    p_lineup.add_argument("--group", help="grouping column (boxplot)")
    p_lineup.add_argument("--predictor", help="predictor column (regression kinds)")
    p_lineup.add_argument("--degree", type=int, default=1, help="logistic design degree (1 or 2)")
    p_lineup.add_argument("--bins", type=int, help="bin count for binned_residual")
    p_lineup.add_argument("--groups", type=int, default=5, help="group count for empirical_logit")
    p_lineup.add_argument("--m", type=int, default=20, help="panel count")
    p_lineup.add_argument("--seed", type=int, default=0)
    p_lineup.add_argument("--out", required=True, help="output SVG path")
    p_lineup.add_argument("--key", required=True, help="output answer-key JSON path")
    p_lineup.add_argument("--rorschach", action="store_true", help="all panels null")
    p_lineup.set_defaults(_parser=p_lineup)

    p_reveal = sub.add_parser("reveal", help="verify a key file and print the data panel")
    p_reveal.add_argument("--key", required=True, help="answer-key JSON path")

    p_pvalue = sub.add_parser("pvalue", help="exact binomial visual p-value")
    p_pvalue.add_argument("--correct", type=int, required=True)
    p_pvalue.add_argument("--observers", type=int, required=True)
    p_pvalue.add_argument("--m", type=int, default=20)

    p_serve = sub.add_parser("serve", help="run the classroom session service")
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--store", default=None, help="session store directory")
    p_serve.add_argument("--ui", default=None, help="built web client to mount at /ui")
    return parser


def _cmd_lineup(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "boxplot" and not args.group:
        args._parser.error("--group is required for kind boxplot")
    if kind in ("scatter_residual", "binned_residual", "empirical_logit") and not args.predictor:
        args._parser.error(f"--predictor is required for kind {kind}")

    params = {"response": args.response}
    if kind == "boxplot":
        params["group"] = args.group
    elif kind == "scatter_residual":
        params["predictor"] = args.predictor
    elif kind == "binned_residual":
        params.update(predictor=args.predictor, degree=args.degree, n_bins=args.bins)
    elif kind == "empirical_logit":
        params.update(predictor=args.predictor, degree=args.degree, g=args.groups)

    try:
        text = Path(args.data).read_text(encoding="utf-8")
    except OSError as exc:
        return _fail(f"cannot read {args.data}: {exc}", EXIT_DATA)
    try:
        ds = parse_csv(text, name=Path(args.data).stem)
        spec = spec_for_kind(kind, m=args.m, seed=args.seed, rorschach=args.rorschach, **params)
        validate_spec(ds, spec)
    except LineupError as exc:
        return _fail(str(exc), EXIT_DATA)

    try:
        bundle = build_lineup(ds, spec)
        svg = render_lineup(bundle)
    except LineupError as exc:
        return _fail(str(exc), EXIT_GENERATION)

    try:
        atomic_write_text(Path(args.out), svg)
        atomic_write_text(Path(args.key), serialize.key_to_json(bundle.key))
    except OSError as exc:
        return _fail(f"write failed: {exc}", EXIT_DATA)
    return EXIT_OK


def _cmd_reveal(args: argparse.Namespace) -> int:
    try:
        text = Path(args.key).read_text(encoding="utf-8")
    except OSError as exc:
        return _fail(f"cannot read key file: {exc}", EXIT_DATA)
    try:
        key = serialize.key_from_json(text)
    except LineupError as exc:
        return _fail(f"bad key file: {exc}", EXIT_DATA)
    if key.digest != compute_digest(key.seed, key.data_panel):
        return _fail("key digest does not match its contents", EXIT_DATA)
    if key.data_panel is None:
        print("rorschach")
    else:
        print(key.data_panel)
    return EXIT_OK


def _cmd_pvalue(args: argparse.Namespace) -> int:
    try:
        result = visual_p_value(args.correct, args.observers, args.m)
    except LineupError as exc:
        return _fail(str(exc), EXIT_DATA)
    print(f"{result.p:g}")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    store = args.store or os.environ.get("LINEUP_STORE_DIR") or "lineup-store"
    port = args.port if args.port is not None else int(os.environ.get("LINEUP_PORT", "8000"))
    ui = args.ui or os.environ.get("LINEUP_UI_DIR")
    app = create_app(Path(store), Path(ui) if ui else None)
    uvicorn.run(app, host="0.0.0.0", port=port, log_level="info")
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "lineup":
        return _cmd_lineup(args)
    if args.command == "reveal":
        return _cmd_reveal(args)
    if args.command == "pvalue":
        return _cmd_pvalue(args)
    return _cmd_serve(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
