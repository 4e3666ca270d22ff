"""Command-line entry point: ``fuzzylens <subcommand> ...``."""

from __future__ import annotations

import argparse
import io
import sys
import warnings
from pathlib import Path
from typing import Optional, Sequence

from .config import ConfigError, load_config
from .enhancement import build_lut, equalize, fuzzy_enhance, histogram, lut_values
from .imageio import ImageFormatError, atomic_write, read_image, write_image
from .report import emit_report, rows_for


def _csv(header: str, rows) -> str:
    buf = io.StringIO()
    buf.write(header + "\n")
    for a, b in rows:
        buf.write(f"{a},{b}\n")
    return buf.getvalue()


def _engine(args):
    cfg = load_config(args.config)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return cfg, cfg.build_engine()


def cmd_enhance(args) -> None:
    cfg, engine = _engine(args)
    img = read_image(args.input, luma=cfg.luma_conversion)
    write_image(fuzzy_enhance(img, engine), args.output)


def cmd_histeq(args) -> None:
    write_image(equalize(read_image(args.input)), args.output)


def cmd_histogram(args) -> None:
    counts = histogram(read_image(args.input))
    atomic_write(args.output, _csv("intensity,count", enumerate(counts.tolist())))


def cmd_lut(args) -> None:
    _, engine = _engine(args)
    if args.raw:
        values = lut_values(engine)
        rows = ((v, f"{x:.6f}") for v, x in enumerate(values.tolist()))
    else:
        rows = enumerate(build_lut(engine).tolist())
    atomic_write(args.output, _csv("input,output", rows))


def cmd_compare(args) -> None:
    cfg, engine = _engine(args)
    src = Path(args.input)
    original = read_image(src, luma=cfg.luma_conversion)
    results = {"histeq": equalize(original), "fuzzy": fuzzy_enhance(original, engine)}
    rows = rows_for(src.stem, original, results)
    if args.save_dir:
        out_dir = Path(args.save_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        ext = ".png" if src.suffix.lower() == ".png" else ".pgm"
        for method, img in results.items():
            write_image(img, out_dir / f"{src.stem}_{method}{ext}")
    text = emit_report(rows, args.format, args.output)
    if args.output is None:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzylens",
        description="Fuzzy-logic contrast enhancement and histogram equalization for grayscale images.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def config_opt(sp):
        sp.add_argument(
            "--config",
            help="JSON config file (default: $FUZZYLENS_CONFIG, else the built-in rule base)",
        )

    sp = sub.add_parser("enhance", help="fuzzy contrast enhancement")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", required=True)
    config_opt(sp)
    sp.set_defaults(func=cmd_enhance)

    sp = sub.add_parser("histeq", help="global histogram equalization")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_histeq)

    sp = sub.add_parser("histogram", help="write the 256-bin histogram as CSV")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_histogram)

    sp = sub.add_parser("lut", help="write the compiled intensity table as CSV")
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--raw", action="store_true", help="emit pre-rounding values")
    config_opt(sp)
    sp.set_defaults(func=cmd_lut)

    sp = sub.add_parser("compare", help="run both methods and report metrics")
    sp.add_argument("input")
    sp.add_argument("--format", choices=("csv", "markdown"), default="csv")
    sp.add_argument("-o", "--output", help="report file (default: stdout)")
    sp.add_argument("--save-dir", help="also save the enhanced images here")
    config_opt(sp)
    sp.set_defaults(func=cmd_compare)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (ConfigError, ImageFormatError, ValueError, OSError) as exc:
        print(f"fuzzylens {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
