"""Command-line front end: ``henonstego {embed,extract,analyze,bifurcation}``.

Reports go to stdout as ``key: value`` lines, diagnostics to stderr. Exit
status is 0 on success and 1 on any error.
"""

from __future__ import annotations

import argparse
import csv
import os
import re
import sys
from pathlib import Path

from henonstego import chaos, codec, metrics, pgm
from henonstego.errors import StegoError

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


class CliError(Exception):
    def __init__(self, stage, message):
        super().__init__(message)
        self.stage = stage


def parse_key(text: str) -> chaos.ChaosKey:
    """Parse ``x0,y0[,a[,b]]``; omitted ``a`` and ``b`` take the defaults 1.5 and 0.1."""
    parts = [p.strip() for p in text.split(",")]
    if not 2 <= len(parts) <= 4:
        raise ValueError(f"key must have 2 to 4 comma-separated numbers, got {len(parts)}")
    for p in parts:
        if not _NUMBER.fullmatch(p):
            raise ValueError(f"key component {p!r} is not a decimal number")
    return chaos.ChaosKey(*(float(p) for p in parts))


def _key_arg(text):
    try:
        return parse_key(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load(path, stage):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise CliError(stage, f"cannot read {path}: {exc.strerror}") from exc
    try:
        return pgm.read_pgm(data)
    except StegoError as exc:
        raise CliError(stage, f"{path}: {exc}") from exc


def _write_bytes(path, data, stage):
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise CliError(stage, f"cannot write {path}: {exc.strerror}") from exc


def cmd_embed(args, out):
    cover = _load(args.cover, "read cover")
    if args.message is not None:
        # recover the exact argv bytes, no transcoding
        message = os.fsencode(args.message)
    else:
        try:
            message = Path(args.message_file).read_bytes()
        except OSError as exc:
            raise CliError("read message", f"cannot read {args.message_file}: {exc.strerror}") from exc

    if args.raw:
        stego, report = codec.embed_raw(cover, message, args.key)
    else:
        stego, report = codec.embed(cover, codec.StegoPayload.from_message(message), args.key)
    _write_bytes(args.out, pgm.write_pgm(stego, "P5"), "write stego")

    capacity = len(cover)
    print(f"bits_embedded: {report.bits_embedded}", file=out)
    print(f"pixels_touched: {report.pixels_touched}", file=out)
    print(f"pixels_flipped: {report.pixels_flipped}", file=out)
    print(f"capacity_bits: {capacity}", file=out)
    print(f"capacity_used: {report.bits_embedded / capacity!r}", file=out)


def cmd_extract(args, out):
    stego = _load(args.stego, "read stego")
    if args.raw:
        if args.length is None:
            raise CliError("arguments", "--raw requires --length")
        message = codec.extract_raw(stego, args.key, args.length)
    else:
        if args.length is not None:
            raise CliError("arguments", "--length is only meaningful with --raw")
        message = codec.extract(stego, args.key)

    if args.out is None:
        out_bin = getattr(out, "buffer", None)
        if out_bin is not None:
            out_bin.write(message)
            out_bin.flush()
        else:
            out.write(message.decode("latin-1"))
    else:
        _write_bytes(args.out, message, "write message")


def cmd_analyze(args, out):
    cover = _load(args.cover, "read cover")
    stego = _load(args.stego, "read stego")
    report = metrics.compare(cover, stego)
    if args.histogram:
        hc, hs = metrics.histogram(cover), metrics.histogram(stego)
        try:
            with open(args.histogram, "w", newline="") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(["intensity", "cover", "stego"])
                for i in range(256):
                    w.writerow([i, int(hc[i]), int(hs[i])])
        except OSError as exc:
            raise CliError("write histogram", f"cannot write {args.histogram}: {exc.strerror}") from exc
    for line in report.lines():
        print(line, file=out)


def cmd_bifurcation(args, out):
    try:
        pairs = chaos.bifurcation_sweep(
            args.a_min, args.a_max, args.a_steps, args.b,
            args.x0, args.y0, args.transient, args.samples,
        )
    except ValueError as exc:
        raise CliError("bifurcation", str(exc)) from exc
    try:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["a", "x"])
            w.writerows((repr(a), repr(x)) for a, x in pairs)
    except OSError as exc:
        raise CliError("write csv", f"cannot write {args.out}: {exc.strerror}") from exc
    if args.plot:
        from henonstego.plotting import plot_bifurcation

        try:
            plot_bifurcation(pairs, args.plot, b=args.b)
        except OSError as exc:
            raise CliError("write plot", f"cannot write {args.plot}: {exc.strerror}") from exc
    n_a = len({a for a, _ in pairs})
    print(f"rows: {len(pairs)}", file=out)
    print(f"a_values_kept: {n_a}", file=out)
    print(f"a_values_diverged: {args.a_steps - n_a}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="henonstego", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    key_help = "x0,y0[,a[,b]] (a defaults to 1.5, b to 0.1)"

    p = sub.add_parser("embed", help="hide a message in a PGM cover")
    p.add_argument("--cover", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--message")
    src.add_argument("--message-file")
    p.add_argument("--key", required=True, type=_key_arg, help=key_help)
    p.add_argument("--out", required=True, help="stego image, written as P5")
    p.add_argument("--raw", action="store_true", help="omit the 32-bit length header")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover a hidden message")
    p.add_argument("--stego", required=True)
    p.add_argument("--key", required=True, type=_key_arg, help=key_help)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--raw", action="store_true", help="headerless image; requires --length")
    p.add_argument("--length", type=int, help="message length in bytes for --raw")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("analyze", help="MSE/PSNR between cover and stego")
    p.add_argument("--cover", required=True)
    p.add_argument("--stego", required=True)
    p.add_argument("--histogram", help="write 256-bin intensity histograms as CSV")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bifurcation", help="sweep the map parameter a and write (a, x) CSV")
    p.add_argument("--a-min", type=float, default=1.0)
    p.add_argument("--a-max", type=float, default=1.6)
    p.add_argument("--a-steps", type=int, default=600)
    p.add_argument("--b", type=float, default=0.1)
    p.add_argument("--x0", type=float, default=0.0)
    p.add_argument("--y0", type=float, default=0.0)
    p.add_argument("--transient", type=int, default=1000)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--plot", help="also render the diagram to this image file")
    p.set_defaults(func=cmd_bifurcation)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except CliError as exc:
        print(f"henonstego {args.command}: {exc.stage}: {exc}", file=sys.stderr)
        return 1
    except StegoError as exc:
        print(f"henonstego {args.command}: {exc.stage}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
