"""Command line interface: embed, extract, compare, weights, codebook.

Exit codes: 0 success, 1 operational error (missing/invalid files, capacity
exceeded, undecodable stego), 2 usage error (bad flags, bad system spec,
plane out of range).
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import codec, imageio, metrics
from .codec import MessageFrame
from .imageio import GrayImage
from .numsys import (NumberSystem, codebook, codeword_to_str, fibonacci_numbers,
                     make_binary_system, make_fibonacci_system,
                     make_prime_system, prime_weights)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SystemSpec:
    """Parsed --system value: "binary", "prime" or "fib:<p>" with p >= 1."""

    kind: str
    p: int | None = None

    @classmethod
    def parse(cls, text: str) -> "SystemSpec":
        if text == "binary":
            return cls("binary")
        if text == "prime":
            return cls("prime")
        if text.startswith("fib:"):
            try:
                p = int(text[4:])
            except ValueError:
                p = 0
            if p >= 1:
                return cls("fib", p)
        raise ValueError(f"system must be 'binary', 'prime' or 'fib:<p>' with p >= 1, got {text!r}")

    def __str__(self) -> str:
        return f"fib:{self.p}" if self.kind == "fib" else self.kind

    def build(self, k: int = 8) -> NumberSystem:
        if self.kind == "binary":
            return make_binary_system(k)
        if self.kind == "prime":
            return make_prime_system(k)
        return make_fibonacci_system(self.p, k)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.6f}" if math.isfinite(x) else "inf"
    return str(x)


def _check_plane(system: NumberSystem, plane: int) -> None:
    if not 0 <= plane < system.plane_count:
        raise UsageError(
            f"plane must be in 0..{system.plane_count - 1} for {system.label} "
            f"(8-bit input), got {plane}")


def _read_image(path: str) -> GrayImage:
    return imageio.read_pgm(Path(path).read_bytes())


def cmd_embed(args) -> int:
    cover = _read_image(args.cover)
    system = args.system.build()
    _check_plane(system, args.plane)
    frame = MessageFrame(Path(args.message).read_bytes())
    stego, report = codec.embed_message(cover, system, args.plane, frame)
    Path(args.out).write_bytes(imageio.write_pgm(stego))
    print(f"plane={report.plane}")
    print(f"bits_embedded={report.bits_embedded}")
    print(f"pixels_visited={report.pixels_visited}")
    print(f"pixels_skipped={report.pixels_skipped}")
    print(f"capacity_bits={report.capacity_bits}")
    print(f"mse={_fmt(metrics.mse(cover, stego))}")
    print(f"psnr_db={_fmt(metrics.psnr(cover, stego))}")
    return 0


def cmd_extract(args) -> int:
    stego = _read_image(args.cover)
    system = args.system.build()
    _check_plane(system, args.plane)
    frame = codec.extract_message(stego, system, args.plane)
    Path(args.out).write_bytes(frame.payload)
    print(f"plane={args.plane}")
    print(f"payload_bytes={len(frame.payload)}")
    return 0


@dataclass(frozen=True)
class CompareRow:
    system: str
    plane: int
    weight: int
    capacity_bits: int
    bits_embedded: int
    mse: float
    psnr_db: float
    wse: int
    wmse: int
    psnr_worst_db: float


def run_compare(cover: GrayImage, message: bytes, k: int = 8) -> list[CompareRow]:
    """Embed the message (truncated to capacity) in every plane of every
    system and collect the distortion statistics."""
    rows = []
    for spec in (SystemSpec("binary"), SystemSpec("fib", 1), SystemSpec("prime")):
        system = spec.build(k)
        for plane in range(system.plane_count):
            cap = codec.capacity(cover, system, plane)
            if cap >= codec.HEADER_BITS:
                payload = message[: (cap - codec.HEADER_BITS) // 8]
                stego, report = codec.embed_message(
                    cover, system, plane, MessageFrame(payload))
                embedded = report.bits_embedded
            else:
                stego, embedded = cover, 0
            rows.append(CompareRow(
                system=str(spec),
                plane=plane,
                weight=system.weights[plane],
                capacity_bits=cap,
                bits_embedded=embedded,
                mse=metrics.mse(cover, stego),
                psnr_db=metrics.psnr(cover, stego),
                wse=metrics.wse(system, plane),
                wmse=metrics.wmse(cover.width, cover.height, system, plane),
                psnr_worst_db=metrics.psnr_worst(k, system, plane),
            ))
    return rows


def cmd_compare(args) -> int:
    cover = _read_image(args.cover)
    message = Path(args.message).read_bytes()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["system", "plane", "weight", "capacity_bits", "bits_embedded",
                     "mse", "psnr_db", "wse", "wmse", "psnr_worst_db"])
    for r in run_compare(cover, message):
        writer.writerow([r.system, r.plane, r.weight, r.capacity_bits,
                         r.bits_embedded, _fmt(r.mse), _fmt(r.psnr_db),
                         r.wse, r.wmse, _fmt(r.psnr_worst_db)])
    return 0


def cmd_weights(args) -> int:
    if not 2 <= args.count <= 64:
        raise UsageError(f"count must be in 2..64, got {args.count}")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if args.system is None:
        writer.writerow(["plane", "binary", "fibonacci1", "prime", "prime_over_nlogn"])
        for row in metrics.growth_table(args.count):
            ratio = "" if row.prime_over_nlogn is None else _fmt(row.prime_over_nlogn)
            writer.writerow([row.plane, row.binary, row.fibonacci1, row.prime, ratio])
        return 0
    # single-system column: the weight sequence itself, not sized to any k
    if args.system.kind == "binary":
        seq = [1 << i for i in range(args.count + 1)]
    elif args.system.kind == "prime":
        seq = prime_weights(args.count + 1)
    else:
        seq = fibonacci_numbers(args.system.p, args.count + 2)[1:]
    writer.writerow(["plane", "weight"])
    for i in range(args.count + 1):
        writer.writerow([i, seq[i]])
    return 0


def cmd_codebook(args) -> int:
    if not 1 <= args.k <= 12:
        raise UsageError(f"k must be in 1..12, got {args.k}")
    system = args.system.build(args.k)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["value", "codeword"])
    for value, cw in codebook(system):
        writer.writerow([value, codeword_to_str(cw)])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stegoplanes",
        description="Hide and recover messages in virtual bit-planes of PGM images.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="hide a message file in a cover image")
    p.add_argument("--cover", required=True, help="cover image (binary PGM)")
    p.add_argument("--message", required=True, help="payload file (raw bytes)")
    p.add_argument("--out", required=True, help="stego image output path")
    p.add_argument("--system", required=True, type=SystemSpec.parse,
                   help="binary | prime | fib:<p>")
    p.add_argument("--plane", required=True, type=int, help="bit-plane index, 0 = LSB")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover the message from a stego image")
    p.add_argument("--cover", required=True, help="stego image (binary PGM)")
    p.add_argument("--out", required=True, help="recovered payload output path")
    p.add_argument("--system", required=True, type=SystemSpec.parse,
                   help="binary | prime | fib:<p>")
    p.add_argument("--plane", required=True, type=int, help="bit-plane index, 0 = LSB")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("compare", help="sweep every system and plane, print CSV")
    p.add_argument("--cover", required=True, help="cover image (binary PGM)")
    p.add_argument("--message", required=True, help="payload file (truncated per plane)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("weights", help="weight-growth table as CSV")
    p.add_argument("--count", required=True, type=int, help="highest plane index (2..64)")
    p.add_argument("--system", type=SystemSpec.parse, default=None,
                   help="restrict to one system's weight column")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("codebook", help="value/codeword table as CSV")
    p.add_argument("--system", required=True, type=SystemSpec.parse,
                   help="binary | prime | fib:<p>")
    p.add_argument("--k", required=True, type=int, help="bit depth (1..12)")
    p.set_defaults(func=cmd_codebook)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, imageio.PgmFormatError, codec.CapacityError,
            codec.TruncatedMessageError, codec.MalformedHeaderError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
