"""Embedding and extraction of a framed bit stream in one virtual bit-plane.

A pixel is *usable* for a given system and plane when writing either digit
into that plane of its canonical form again yields a canonical form, and
both resulting values stay inside the pixel range.  Usability depends only
on (pixel value, system, plane) -- never on the message -- and survives the
write itself, so a blind extractor walking the stego image sees exactly the
pixels the embedder used.  Unusable pixels are skipped without consuming a
message bit.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .imageio import GrayImage
from .numsys import NumberSystem, decompose

HEADER_BITS = 32  # unsigned big-endian payload byte count


class CapacityError(Exception):
    """Message does not fit in the usable pixels of the chosen plane."""


class TruncatedMessageError(Exception):
    """Bit stream ended before the frame header was complete."""


class MalformedHeaderError(Exception):
    """Frame header declares a payload longer than the stream can hold."""


@dataclass(frozen=True)
class MessageFrame:
    """Length-prefixed payload.

    Wire format, consumed most significant bit first: a 32-bit unsigned
    big-endian byte count, then the payload bytes.  No padding, no checksum.
    """

    payload: bytes

    @property
    def bit_length(self) -> int:
        return HEADER_BITS + 8 * len(self.payload)

    def to_bits(self) -> np.ndarray:
        """Flat array of 0/1 values in wire order."""
        if len(self.payload) >= 1 << 32:
            raise ValueError("payload too long for a 32-bit length header")
        raw = struct.pack(">I", len(self.payload)) + self.payload
        return np.unpackbits(np.frombuffer(raw, dtype=np.uint8))

    @classmethod
    def from_bits(cls, bits) -> "MessageFrame":
        """Decode a frame from the head of a bit stream; extra bits are ignored."""
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.size < HEADER_BITS:
            raise TruncatedMessageError(
                f"stream has {bits.size} bits, header needs {HEADER_BITS}")
        (length,) = struct.unpack(">I", np.packbits(bits[:HEADER_BITS]).tobytes())
        end = HEADER_BITS + 8 * length
        if bits.size < end:
            raise MalformedHeaderError(
                f"header declares {length} payload bytes but only "
                f"{(bits.size - HEADER_BITS) // 8} fit in the stream")
        return cls(np.packbits(bits[HEADER_BITS:end]).tobytes())


@dataclass(frozen=True)
class EmbedReport:
    plane: int
    bits_embedded: int
    pixels_visited: int
    pixels_skipped: int
    capacity_bits: int


def _check_plane(sys: NumberSystem, plane: int) -> None:
    if not 0 <= plane < sys.plane_count:
        raise ValueError(
            f"plane {plane} out of range 0..{sys.plane_count - 1} for {sys.label}")


@lru_cache(maxsize=None)
def _plane_tables(sys: NumberSystem, plane: int):
    """Per-pixel-value lookup tables for one (system, plane).

    Returns (usable, low, high, bit): usability flag, value with the plane
    digit cleared, value with it set, and the current canonical digit.
    """
    w = sys.weights[plane]
    size = sys.max_value + 1
    usable = np.zeros(size, dtype=bool)
    low = np.zeros(size, dtype=np.int32)
    high = np.zeros(size, dtype=np.int32)
    bit = np.zeros(size, dtype=np.uint8)
    for v in range(size):
        cw = decompose(sys, v)
        b = cw[plane]
        v0, v1 = (v - w, v) if b else (v, v + w)
        bit[v], low[v], high[v] = b, v0, v1
        if v1 > sys.max_value:
            continue  # writing a 1 would leave the pixel range
        cw0 = cw[:plane] + (0,) + cw[plane + 1:]
        cw1 = cw[:plane] + (1,) + cw[plane + 1:]
        usable[v] = decompose(sys, v0) == cw0 and decompose(sys, v1) == cw1
    return usable, low, high, bit


def embeddable(sys: NumberSystem, pixel: int, plane: int) -> bool:
    """True iff both digit settings of ``plane`` keep ``pixel`` canonical
    and inside the pixel range (the blind-extraction usability test)."""
    _check_plane(sys, plane)
    if not 0 <= pixel <= sys.max_value:
        raise ValueError(f"pixel {pixel} outside [0, {sys.max_value}]")
    return bool(_plane_tables(sys, plane)[0][pixel])


def embed_bit(sys: NumberSystem, pixel: int, plane: int, bit: int) -> int | None:
    """Pixel value after writing ``bit`` into ``plane``, or None if the
    pixel is not usable there."""
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit}")
    if not embeddable(sys, pixel, plane):
        return None
    usable, low, high, _ = _plane_tables(sys, plane)
    return int(high[pixel] if bit else low[pixel])


def capacity(image: GrayImage, sys: NumberSystem, plane: int) -> int:
    """Number of usable pixels: the most bits (framing included) that can
    be hidden in this image, system and plane."""
    _check_plane(sys, plane)
    if image.pixels.size == 0:
        return 0
    usable = _plane_tables(sys, plane)[0]
    return int(usable[image.pixels.ravel()].sum())


def embed_message(cover: GrayImage, sys: NumberSystem, plane: int,
                  frame: MessageFrame) -> tuple[GrayImage, EmbedReport]:
    """Write the frame into the chosen plane, row-major from the top left.

    Usable pixels receive one frame bit each; unusable pixels and pixels
    after the frame ends are left byte-identical to the cover.
    """
    _check_plane(sys, plane)
    usable, low, high, _ = _plane_tables(sys, plane)
    flat = cover.pixels.ravel()
    bits = frame.to_bits()

    mask = usable[flat] if flat.size else np.zeros(0, dtype=bool)
    cap = int(mask.sum())
    if bits.size > cap:
        raise CapacityError(
            f"message needs {bits.size} bits but only {cap} usable pixels "
            f"exist in plane {plane} of {sys.label}")

    positions = np.flatnonzero(mask)[:bits.size]
    out = flat.copy()
    out[positions] = np.where(bits == 1, high[flat[positions]], low[flat[positions]])
    visited = int(positions[-1]) + 1 if positions.size else 0
    report = EmbedReport(
        plane=plane,
        bits_embedded=int(bits.size),
        pixels_visited=visited,
        pixels_skipped=visited - int(bits.size),
        capacity_bits=cap,
    )
    return GrayImage(out.reshape(cover.pixels.shape)), report


def extract_message(stego: GrayImage, sys: NumberSystem, plane: int) -> MessageFrame:
    """Recover the frame: read the plane digit of every usable pixel in
    row-major order, decode the length header, stop after the payload."""
    _check_plane(sys, plane)
    usable, _, _, bit = _plane_tables(sys, plane)
    flat = stego.pixels.ravel()
    if flat.size == 0:
        raise TruncatedMessageError(f"stream has 0 bits, header needs {HEADER_BITS}")
    carriers = flat[usable[flat]]
    return MessageFrame.from_bits(bit[carriers])
