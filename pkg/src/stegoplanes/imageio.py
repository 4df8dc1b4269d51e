"""8-bit grayscale images: binary PGM (P5) I/O and synthetic covers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class PgmFormatError(Exception):
    """Input is not a valid 8-bit binary PGM."""


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Immutable 8-bit grayscale raster, shape (height, width)."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise ValueError(f"pixels must be a 2-D array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("pixel values must be in [0, 255]")
        arr = arr.astype(np.uint8)
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and np.array_equal(
            self.pixels, other.pixels)


def read_pgm(data: bytes) -> GrayImage:
    """Parse a binary PGM (magic P5, maxval 255).

    Header comments ('#' to end of line) are accepted anywhere between
    tokens.  Raises PgmFormatError naming the offending field otherwise.
    """
    pos = 0

    def token(field: str) -> bytes:
        nonlocal pos
        while pos < len(data):
            c = data[pos]
            if c in b" \t\r\n":
                pos += 1
            elif c == ord("#"):
                while pos < len(data) and data[pos] != ord("\n"):
                    pos += 1
            else:
                break
        start = pos
        while pos < len(data) and data[pos] not in b" \t\r\n":
            pos += 1
        if start == pos:
            raise PgmFormatError(f"{field}: unexpected end of header")
        return data[start:pos]

    def int_token(field: str) -> int:
        tok = token(field)
        if not tok.isdigit():
            raise PgmFormatError(f"{field}: expected an integer, got {tok!r}")
        return int(tok)

    magic = token("magic")
    if magic != b"P5":
        raise PgmFormatError(f"magic: expected b'P5', got {magic!r}")
    width = int_token("width")
    height = int_token("height")
    maxval = int_token("maxval")
    if width <= 0 or height <= 0:
        raise PgmFormatError(f"dimensions: must be positive, got {width}x{height}")
    if maxval != 255:
        raise PgmFormatError(f"maxval: only 255 is supported, got {maxval}")
    if pos >= len(data) or data[pos] not in b" \t\r\n":
        raise PgmFormatError("maxval: missing whitespace before raster")
    pos += 1  # exactly one separator byte, then raw raster

    raster = data[pos:]
    if len(raster) != width * height:
        raise PgmFormatError(
            f"raster: expected {width * height} bytes, found {len(raster)}")
    return GrayImage(np.frombuffer(raster, dtype=np.uint8).reshape(height, width))


def write_pgm(img: GrayImage) -> bytes:
    """Serialise to binary PGM; byte-identical for equal images."""
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


# Noise generator constants (32-bit linear congruential, high byte taken):
#   state' = (1664525 * state + 1013904223) mod 2**32, pixel = state' >> 24
_LCG_MULT = 1664525
_LCG_INC = 1013904223
_LCG_MOD = 1 << 32


def synth_image(width: int, height: int, mode: str = "gradient",
                seed: int = 0) -> GrayImage:
    """Deterministic synthetic cover image.

    mode "gradient": pixel(x, y) = (x + y) mod 256.
    mode "noise":    pixels from the documented LCG above, seeded with
                     ``seed``; equal seeds give identical images.
    """
    if width <= 0 or height <= 0:
        raise ValueError(f"dimensions must be positive, got {width}x{height}")
    if mode == "gradient":
        grid = (np.arange(height)[:, None] + np.arange(width)[None, :]) % 256
        return GrayImage(grid)
    if mode == "noise":
        state = seed % _LCG_MOD
        raster = bytearray(width * height)
        for i in range(width * height):
            state = (_LCG_MULT * state + _LCG_INC) % _LCG_MOD
            raster[i] = state >> 24
        return GrayImage(np.frombuffer(bytes(raster), dtype=np.uint8).reshape(height, width))
    raise ValueError(f"unknown mode {mode!r}, expected 'gradient' or 'noise'")
