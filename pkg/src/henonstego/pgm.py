"""8-bit grayscale raster and bit-exact PGM (P5 binary / P2 ASCII) codec."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from henonstego.errors import FormatError

_WHITESPACE = b" \t\n\v\f\r"
_P2_LINE_LIMIT = 70


class GrayImage:
    """Grayscale image, ``height`` rows by ``width`` columns, 8 bits per pixel.

    ``pixels`` may be a flat row-major sequence of ``width * height`` values or
    an array already shaped ``(height, width)``. The stored array is read-only;
    derive new images with :meth:`with_pixels`.
    """

    __slots__ = ("width", "height", "pixels")

    def __init__(self, width: int, height: int, pixels):
        if width < 1 or height < 1:
            raise ValueError(f"image dimensions must be >= 1, got {width}x{height}")
        arr = np.asarray(pixels)
        if arr.size != width * height:
            raise ValueError(f"expected {width * height} pixels, got {arr.size}")
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("pixel values must lie in [0, 255]")
            arr = arr.astype(np.uint8)
        arr = arr.reshape(height, width).copy()
        arr.flags.writeable = False
        self.width = int(width)
        self.height = int(height)
        self.pixels = arr

    @property
    def flat(self) -> np.ndarray:
        """Row-major 1-D view of the pixels."""
        return self.pixels.reshape(-1)

    def __len__(self):
        return self.width * self.height

    def with_pixels(self, pixels) -> GrayImage:
        return GrayImage(self.width, self.height, pixels)

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.pixels, other.pixels)
        )

    __hash__ = None

    def __repr__(self):
        return f"GrayImage(width={self.width}, height={self.height})"


def _read_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Skip whitespace and comments, return the next token and the offset after it."""
    n = len(data)
    while pos < n:
        c = data[pos]
        if c in _WHITESPACE:
            pos += 1
        elif c == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    if start == pos:
        raise FormatError(f"unexpected end of header at byte {pos}")
    return data[start:pos], pos


def _read_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, end = _read_token(data, pos)
    if not token.isdigit():
        raise FormatError(f"non-numeric {what} {token[:16]!r} at byte {end - len(token)}")
    return int(token), end


def read_pgm(data: bytes) -> GrayImage:
    """Parse a P5 or P2 image with maxval in [1, 255]; values are not rescaled."""
    data = bytes(data)
    if len(data) < 2 or data[:1] != b"P" or data[1:2] not in (b"2", b"5"):
        raise FormatError(f"bad magic {data[:2]!r} at byte 0, expected P2 or P5")
    binary = data[1:2] == b"5"
    pos = 2
    if pos < len(data) and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        raise FormatError("bad magic: no separator after magic number at byte 2")

    width, pos = _read_int(data, pos, "width")
    height, pos = _read_int(data, pos, "height")
    maxval, pos = _read_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise FormatError(f"image dimensions must be >= 1, got {width}x{height} (header ends at byte {pos})")
    if not 1 <= maxval <= 255:
        raise FormatError(f"maxval {maxval} outside [1, 255] (header ends at byte {pos})")

    count = width * height
    if binary:
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise FormatError(f"missing whitespace after maxval at byte {pos}")
        pos += 1
        available = len(data) - pos
        if available < count:
            raise FormatError(
                f"truncated raster: need {count} bytes from byte {pos}, have {available}"
            )
        if available > count:
            raise FormatError(f"trailing garbage after raster at byte {pos + count}")
        pixels = np.frombuffer(data, dtype=np.uint8, count=count, offset=pos)
    else:
        body = data[pos:]
        if b"#" in body:
            raise FormatError(f"comment inside P2 raster after byte {pos}")
        tokens = body.split()
        if len(tokens) < count:
            raise FormatError(f"truncated raster: need {count} values after byte {pos}, have {len(tokens)}")
        if len(tokens) > count:
            raise FormatError(f"trailing garbage after {count} raster values (raster starts at byte {pos})")
        if not all(t.isdigit() for t in tokens):
            bad = next(i for i, t in enumerate(tokens) if not t.isdigit())
            raise FormatError(f"non-numeric raster value {tokens[bad][:16]!r} at index {bad}")
        pixels = np.array([int(t) for t in tokens], dtype=np.int64)

    if pixels.size and int(pixels.max()) > maxval:
        bad = int(np.argmax(pixels > maxval))
        raise FormatError(f"pixel {bad} has value {int(pixels[bad])} above maxval {maxval}")
    return GrayImage(width, height, pixels.astype(np.uint8))


def write_pgm(image: GrayImage, format: str = "P5") -> bytes:
    if format not in ("P5", "P2"):
        raise ValueError(f"format must be 'P5' or 'P2', got {format!r}")
    header = f"{format}\n{image.width} {image.height}\n255\n".encode("ascii")
    if format == "P5":
        return header + image.pixels.tobytes()

    lines = []
    for row in image.pixels:
        line = ""
        for v in row.tolist():
            s = str(v)
            if not line:
                line = s
            elif len(line) + 1 + len(s) <= _P2_LINE_LIMIT:
                line += " " + s
            else:
                lines.append(line)
                line = s
        lines.append(line)
    return header + ("\n".join(lines) + "\n").encode("ascii")


def load(path) -> GrayImage:
    return read_pgm(Path(path).read_bytes())


def save(image: GrayImage, path, format: str = "P5") -> None:
    Path(path).write_bytes(write_pgm(image, format))
