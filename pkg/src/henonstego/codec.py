"""Keystream-masked LSB embedding and extraction.

Wire format of a framed stego image: a 32-bit big-endian byte count followed
by the message bytes, each byte MSB-first, XOR-masked with the keystream and
written into the least significant bit of pixels 0, 1, 2, ... in row-major
order. Remaining pixels are untouched.

The 32 header bits are masked with the keystream of the first 32 orbit points
(threshold taken over those 32 only) because the extractor must unmask them
before it knows the body length. The body bits are masked with bits 32 onward
of the keystream of the full ``32 + 8 * len(body)`` orbit, which continues the
same orbit rather than restarting it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from henonstego.chaos import ChaosKey, Keystream, keystream
from henonstego.errors import CapacityError, LengthError, LengthFieldError
from henonstego.pgm import GrayImage

HEADER_BITS = 32
MAX_MESSAGE_BYTES = 2**32 - 1


@dataclass(frozen=True)
class BitStream:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bit stream elements must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class StegoPayload:
    header: int
    body: bytes

    def __post_init__(self):
        if self.header != len(self.body):
            raise ValueError(f"header {self.header} does not match body length {len(self.body)}")

    @classmethod
    def from_message(cls, message: bytes) -> StegoPayload:
        message = bytes(message)
        if len(message) > MAX_MESSAGE_BYTES:
            raise CapacityError("message longer than the 32-bit length header allows")
        return cls(len(message), message)

    @property
    def bit_length(self) -> int:
        return HEADER_BITS + 8 * len(self.body)

    def to_bits(self) -> BitStream:
        return message_to_bits(self.header.to_bytes(4, "big") + self.body)


@dataclass(frozen=True)
class EmbedReport:
    bits_embedded: int
    pixels_touched: int
    pixels_flipped: int


def message_to_bits(message: bytes) -> BitStream:
    """Bytes to bits, most significant bit first within each byte."""
    if len(message) > MAX_MESSAGE_BYTES:
        raise ValueError("message exceeds 2**32 - 1 bytes")
    arr = np.frombuffer(bytes(message), dtype=np.uint8)
    return BitStream(tuple(np.unpackbits(arr).tolist()))


def bits_to_bytes(bits) -> bytes:
    bits = list(bits)
    if len(bits) % 8:
        raise ValueError(f"bit count {len(bits)} is not a multiple of 8")
    return np.packbits(np.array(bits, dtype=np.uint8)).tobytes()


def xor_mask(message_bits, keystream: Keystream) -> BitStream:
    """XOR each message bit with the keystream bit at the same index.

    Only the first ``len(message_bits)`` keystream bits are consumed.
    """
    msg = tuple(message_bits)
    ks = keystream.bits if isinstance(keystream, Keystream) else tuple(keystream)
    if len(ks) < len(msg):
        raise LengthError(f"keystream has {len(ks)} bits, message needs {len(msg)}")
    return BitStream(tuple(m ^ k for m, k in zip(msg, ks)))


def _write_lsbs(cover: GrayImage, bits) -> tuple[GrayImage, EmbedReport]:
    n = len(bits)
    flat = cover.flat.copy()
    new = (flat[:n] & 0xFE) | np.asarray(bits, dtype=np.uint8)
    flipped = int(np.count_nonzero(new != flat[:n]))
    flat[:n] = new
    return cover.with_pixels(flat), EmbedReport(n, n, flipped)


def _read_lsbs(stego: GrayImage, start: int, stop: int) -> tuple[int, ...]:
    return tuple((stego.flat[start:stop] & 1).tolist())


def _check_capacity(cover: GrayImage, nbits: int) -> None:
    if nbits > len(cover):
        raise CapacityError(
            f"payload needs {nbits} bits but a {cover.width}x{cover.height} image holds {len(cover)}"
        )


def _frame_keystream(key: ChaosKey, body_bytes: int) -> tuple[int, ...]:
    total = HEADER_BITS + 8 * body_bytes
    head = keystream(key, HEADER_BITS).bits
    if body_bytes == 0:
        return head
    return head + keystream(key, total).bits[HEADER_BITS:]


def embed(cover: GrayImage, payload: StegoPayload, key: ChaosKey) -> tuple[GrayImage, EmbedReport]:
    """Hide a framed payload; pixel LSBs are replaced by the masked bits."""
    if not isinstance(payload, StegoPayload):
        payload = StegoPayload.from_message(payload)
    _check_capacity(cover, payload.bit_length)
    ks = _frame_keystream(key, len(payload.body))
    masked = xor_mask(payload.to_bits(), ks)
    return _write_lsbs(cover, masked.bits)


def extract(stego: GrayImage, key: ChaosKey) -> bytes:
    if len(stego) < HEADER_BITS:
        raise LengthFieldError(
            f"image has {len(stego)} pixels, fewer than the {HEADER_BITS}-bit length header"
        )
    head = xor_mask(_read_lsbs(stego, 0, HEADER_BITS), keystream(key, HEADER_BITS))
    length = int.from_bytes(bits_to_bytes(head), "big")
    total = HEADER_BITS + 8 * length
    if total > len(stego):
        raise LengthFieldError(
            f"decoded length {length} bytes needs {total} bits but the image holds {len(stego)}: "
            "wrong key or not a stego image"
        )
    if length == 0:
        return b""
    body_ks = keystream(key, total).bits[HEADER_BITS:]
    body = xor_mask(_read_lsbs(stego, HEADER_BITS, total), body_ks)
    return bits_to_bytes(body)


def embed_raw(cover: GrayImage, message: bytes, key: ChaosKey) -> tuple[GrayImage, EmbedReport]:
    """Headerless embedding: one keystream of exactly ``8 * len(message)`` bits."""
    bits = message_to_bits(message)
    _check_capacity(cover, len(bits))
    if not bits.bits:
        return cover, EmbedReport(0, 0, 0)
    masked = xor_mask(bits, keystream(key, len(bits)))
    return _write_lsbs(cover, masked.bits)


def extract_raw(stego: GrayImage, key: ChaosKey, length: int) -> bytes:
    """Recover ``length`` headerless message bytes."""
    if length < 0:
        raise ValueError("length must be non-negative")
    nbits = 8 * length
    if nbits > len(stego):
        raise LengthFieldError(f"{length} bytes need {nbits} bits but the image holds {len(stego)}")
    if length == 0:
        return b""
    return bits_to_bytes(xor_mask(_read_lsbs(stego, 0, nbits), keystream(key, nbits)))
