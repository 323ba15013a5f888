"""The .rbmq container: lossless bit-packed serialization of a bin-index
image at 5 bits per sample.

Layout (see FORMAT.md):

    offset  size  field
    0       4     magic, ASCII "RBMQ"
    4       1     version, currently 1
    5       4     width, uint32 little-endian
    9       4     height, uint32 little-endian
    13      1     channels, 1 or 3
    14      ...   payload: samples in row-major channel-interleaved order,
                  5 bits each, MSB-first; final byte zero-padded low

Payload length is exactly ceil(w*h*c*5/8); any other length, a nonzero
padding bit, a bad magic, or an unknown version is rejected.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import (
    ContainerFormatError,
    CorruptionError,
    DomainError,
    UnsupportedVersionError,
)
from .quantize import BIN_COUNT, _check_buffer

MAGIC = b"RBMQ"
VERSION = 1
_HEADER = struct.Struct("<4sBIIB")
HEADER_SIZE = _HEADER.size  # 14

_WEIGHTS = np.array([16, 8, 4, 2, 1], dtype=np.uint8)


def payload_size(width: int, height: int, channels: int) -> int:
    """Packed payload length in bytes for the given dimensions."""
    return (width * height * channels * 5 + 7) // 8


def pack(reduced: np.ndarray) -> bytes:
    """Serialize a bin-index buffer to .rbmq bytes."""
    reduced = _check_buffer(reduced)
    if reduced.size and reduced.max() >= BIN_COUNT:
        raise DomainError("samples above 31 cannot be packed in 5 bits")
    height, width = reduced.shape[:2]
    channels = reduced.shape[2] if reduced.ndim == 3 else 1
    if width >= 2**32 or height >= 2**32:
        raise DomainError("dimensions exceed the 32-bit header range")
    header = _HEADER.pack(MAGIC, VERSION, width, height, channels)
    flat = reduced.reshape(-1)
    # Per-sample bits: unpackbits yields 8 MSB-first bits; keep the low 5.
    bits = np.unpackbits(flat[:, np.newaxis], axis=1)[:, 3:]
    payload = np.packbits(bits.reshape(-1))  # zero-pads the final byte
    return header + payload.tobytes()


def unpack(data: bytes) -> np.ndarray:
    """Deserialize .rbmq bytes back to the exact bin-index buffer.

    Single-channel images come back as (h, w); 3-channel as (h, w, 3).
    """
    if len(data) < HEADER_SIZE:
        raise ContainerFormatError("container shorter than the 14-byte header")
    magic, version, width, height, channels = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ContainerFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise UnsupportedVersionError(f"unsupported container version {version}")
    if channels not in (1, 3):
        raise ContainerFormatError(f"invalid channel count {channels}")
    n = width * height * channels
    expected = payload_size(width, height, channels)
    actual = len(data) - HEADER_SIZE
    if actual != expected:
        kind = "truncated" if actual < expected else "oversized"
        raise CorruptionError(f"{kind} payload: {actual} bytes, expected {expected}")
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8, offset=HEADER_SIZE))
    if bits[n * 5 :].any():
        raise CorruptionError("nonzero padding bits in final payload byte")
    samples = bits[: n * 5].reshape(n, 5) @ _WEIGHTS
    shape = (height, width) if channels == 1 else (height, width, channels)
    return samples.astype(np.uint8).reshape(shape)


def write_container(reduced: np.ndarray, path) -> int:
    """pack() to a file; returns bytes written."""
    data = pack(reduced)
    with open(path, "wb") as fh:
        fh.write(data)
    return len(data)


def read_container(path) -> np.ndarray:
    """unpack() from a file."""
    with open(path, "rb") as fh:
        return unpack(fh.read())
