"""Median quantization core: the fixed 32-entry median table and the
sample/buffer transforms between 8-bit intensities, quantized medians,
and 5-bit bin indices.

All functions are pure and operate on plain ints (sample level) or
uint8 numpy arrays shaped (h, w) or (h, w, c) with c in {1, 3}
(buffer level).
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, UnsupportedFormatError

BIN_COUNT = 32
BIN_WIDTH = 8

# Bin k covers intensities [8k, 8k+7]; its representative is the 5th
# value of that range, 8k + 4.
MEDIANS = np.arange(BIN_COUNT, dtype=np.uint8) * BIN_WIDTH + 4
MEDIANS.setflags(write=False)


def median_of_bin(k: int) -> int:
    """Representative intensity of bin ``k``: 8k + 4."""
    if not 0 <= k < BIN_COUNT:
        raise DomainError(f"bin index {k} outside [0, {BIN_COUNT - 1}]")
    return BIN_WIDTH * k + 4


def quantize_sample(v: int) -> int:
    """Map an 8-bit intensity to the median of its bin."""
    if not 0 <= v <= 255:
        raise DomainError(f"sample {v} outside [0, 255]")
    return median_of_bin(v // BIN_WIDTH)


def reduce_sample(m: int) -> int:
    """Map a bin median back to its 5-bit bin index.

    Strict: defined only on the 32 medians; anything else raises
    DomainError. Quantize first for arbitrary samples.
    """
    if not (0 <= m <= 255 and m % BIN_WIDTH == 4):
        raise DomainError(f"{m} is not a bin median (expected 8k+4)")
    return (m - 4) // BIN_WIDTH


def expand_sample(b: int) -> int:
    """Inverse of reduce_sample: bin index to median intensity."""
    return median_of_bin(b)


def _check_buffer(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr)
    if arr.dtype != np.uint8:
        raise UnsupportedFormatError(f"expected uint8 samples, got {arr.dtype}")
    if arr.ndim == 2:
        return arr
    if arr.ndim == 3 and arr.shape[2] in (1, 3):
        return arr
    raise UnsupportedFormatError(
        f"expected (h, w) or (h, w, c) with c in {{1, 3}}, got shape {arr.shape}"
    )


def quantize_image(img: np.ndarray) -> np.ndarray:
    """Element-wise quantize_sample over a uint8 buffer."""
    img = _check_buffer(img)
    return (img & np.uint8(0xF8)) | np.uint8(4)


def reduce_image(quantized: np.ndarray) -> np.ndarray:
    """Element-wise reduce_sample; rejects buffers holding non-medians."""
    quantized = _check_buffer(quantized)
    if quantized.size and not (quantized % BIN_WIDTH == 4).all():
        raise DomainError("buffer contains samples that are not bin medians")
    return quantized >> 3


def expand_image(reduced: np.ndarray) -> np.ndarray:
    """Element-wise expand_sample; inverse of reduce_image."""
    reduced = _check_buffer(reduced)
    if reduced.size and reduced.max() >= BIN_COUNT:
        raise DomainError("buffer contains indices above 31")
    return (reduced << 3) | np.uint8(4)


def reconstruct_from_lossy(img: np.ndarray) -> np.ndarray:
    """Recover a quantized image from a lossily stored bin-index image.

    JPEG round trips can push index samples outside [0, 31]; clamp to 31
    before expanding. No artifact denoising is attempted.
    """
    img = _check_buffer(img)
    return expand_image(np.minimum(img, np.uint8(BIN_COUNT - 1)))
