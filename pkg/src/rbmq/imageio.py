"""Decode and encode between on-disk PNG/JPEG/BMP/TIFF files and uint8
numpy buffers.

Buffers are row-major: (h, w) for grayscale, (h, w, 3) for RGB. Alpha
channels are dropped on load; 16-bit sources are rejected. Output is
PNG or JPEG only.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import RbmqError, UnsupportedFormatError

DEFAULT_JPEG_QUALITY = 75

_16BIT_MODES = {"I", "I;16", "I;16B", "I;16L", "I;16N", "F"}


@dataclass(frozen=True)
class EncodeSettings:
    """Encoder knobs. png_compression_level is zlib's 0 (none) .. 9 (max)."""

    jpeg_quality: int = DEFAULT_JPEG_QUALITY
    png_compression_level: int = 6

    def __post_init__(self):
        if not 1 <= self.jpeg_quality <= 100:
            raise ValueError(f"jpeg_quality {self.jpeg_quality} outside [1, 100]")


def load_image(path: str | Path) -> np.ndarray:
    """Load a PNG/JPEG/BMP/TIFF file as a uint8 buffer.

    Gray+alpha collapses to grayscale, RGBA/palette to RGB; alpha is
    dropped, not composited.
    """
    try:
        with Image.open(path) as im:
            if im.mode in _16BIT_MODES:
                raise UnsupportedFormatError(
                    f"{path}: {im.mode} images (>8 bits/sample) are not supported"
                )
            if im.mode == "LA":
                im = im.convert("L")
            elif im.mode not in ("L", "RGB"):
                im = im.convert("RGB")
            return np.asarray(im, dtype=np.uint8)
    except UnidentifiedImageError as exc:
        raise RbmqError(f"{path}: not a decodable image") from exc


def _to_pil(buf: np.ndarray) -> Image.Image:
    buf = np.asarray(buf)
    if buf.dtype != np.uint8:
        raise UnsupportedFormatError(f"expected uint8 buffer, got {buf.dtype}")
    if buf.ndim == 3 and buf.shape[2] == 1:
        buf = buf[:, :, 0]
    if buf.ndim == 2:
        return Image.fromarray(buf, mode="L")
    if buf.ndim == 3 and buf.shape[2] == 3:
        return Image.fromarray(buf, mode="RGB")
    raise UnsupportedFormatError(f"cannot encode buffer of shape {buf.shape}")


def save_png(buf: np.ndarray, path: str | Path, settings: EncodeSettings | None = None) -> int:
    """Write a lossless PNG; returns the file size in bytes."""
    settings = settings or EncodeSettings()
    _to_pil(buf).save(path, format="PNG", compress_level=settings.png_compression_level)
    return os.path.getsize(path)


def save_jpeg(buf: np.ndarray, path: str | Path, settings: EncodeSettings | None = None) -> int:
    """Write a baseline JPEG at settings.jpeg_quality; returns file size."""
    settings = settings or EncodeSettings()
    _to_pil(buf).save(path, format="JPEG", quality=settings.jpeg_quality)
    return os.path.getsize(path)
