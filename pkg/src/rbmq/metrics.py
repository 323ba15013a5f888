"""Compression and quality metrics.

Size metrics follow the two ratios the benchmark reports:
compression ratio (original / final) and quantization efficiency
(quantized / original). Quality metrics are MSE, PSNR (peak 255) and
max absolute error between same-shape buffers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class QualityMetrics:
    mse: float
    psnr: float  # math.inf when mse == 0
    max_abs_error: int


def compression_ratio(original_size: int, final_size: int) -> float:
    """original_size / final_size."""
    if final_size <= 0:
        raise DomainError("final size must be positive")
    return original_size / final_size


def quantization_efficiency(quantized_size: int, original_size: int) -> float:
    """quantized_size / original_size (lower means more reduction)."""
    if original_size <= 0:
        raise DomainError("original size must be positive")
    return quantized_size / original_size


def quality_metrics(a: np.ndarray, b: np.ndarray) -> QualityMetrics:
    """MSE / PSNR / max |a-b| between two same-shape uint8 buffers."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DomainError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return QualityMetrics(mse=0.0, psnr=math.inf, max_abs_error=0)
    diff = a.astype(np.int64) - b.astype(np.int64)
    mse = float(np.mean(diff * diff))
    psnr = math.inf if mse == 0 else 10.0 * math.log10(255.0**2 / mse)
    return QualityMetrics(mse=mse, psnr=psnr, max_abs_error=int(np.abs(diff).max()))
