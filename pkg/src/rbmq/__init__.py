"""Reduced-bit median quantization codec middleware.

Quantize 8-bit image channels onto 32 fixed bin medians, reduce them to
5-bit bin indices, store via PNG/JPEG or the bit-packed .rbmq container,
decode back, and benchmark the per-stage file sizes.
"""

from .bench import BenchConfig, StageRecord, run_bench
from .container import pack, read_container, unpack, write_container
from .errors import (
    ContainerError,
    ContainerFormatError,
    CorruptionError,
    DomainError,
    RbmqError,
    UnsupportedFormatError,
    UnsupportedVersionError,
)
from .imageio import EncodeSettings, load_image, save_jpeg, save_png
from .metrics import (
    QualityMetrics,
    compression_ratio,
    quality_metrics,
    quantization_efficiency,
)
from .quantize import (
    MEDIANS,
    expand_image,
    expand_sample,
    median_of_bin,
    quantize_image,
    quantize_sample,
    reconstruct_from_lossy,
    reduce_image,
    reduce_sample,
)

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "StageRecord",
    "run_bench",
    "pack",
    "unpack",
    "read_container",
    "write_container",
    "RbmqError",
    "DomainError",
    "UnsupportedFormatError",
    "ContainerError",
    "ContainerFormatError",
    "UnsupportedVersionError",
    "CorruptionError",
    "EncodeSettings",
    "load_image",
    "save_png",
    "save_jpeg",
    "QualityMetrics",
    "compression_ratio",
    "quantization_efficiency",
    "quality_metrics",
    "MEDIANS",
    "median_of_bin",
    "quantize_sample",
    "reduce_sample",
    "expand_sample",
    "quantize_image",
    "reduce_image",
    "expand_image",
    "reconstruct_from_lossy",
]
