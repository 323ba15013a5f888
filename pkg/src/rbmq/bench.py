"""Benchmark pipeline: walk a corpus tree, run the convert / quantize /
finalize / decode stages, persist every stage's outputs on disk, and
emit a per-image CSV report of file sizes and derived ratios.

Corpus layout is ``input_root/<category>/<image files>``; files sitting
directly in input_root fall into a category named after the root
directory. Stage outputs land in per-category directories under
output_root, named by ``directory_name_template`` (default matches the
``final_<category>PNG`` convention, with ``converted_`` and
``quantized_`` prefixes for the earlier stages).
"""

from __future__ import annotations

import csv
import logging
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import container, imageio, quantize
from .errors import RbmqError
from .metrics import compression_ratio, quality_metrics, quantization_efficiency

log = logging.getLogger(__name__)

IMAGE_EXTENSIONS = {".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff"}

REPORT_COLUMNS = [
    "image_name",
    "category",
    "original_size",
    "converted_jpeg",
    "converted_png",
    "quantized_jpeg",
    "quantized_png",
    "final_jpeg",
    "final_png",
    "rbmq_container",
    "cr",
    "qe",
    "psnr_final_jpeg",
]


@dataclass
class BenchConfig:
    input_root: Path
    output_root: Path
    jpeg_quality: int = imageio.DEFAULT_JPEG_QUALITY
    directory_name_template: str = "{stage}_{category}{kind}"

    def __post_init__(self):
        self.input_root = Path(self.input_root)
        self.output_root = Path(self.output_root)
        if not self.input_root.is_dir():
            raise RbmqError(f"input root {self.input_root} is not a directory")

    @property
    def settings(self) -> imageio.EncodeSettings:
        return imageio.EncodeSettings(jpeg_quality=self.jpeg_quality)

    def stage_dir(self, stage: str, category: str, kind: str) -> Path:
        name = self.directory_name_template.format(stage=stage, category=category, kind=kind)
        return self.output_root / name


@dataclass
class StageRecord:
    """One Table-1-style row: on-disk byte counts for every stage."""

    image_name: str
    category: str
    original_size: int = 0
    converted_jpeg: int = 0
    converted_png: int = 0
    quantized_jpeg: int = 0
    quantized_png: int = 0
    final_jpeg: int = 0
    final_png: int = 0
    rbmq_container: int = 0
    psnr_final_jpeg: float = math.nan


@dataclass
class SkippedFile:
    path: Path
    reason: str


@dataclass
class StageResult:
    processed: list[tuple[str, str]] = field(default_factory=list)  # (category, name)
    skipped: list[SkippedFile] = field(default_factory=list)


def iter_corpus(cfg: BenchConfig):
    """Yield (category, source path) for every image under input_root."""
    for dirpath, dirnames, filenames in os.walk(cfg.input_root):
        dirnames.sort()
        rel = Path(dirpath).relative_to(cfg.input_root)
        category = "_".join(rel.parts) if rel.parts else cfg.input_root.name
        for name in sorted(filenames):
            if Path(name).suffix.lower() in IMAGE_EXTENSIONS:
                yield category, Path(dirpath) / name


def _run_stage(cfg: BenchConfig, stage: str, process) -> StageResult:
    result = StageResult()
    for category, src in iter_corpus(cfg):
        try:
            process(category, src)
        except (RbmqError, OSError) as exc:
            log.warning("%s: skipping %s: %s", stage, src, exc)
            result.skipped.append(SkippedFile(src, str(exc)))
            continue
        log.info("%s: %s/%s", stage, category, src.name)
        result.processed.append((category, src.stem))
    return result


def run_convert_stage(cfg: BenchConfig) -> StageResult:
    """Re-encode every original as PNG and JPEG (RGB-converted for JPEG)."""

    def process(category, src):
        buf = imageio.load_image(src)
        png_dir = cfg.stage_dir("converted", category, "PNG")
        jpeg_dir = cfg.stage_dir("converted", category, "JPEG")
        png_dir.mkdir(parents=True, exist_ok=True)
        jpeg_dir.mkdir(parents=True, exist_ok=True)
        imageio.save_png(buf, png_dir / f"{src.stem}.png", cfg.settings)
        # JPEG leg is stored in RGB, stacking grayscale sources
        rgb = np.repeat(buf[:, :, np.newaxis], 3, axis=2) if buf.ndim == 2 else buf
        imageio.save_jpeg(rgb, jpeg_dir / f"{src.stem}.jpg", cfg.settings)

    return _run_stage(cfg, "convert", process)


def run_quantize_stage(cfg: BenchConfig) -> StageResult:
    """Median-quantize every original; store quantized PNG and JPEG."""

    def process(category, src):
        buf = quantize.quantize_image(imageio.load_image(src))
        png_dir = cfg.stage_dir("quantized", category, "PNG")
        jpeg_dir = cfg.stage_dir("quantized", category, "JPEG")
        png_dir.mkdir(parents=True, exist_ok=True)
        jpeg_dir.mkdir(parents=True, exist_ok=True)
        imageio.save_png(buf, png_dir / f"{src.stem}.png", cfg.settings)
        imageio.save_jpeg(buf, jpeg_dir / f"{src.stem}.jpg", cfg.settings)

    return _run_stage(cfg, "quantize", process)


def run_finalize_stage(cfg: BenchConfig) -> StageResult:
    """Quantize + bit-reduce; store final PNG, final JPEG and .rbmq."""

    def process(category, src):
        reduced = quantize.reduce_image(quantize.quantize_image(imageio.load_image(src)))
        png_dir = cfg.stage_dir("final", category, "PNG")
        jpeg_dir = cfg.stage_dir("final", category, "JPEG")
        rbmq_dir = cfg.stage_dir("final", category, "RBMQ")
        for d in (png_dir, jpeg_dir, rbmq_dir):
            d.mkdir(parents=True, exist_ok=True)
        imageio.save_png(reduced, png_dir / f"{src.stem}.png", cfg.settings)
        imageio.save_jpeg(reduced, jpeg_dir / f"{src.stem}.jpg", cfg.settings)
        container.write_container(reduced, rbmq_dir / f"{src.stem}.rbmq")

    return _run_stage(cfg, "finalize", process)


def run_decode_stage(cfg: BenchConfig) -> dict[tuple[str, str], float]:
    """Reconstruct quantized images from each final representation.

    The PNG and .rbmq paths must reproduce the quantized image exactly;
    the JPEG path goes through lossy reconstruction and is scored by
    PSNR. Returns {(category, name): psnr_of_final_jpeg_decode}.
    """
    psnrs: dict[tuple[str, str], float] = {}

    def process(category, src):
        expected = quantize.quantize_image(imageio.load_image(src))
        name = src.stem
        dec_dir = cfg.stage_dir("decoded", category, "PNG")
        dec_dir.mkdir(parents=True, exist_ok=True)

        final_png = cfg.stage_dir("final", category, "PNG") / f"{name}.png"
        from_png = quantize.expand_image(imageio.load_image(final_png))
        if not np.array_equal(from_png, expected):
            raise RbmqError(f"{final_png}: lossless PNG chain mismatch")

        rbmq_path = cfg.stage_dir("final", category, "RBMQ") / f"{name}.rbmq"
        from_rbmq = quantize.expand_image(container.read_container(rbmq_path))
        if not np.array_equal(from_rbmq.reshape(expected.shape), expected):
            raise RbmqError(f"{rbmq_path}: container chain mismatch")

        final_jpeg = cfg.stage_dir("final", category, "JPEG") / f"{name}.jpg"
        from_jpeg = quantize.reconstruct_from_lossy(imageio.load_image(final_jpeg))
        psnrs[(category, name)] = quality_metrics(expected, from_jpeg).psnr

        imageio.save_png(from_png, dec_dir / f"{name}.png", cfg.settings)

    result = _run_stage(cfg, "decode", process)
    for skip in result.skipped:
        log.warning("decode: %s unusable: %s", skip.path, skip.reason)
    return psnrs


def collect_records(cfg: BenchConfig, psnrs: dict | None = None) -> list[StageRecord]:
    """Build one StageRecord per corpus image from actual on-disk sizes."""
    psnrs = psnrs or {}
    records = []
    for category, src in iter_corpus(cfg):
        name = src.stem
        rec = StageRecord(image_name=name, category=category)
        rec.original_size = src.stat().st_size
        sizes = {
            "converted_jpeg": cfg.stage_dir("converted", category, "JPEG") / f"{name}.jpg",
            "converted_png": cfg.stage_dir("converted", category, "PNG") / f"{name}.png",
            "quantized_jpeg": cfg.stage_dir("quantized", category, "JPEG") / f"{name}.jpg",
            "quantized_png": cfg.stage_dir("quantized", category, "PNG") / f"{name}.png",
            "final_jpeg": cfg.stage_dir("final", category, "JPEG") / f"{name}.jpg",
            "final_png": cfg.stage_dir("final", category, "PNG") / f"{name}.png",
            "rbmq_container": cfg.stage_dir("final", category, "RBMQ") / f"{name}.rbmq",
        }
        missing = [k for k, p in sizes.items() if not p.exists()]
        if missing:
            log.warning("report: %s/%s missing %s, skipping row", category, name, missing)
            continue
        for key, path in sizes.items():
            setattr(rec, key, path.stat().st_size)
        rec.psnr_final_jpeg = psnrs.get((category, name), math.nan)
        records.append(rec)
    return records


def emit_report(records: list[StageRecord], path) -> None:
    """Write the CSV report: byte counts as integers, ratios at 2 decimals."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(REPORT_COLUMNS)
        for rec in records:
            cr = compression_ratio(rec.original_size, rec.final_jpeg)
            qe = quantization_efficiency(rec.quantized_png, rec.original_size)
            psnr = "inf" if math.isinf(rec.psnr_final_jpeg) else (
                "" if math.isnan(rec.psnr_final_jpeg) else f"{rec.psnr_final_jpeg:.2f}"
            )
            writer.writerow(
                [
                    rec.image_name,
                    rec.category,
                    rec.original_size,
                    rec.converted_jpeg,
                    rec.converted_png,
                    rec.quantized_jpeg,
                    rec.quantized_png,
                    rec.final_jpeg,
                    rec.final_png,
                    rec.rbmq_container,
                    f"{cr:.2f}",
                    f"{qe:.2f}",
                    psnr,
                ]
            )


def run_bench(cfg: BenchConfig, report_path=None) -> list[StageRecord]:
    """Run all four stages in order and emit the report."""
    run_convert_stage(cfg)
    run_quantize_stage(cfg)
    run_finalize_stage(cfg)
    psnrs = run_decode_stage(cfg)
    records = collect_records(cfg, psnrs)
    if report_path is None:
        report_path = cfg.output_root / "report.csv"
    Path(report_path).parent.mkdir(parents=True, exist_ok=True)
    emit_report(records, report_path)
    return records
