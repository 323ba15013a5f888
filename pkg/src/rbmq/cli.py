"""Command-line front end.

Every subcommand is a thin wrapper around the library API; output kind
is inferred from the output extension (.png / .jpg / .rbmq) unless
--format overrides it. Exit codes: 0 success, 1 operation failure,
2 usage error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import bench, container, imageio, quantize
from .errors import RbmqError
from .metrics import quality_metrics

_JPEG_EXTS = {".jpg", ".jpeg"}

quality_option = click.option(
    "--jpeg-quality",
    type=click.IntRange(1, 100),
    default=imageio.DEFAULT_JPEG_QUALITY,
    envvar="RBMQ_JPEG_QUALITY",
    show_default=True,
    help="JPEG encoder quality.",
)

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["png", "jpeg", "rbmq"]),
    default=None,
    help="Override the output format inferred from the extension.",
)


def _output_format(path: Path, fmt: str | None) -> str:
    if fmt:
        return fmt
    ext = path.suffix.lower()
    if ext == ".png":
        return "png"
    if ext in _JPEG_EXTS:
        return "jpeg"
    if ext == ".rbmq":
        return "rbmq"
    raise RbmqError(f"cannot infer output format from {path.name}; pass --format")


def _save(buf, path: Path, fmt: str, quality: int) -> None:
    settings = imageio.EncodeSettings(jpeg_quality=quality)
    if fmt == "png":
        imageio.save_png(buf, path, settings)
    elif fmt == "jpeg":
        imageio.save_jpeg(buf, path, settings)
    else:
        container.write_container(buf, path)


@click.group()
def cli():
    """Median-quantization codec tools: quantize, 5-bit reduce, pack, decode, bench."""


@cli.command()
@click.argument("src", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("dst", type=click.Path(dir_okay=False, path_type=Path))
@quality_option
@format_option
def convert(src, dst, jpeg_quality, fmt):
    """Re-encode SRC as PNG or JPEG at DST."""
    fmt = _output_format(dst, fmt)
    if fmt == "rbmq":
        raise RbmqError("convert writes images; use finalize or pack for .rbmq")
    _save(imageio.load_image(src), dst, fmt, jpeg_quality)


@cli.command("quantize")
@click.argument("src", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("dst", type=click.Path(dir_okay=False, path_type=Path))
@quality_option
@format_option
def quantize_cmd(src, dst, jpeg_quality, fmt):
    """Median-quantize SRC and write the quantized image to DST."""
    fmt = _output_format(dst, fmt)
    if fmt == "rbmq":
        raise RbmqError("quantized images are 8-bit; use finalize for .rbmq output")
    _save(quantize.quantize_image(imageio.load_image(src)), dst, fmt, jpeg_quality)


@cli.command()
@click.argument("src", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("dst", type=click.Path(dir_okay=False, path_type=Path))
@quality_option
@format_option
def finalize(src, dst, jpeg_quality, fmt):
    """Quantize + bit-reduce SRC; write a bin-index image or .rbmq to DST."""
    reduced = quantize.reduce_image(quantize.quantize_image(imageio.load_image(src)))
    _save(reduced, dst, _output_format(dst, fmt), jpeg_quality)


@cli.command()
@click.argument("src", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("dst", type=click.Path(dir_okay=False, path_type=Path))
@quality_option
@format_option
def decode(src, dst, jpeg_quality, fmt):
    """Decode a final image or .rbmq SRC back to the quantized image at DST."""
    if src.suffix.lower() == ".rbmq":
        buf = quantize.expand_image(container.read_container(src))
    else:
        buf = quantize.reconstruct_from_lossy(imageio.load_image(src))
    fmt = _output_format(dst, fmt)
    if fmt == "rbmq":
        raise RbmqError("decode writes images, not containers")
    _save(buf, dst, fmt, jpeg_quality)


@cli.command()
@click.argument("src", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("dst", type=click.Path(dir_okay=False, path_type=Path))
def pack(src, dst):
    """Pack a bin-index image SRC (all samples in 0..31) into a .rbmq DST."""
    container.write_container(imageio.load_image(src), dst)


@cli.command()
@click.argument("src", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("dst", type=click.Path(dir_okay=False, path_type=Path))
def unpack(src, dst):
    """Unpack a .rbmq SRC into a PNG of bin indices at DST."""
    imageio.save_png(container.read_container(src), dst)


@cli.command()
@click.argument("a", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("b", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def metrics(a, b):
    """Print MSE / PSNR / max absolute error between two images."""
    qm = quality_metrics(imageio.load_image(a), imageio.load_image(b))
    click.echo(f"mse={qm.mse:.4f}")
    click.echo(f"psnr={'inf' if qm.psnr == float('inf') else f'{qm.psnr:.2f}'}")
    click.echo(f"max_abs_error={qm.max_abs_error}")


@cli.command("bench")
@click.option("--input", "input_root", required=True,
              type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--output", "output_root", required=True, type=click.Path(path_type=Path))
@quality_option
@click.option("--report", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Report CSV path (default: <output>/report.csv).")
def bench_cmd(input_root, output_root, jpeg_quality, report):
    """Run the full pipeline over a corpus tree and emit the CSV report."""
    cfg = bench.BenchConfig(
        input_root=input_root, output_root=output_root, jpeg_quality=jpeg_quality
    )
    records = bench.run_bench(cfg, report_path=report)
    click.echo(f"benchmarked {len(records)} images")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="rbmq", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return 1
    except (RbmqError, OSError) as exc:
        print(f"rbmq: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
