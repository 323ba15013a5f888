import numpy as np
import pytest
from PIL import Image

from rbmq import load_image, read_container
from rbmq.cli import main


@pytest.fixture
def sample_png(tmp_path):
    rng = np.random.default_rng(21)
    p = tmp_path / "in.png"
    Image.fromarray(rng.integers(0, 256, (24, 24, 3), dtype=np.uint8)).save(p)
    return p


def test_quantize_command(sample_png, tmp_path):
    out = tmp_path / "q.png"
    assert main(["quantize", str(sample_png), str(out)]) == 0
    buf = load_image(out)
    assert ((buf % 8) == 4).all()


def test_finalize_decode_composition(sample_png, tmp_path):
    q = tmp_path / "q.png"
    rb = tmp_path / "out.rbmq"
    back = tmp_path / "back.png"
    assert main(["quantize", str(sample_png), str(q)]) == 0
    assert main(["finalize", str(sample_png), str(rb)]) == 0
    assert main(["decode", str(rb), str(back)]) == 0
    np.testing.assert_array_equal(load_image(back), load_image(q))


def test_finalize_to_png_then_decode(sample_png, tmp_path):
    fin = tmp_path / "fin.png"
    back = tmp_path / "back.png"
    q = tmp_path / "q.png"
    assert main(["finalize", str(sample_png), str(fin)]) == 0
    assert load_image(fin).max() <= 31
    assert main(["decode", str(fin), str(back)]) == 0
    assert main(["quantize", str(sample_png), str(q)]) == 0
    np.testing.assert_array_equal(load_image(back), load_image(q))


def test_pack_unpack_round_trip(sample_png, tmp_path):
    fin = tmp_path / "fin.png"
    rb = tmp_path / "x.rbmq"
    restored = tmp_path / "restored.png"
    assert main(["finalize", str(sample_png), str(fin)]) == 0
    assert main(["pack", str(fin), str(rb)]) == 0
    assert main(["unpack", str(rb), str(restored)]) == 0
    np.testing.assert_array_equal(load_image(restored), load_image(fin))
    np.testing.assert_array_equal(read_container(rb), load_image(fin))


def test_pack_rejects_non_index_image(sample_png, tmp_path):
    assert main(["pack", str(sample_png), str(tmp_path / "x.rbmq")]) == 1


def test_metrics_identical(sample_png, capsys):
    assert main(["metrics", str(sample_png), str(sample_png)]) == 0
    out = capsys.readouterr().out
    assert "mse=0.0000" in out
    assert "psnr=inf" in out
    assert "max_abs_error=0" in out


def test_convert_command(sample_png, tmp_path):
    out = tmp_path / "c.jpg"
    assert main(["convert", str(sample_png), str(out)]) == 0
    assert load_image(out).shape == (24, 24, 3)


def test_unknown_subcommand_is_usage_error():
    assert main(["frobnicate"]) == 2


def test_unknown_flag_is_usage_error(sample_png, tmp_path):
    assert main(["quantize", "--bogus", str(sample_png), str(tmp_path / "o.png")]) == 2


def test_missing_input_fails(tmp_path):
    assert main(["quantize", str(tmp_path / "nope.png"), str(tmp_path / "o.png")]) == 2


def test_unknown_extension_needs_format(sample_png, tmp_path):
    assert main(["quantize", str(sample_png), str(tmp_path / "out.dat")]) == 1
    assert main(["quantize", str(sample_png), str(tmp_path / "out.dat"), "--format", "png"]) == 0
    assert load_image(tmp_path / "out.dat").shape == (24, 24, 3)


def test_env_var_quality(sample_png, tmp_path, monkeypatch):
    hi = tmp_path / "hi.jpg"
    lo = tmp_path / "lo.jpg"
    monkeypatch.setenv("RBMQ_JPEG_QUALITY", "95")
    assert main(["convert", str(sample_png), str(hi)]) == 0
    monkeypatch.setenv("RBMQ_JPEG_QUALITY", "40")
    assert main(["convert", str(sample_png), str(lo)]) == 0
    assert hi.stat().st_size > lo.stat().st_size


def test_bench_command(corpus_root, tmp_path):
    report = tmp_path / "r.csv"
    code = main(
        ["bench", "--input", str(corpus_root), "--output", str(tmp_path / "out"),
         "--report", str(report)]
    )
    assert code == 0
    lines = report.read_text().strip().splitlines()
    assert len(lines) == 11  # header + 10 rows
