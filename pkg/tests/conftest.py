from pathlib import Path

import numpy as np
import pytest
from PIL import Image


def natural_image(rng: np.random.Generator, h: int = 160, w: int = 160) -> np.ndarray:
    """Smooth low-frequency color field plus mild noise; stands in for a
    natural photo so PNG/JPEG size behavior is realistic."""
    yy, xx = np.mgrid[0:h, 0:w].astype(float)
    img = np.empty((h, w, 3))
    for c in range(3):
        f1, f2 = rng.uniform(0.5, 3.0, 2)
        p1, p2 = rng.uniform(0.0, 2 * np.pi, 2)
        img[..., c] = 110 + 60 * np.sin(2 * np.pi * f1 * xx / w + p1) * np.cos(
            2 * np.pi * f2 * yy / h + p2
        )
    img += rng.normal(0, 6, img.shape)
    return np.clip(img, 0, 255).astype(np.uint8)


@pytest.fixture(scope="session")
def corpus_root(tmp_path_factory) -> Path:
    """10 synthetic natural images in two category subdirectories."""
    root = tmp_path_factory.mktemp("corpus")
    rng = np.random.default_rng(1234)
    for category, ext in (("outdoor", ".png"), ("studio", ".bmp")):
        d = root / category
        d.mkdir()
        for i in range(5):
            buf = natural_image(rng, h=192, w=192)
            Image.fromarray(buf).save(d / f"img{i}{ext}")
    return root
