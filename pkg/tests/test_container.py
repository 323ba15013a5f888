import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from rbmq import (
    ContainerFormatError,
    CorruptionError,
    DomainError,
    UnsupportedVersionError,
    pack,
    read_container,
    unpack,
    write_container,
)
from rbmq.container import HEADER_SIZE, payload_size


def test_header_constants():
    assert HEADER_SIZE == 14


def test_single_sample_layout():
    data = pack(np.array([[17]], dtype=np.uint8))
    assert data[:4] == b"RBMQ"
    assert data[4] == 1
    assert data[5:9] == (1).to_bytes(4, "little")   # width
    assert data[9:13] == (1).to_bytes(4, "little")  # height
    assert data[13] == 1                            # channels
    assert data[14:] == bytes([0b10001000])         # 10001 + 000 pad
    assert len(data) == 15


def test_empty_image_is_header_only():
    data = pack(np.zeros((0, 0), dtype=np.uint8))
    assert len(data) == 14
    assert unpack(data).shape == (0, 0)


def test_eight_samples_take_five_bytes():
    data = pack(np.arange(8, dtype=np.uint8).reshape(1, 8))
    assert len(data) == 14 + 5


@pytest.mark.parametrize(
    "shape", [(1, 1), (3, 5), (2, 2, 3), (1, 7, 3), (13, 1)]
)
def test_size_law(shape):
    arr = np.ones(shape, dtype=np.uint8)
    h, w = shape[:2]
    c = shape[2] if len(shape) == 3 else 1
    assert len(pack(arr)) == 14 + payload_size(w, h, c)
    assert payload_size(w, h, c) == -(-(w * h * c * 5) // 8)


def test_pack_rejects_oversized_samples():
    with pytest.raises(DomainError):
        pack(np.array([[32]], dtype=np.uint8))


def test_bad_magic_rejected():
    data = bytearray(pack(np.array([[3]], dtype=np.uint8)))
    data[:4] = b"RBMX"
    with pytest.raises(ContainerFormatError):
        unpack(bytes(data))


def test_bad_version_rejected():
    data = bytearray(pack(np.array([[3]], dtype=np.uint8)))
    data[4] = 2
    with pytest.raises(UnsupportedVersionError):
        unpack(bytes(data))


def test_truncated_payload_rejected():
    data = pack(np.zeros((4, 4), dtype=np.uint8))
    with pytest.raises(CorruptionError):
        unpack(data[:-1])


def test_trailing_bytes_rejected():
    data = pack(np.zeros((4, 4), dtype=np.uint8))
    with pytest.raises(CorruptionError):
        unpack(data + b"\x00")


def test_nonzero_padding_rejected():
    data = bytearray(pack(np.array([[17]], dtype=np.uint8)))
    data[-1] |= 0b00000001
    with pytest.raises(CorruptionError):
        unpack(bytes(data))


def test_short_header_rejected():
    with pytest.raises(ContainerFormatError):
        unpack(b"RBMQ")


def test_deterministic():
    rng = np.random.default_rng(3)
    arr = rng.integers(0, 32, (9, 7, 3), dtype=np.uint8)
    assert pack(arr) == pack(arr.copy())


def test_file_round_trip(tmp_path):
    rng = np.random.default_rng(4)
    arr = rng.integers(0, 32, (6, 11), dtype=np.uint8)
    n = write_container(arr, tmp_path / "x.rbmq")
    assert n == (tmp_path / "x.rbmq").stat().st_size
    np.testing.assert_array_equal(read_container(tmp_path / "x.rbmq"), arr)


index_images = st.one_of(
    arrays(np.uint8, st.tuples(st.integers(0, 12), st.integers(0, 12)),
           elements=st.integers(0, 31)),
    arrays(np.uint8, st.tuples(st.integers(0, 8), st.integers(0, 8), st.just(3)),
           elements=st.integers(0, 31)),
)


@given(index_images)
def test_round_trip_identity(arr):
    out = unpack(pack(arr))
    np.testing.assert_array_equal(out, arr.reshape(out.shape))
