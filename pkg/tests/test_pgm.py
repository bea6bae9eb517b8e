import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from henonstego import FormatError, GrayImage, read_pgm, write_pgm
from henonstego.pgm import load, save

from malformed import MALFORMED


def test_read_p5():
    img = read_pgm(b"P5 2 2 255\n" + bytes([0, 128, 255, 7]))
    assert (img.width, img.height) == (2, 2)
    assert img.flat.tolist() == [0, 128, 255, 7]
    assert img.pixels.tolist() == [[0, 128], [255, 7]]


def test_read_p2_single_pixel():
    img = read_pgm(b"P2 1 1 255 56")
    assert img == GrayImage(1, 1, [56])


def test_read_with_comments():
    data = b"P5\n# made by hand\n3 # width\n1\n# maxval next\n200\n" + bytes([1, 2, 200])
    assert read_pgm(data).flat.tolist() == [1, 2, 200]
    data = b"P2\n#c\n2 1\n15\n3\n15\n"
    assert read_pgm(data).flat.tolist() == [3, 15]


def test_small_maxval_is_not_rescaled():
    assert read_pgm(b"P5 2 1 1\n\x00\x01").flat.tolist() == [0, 1]


def test_p5_raster_may_start_with_whitespace_byte():
    # only one whitespace byte separates maxval from the raster
    img = read_pgm(b"P5 2 1 255\n\n\x20")
    assert img.flat.tolist() == [10, 32]


def test_rejects_16_bit():
    with pytest.raises(FormatError):
        read_pgm(b"P5 1 1 65535\n\x00\x00")


def test_write_p5_header():
    assert write_pgm(GrayImage(1, 1, [56]), "P5") == b"P5\n1 1\n255\n" + bytes([56])


def test_write_p2():
    assert write_pgm(GrayImage(2, 1, [0, 255]), "P2") == b"P2\n2 1\n255\n0 255\n"


def test_p2_lines_stay_short():
    img = GrayImage(100, 3, np.full(300, 255))
    text = write_pgm(img, "P2")
    assert text.endswith(b"\n")
    assert max(len(line) for line in text.split(b"\n")) <= 70
    assert read_pgm(text) == img


def test_write_rejects_unknown_format():
    with pytest.raises(ValueError):
        write_pgm(GrayImage(1, 1, [0]), "P6")


def test_round_trip_80x80(rng):
    img = GrayImage(80, 80, rng.integers(0, 256, 6400))
    assert read_pgm(write_pgm(img, "P5")) == img


def test_p5_deterministic(rng):
    img = GrayImage(13, 7, rng.integers(0, 256, 91))
    assert write_pgm(img) == write_pgm(GrayImage(13, 7, img.flat.tolist()))


def test_file_helpers(tmp_path, rng):
    img = GrayImage(5, 4, rng.integers(0, 256, 20))
    save(img, tmp_path / "a.pgm", "P2")
    assert load(tmp_path / "a.pgm") == img


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 64),
    st.integers(1, 64),
    st.sampled_from(["P5", "P2"]),
    st.data(),
)
def test_round_trip_property(w, h, fmt, data):
    pixels = data.draw(st.lists(st.integers(0, 255), min_size=w * h, max_size=w * h))
    img = GrayImage(w, h, pixels)
    assert read_pgm(write_pgm(img, fmt)) == img


@pytest.mark.parametrize("data", MALFORMED, ids=range(len(MALFORMED)))
def test_malformed_rejected(data):
    with pytest.raises(FormatError):
        read_pgm(data)


@settings(max_examples=300)
@given(st.binary(max_size=64))
def test_fuzz_never_crashes(data):
    try:
        read_pgm(data)
    except FormatError:
        pass


@settings(max_examples=200)
@given(st.binary(max_size=8), st.integers(0, 30))
def test_fuzz_mutated_valid_file(noise, at):
    base = bytearray(b"P5 3 2 255\n" + bytes(range(6)))
    base[at % len(base):at % len(base) + len(noise)] = noise
    try:
        img = read_pgm(bytes(base))
    except FormatError:
        return
    assert img.width * img.height == img.flat.size


def test_gray_image_validation():
    with pytest.raises(ValueError):
        GrayImage(0, 1, [])
    with pytest.raises(ValueError):
        GrayImage(2, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        GrayImage(1, 1, [256])
    with pytest.raises(ValueError):
        GrayImage(1, 1, [-1])
    img = GrayImage(2, 1, [1, 2])
    with pytest.raises(ValueError):
        img.pixels[0, 0] = 9
