import numpy as np
import pytest

from henonstego import GrayImage

_criteria = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _criteria.append((number, outcome, text))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, outcome, text in sorted(_criteria):
        terminalreporter.write_line(f"AC{number:<2} {outcome}  {text}")


@pytest.fixture
def rng():
    return np.random.default_rng(20121016)


@pytest.fixture
def cover80(rng):
    return GrayImage(80, 80, rng.integers(0, 256, 6400))


def random_image(rng, max_side=256):
    w = int(rng.integers(1, max_side + 1))
    h = int(rng.integers(1, max_side + 1))
    return GrayImage(w, h, rng.integers(0, 256, w * h))
