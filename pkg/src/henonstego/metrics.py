"""Cover/stego distortion measures."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from henonstego.errors import DimensionMismatch
from henonstego.pgm import GrayImage

MAX_INTENSITY = 255.0


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr_paper: float
    psnr_standard: float
    pixels_different: int
    max_abs_diff: int

    def lines(self) -> list[str]:
        return [f"{name}: {_fmt(getattr(self, name))}" for name in self.__dataclass_fields__]


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)  # 'inf' for the identical-image case
    return str(value)


def _diff(original: GrayImage, restored: GrayImage) -> np.ndarray:
    if (original.width, original.height) != (restored.width, restored.height):
        raise DimensionMismatch(
            f"{original.width}x{original.height} vs {restored.width}x{restored.height}"
        )
    return original.pixels.astype(np.int64) - restored.pixels.astype(np.int64)


def mse(original: GrayImage, restored: GrayImage) -> float:
    """Mean of squared per-pixel differences.

    The squared differences are summed as integers; every partial sum stays
    below 2**53, so this equals sequential float accumulation exactly.
    """
    d = _diff(original, restored)
    return float(int((d * d).sum())) / d.size


def psnr_paper_formula(mse: float) -> float:
    """``10 * log10(MAX / sqrt(mse))``, half the conventional PSNR."""
    if mse < 0:
        raise ValueError("mse must be non-negative")
    if mse == 0:
        return math.inf
    return 10.0 * math.log10(MAX_INTENSITY / math.sqrt(mse))


def psnr_standard(mse: float) -> float:
    """Conventional PSNR, ``10 * log10(MAX**2 / mse)``."""
    if mse < 0:
        raise ValueError("mse must be non-negative")
    if mse == 0:
        return math.inf
    return 10.0 * math.log10(MAX_INTENSITY * MAX_INTENSITY / mse)


def compare(original: GrayImage, restored: GrayImage) -> QualityReport:
    d = _diff(original, restored)
    m = mse(original, restored)
    return QualityReport(
        mse=m,
        psnr_paper=psnr_paper_formula(m),
        psnr_standard=psnr_standard(m),
        pixels_different=int(np.count_nonzero(d)),
        max_abs_diff=int(np.abs(d).max()),
    )


def histogram(image: GrayImage) -> np.ndarray:
    """256-bin intensity counts."""
    return np.bincount(image.flat, minlength=256)
