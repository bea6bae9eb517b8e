"""Hénon map orbits, mean-threshold keystreams and bifurcation sweeps.

All arithmetic is IEEE-754 double precision evaluated in a fixed order so that
an embedder and an extractor built separately derive the same keystream bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from henonstego.errors import DivergenceError

DIVERGENCE_BOUND = 1e6

DEFAULT_A = 1.5
DEFAULT_B = 0.1


@dataclass(frozen=True)
class ChaosKey:
    """Shared secret: the seed point and map parameters.

    ``x0`` and ``y0`` are key material and have no defaults.
    """

    x0: float
    y0: float
    a: float = DEFAULT_A
    b: float = DEFAULT_B

    def __post_init__(self):
        for name in ("x0", "y0", "a", "b"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ValueError(f"ChaosKey.{name} must be a finite real, got {value!r}")
            object.__setattr__(self, name, float(value))

    def perturbed(self, dx0: float) -> ChaosKey:
        return ChaosKey(self.x0 + dx0, self.y0, self.a, self.b)


@dataclass(frozen=True)
class ChaosOrbit:
    xs: tuple[float, ...]
    ys: tuple[float, ...]

    def __len__(self):
        return len(self.xs)


@dataclass(frozen=True)
class Keystream:
    bits: tuple[int, ...]
    threshold: float

    def __len__(self):
        return len(self.bits)


def henon_step(x: float, y: float, a: float, b: float) -> tuple[float, float]:
    return 1.0 - (a * (x * x)) + y, b * x


def generate_orbit(key: ChaosKey, length: int) -> ChaosOrbit:
    """Iterate the map ``length`` times from the key's seed.

    The seed itself is not part of the orbit: ``xs[0]`` is the first iterate.
    Raises DivergenceError as soon as either coordinate leaves
    ``[-DIVERGENCE_BOUND, DIVERGENCE_BOUND]``.
    """
    if length < 1:
        raise ValueError(f"orbit length must be >= 1, got {length}")
    a, b = key.a, key.b
    x, y = key.x0, key.y0
    xs = [0.0] * length
    ys = [0.0] * length
    for i in range(length):
        x, y = 1.0 - (a * (x * x)) + y, b * x
        # NaN compares false, so test the negation
        if not (abs(x) <= DIVERGENCE_BOUND and abs(y) <= DIVERGENCE_BOUND):
            raise DivergenceError(
                f"orbit of {key} escaped past {DIVERGENCE_BOUND:g} at iterate {i}"
            )
        xs[i] = x
        ys[i] = y
    return ChaosOrbit(tuple(xs), tuple(ys))


def binarize(orbit: ChaosOrbit) -> Keystream:
    """Threshold the x-iterates at their mean; ties map to 0."""
    xs = orbit.xs
    if not xs:
        raise ValueError("cannot binarize an empty orbit")
    total = 0.0
    for v in xs:  # left-to-right; math.fsum/np.sum would change the last bit
        total += v
    threshold = total / len(xs)
    return Keystream(tuple(1 if v > threshold else 0 for v in xs), threshold)


def keystream(key: ChaosKey, length: int) -> Keystream:
    return binarize(generate_orbit(key, length))


def bifurcation_sweep(
    a_min: float,
    a_max: float,
    a_steps: int,
    b: float,
    x0: float,
    y0: float,
    transient: int,
    samples: int,
) -> list[tuple[float, float]]:
    """Long-run x-values of the map over an evenly spaced range of ``a``.

    Each ``a`` is iterated ``transient`` times from ``(x0, y0)`` and the next
    ``samples`` x-values are recorded. Parameter values whose orbit escapes
    contribute nothing. Pairs are ordered by ``a`` and then by iterate.
    """
    if not a_min < a_max:
        raise ValueError("a_min must be less than a_max")
    if a_steps < 2 or transient < 0 or samples < 1:
        raise ValueError("need a_steps >= 2, transient >= 0, samples >= 1")

    # lanes are independent, so vectorizing over a keeps the scalar evaluation order
    a = np.linspace(a_min, a_max, a_steps)
    x = np.full(a_steps, float(x0))
    y = np.full(a_steps, float(y0))
    alive = np.ones(a_steps, dtype=bool)
    recorded = np.empty((samples, a_steps))

    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(transient + samples):
            x, y = 1.0 - (a * (x * x)) + y, b * x
            escaped = ~((np.abs(x) <= DIVERGENCE_BOUND) & (np.abs(y) <= DIVERGENCE_BOUND))
            if escaped.any():
                alive &= ~escaped
                x[escaped] = 0.0
                y[escaped] = 0.0
            if i >= transient:
                recorded[i - transient] = x

    pairs = []
    for j in np.flatnonzero(alive):
        aj = float(a[j])
        pairs.extend((aj, float(v)) for v in recorded[:, j])
    return pairs
