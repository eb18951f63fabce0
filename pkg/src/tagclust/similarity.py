"""Coincidence values for tag pairs: Dice, Cosine, and Jaccard-Sneath."""

from __future__ import annotations

from enum import Enum
from math import sqrt


class Measure(str, Enum):
    DICE = "dice"
    COSINE = "cosine"
    JACCARD = "jaccard"


def _check_domain(a: int, b: int, g: int) -> None:
    # a, b: bookmarks containing each tag; g: bookmarks containing both.
    if a < 1 or b < 1:
        raise ValueError(f"per-tag bookmark counts must be >= 1, got a={a}, b={b}")
    if g < 0 or g > min(a, b):
        raise ValueError(f"co-occurrence count must satisfy 0 <= g <= min(a, b), got g={g}")


def dice(a: int, b: int, g: int) -> float:
    """2g / (a + b)."""
    _check_domain(a, b, g)
    return 2.0 * g / (a + b)


def cosine(a: int, b: int, g: int) -> float:
    """g / sqrt(a * b)."""
    _check_domain(a, b, g)
    return g / sqrt(a * b)


def jaccard(a: int, b: int, g: int) -> float:
    """g / (a + b - g)."""
    _check_domain(a, b, g)
    return g / (a + b - g)


_FUNCTIONS = {
    Measure.DICE: dice,
    Measure.COSINE: cosine,
    Measure.JACCARD: jaccard,
}


def coincidence(measure: Measure, a: int, b: int, g: int) -> float:
    """Similarity of two tags in [0, 1] under the chosen measure."""
    return _FUNCTIONS[Measure(measure)](a, b, g)
