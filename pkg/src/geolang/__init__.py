"""Geodesic languages of lamplighter groups and Thompson's group F."""

from .lamp import (
    Gens,
    LampElement,
    canonical_geodesic,
    d_length,
    dprime_length,
    evaluate,
    inverse,
    is_geodesic,
    multiply,
    normal_form,
    word_length,
)

__version__ = "0.1.0"

__all__ = [
    "Gens",
    "LampElement",
    "canonical_geodesic",
    "d_length",
    "dprime_length",
    "evaluate",
    "inverse",
    "is_geodesic",
    "multiply",
    "normal_form",
    "word_length",
]
