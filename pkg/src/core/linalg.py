"""
Exact span and rank over the rationals.

Vectors are integer numpy arrays; rows are kept in echelon form with
fraction-free elimination (Python integers, gcd-normalised), so no
floating point enters any rank decision.
"""

from __future__ import annotations

import logging
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .errors import OrderMismatch

logger = logging.getLogger(__name__)


def _normalise(vector: np.ndarray) -> np.ndarray:
    nonzero = vector[vector != 0]
    if nonzero.size == 0:
        return vector
    divisor = reduce(gcd, (abs(int(x)) for x in nonzero))
    if int(nonzero[0]) < 0:
        divisor = -divisor
    return vector // divisor


class ExactSpan:
    """Row echelon basis of a subspace of Q^length, grown one vector at a time."""

    def __init__(self, length: int):
        self.length = length
        self._rows: List[Tuple[int, np.ndarray]] = []

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def reduce(self, vector) -> np.ndarray:
        """Residue of ``vector`` after elimination against the current rows."""
        work = np.array([int(x) for x in np.asarray(vector).reshape(-1)], dtype=object)
        if work.shape[0] != self.length:
            raise OrderMismatch(f"vector length {work.shape[0]} != {self.length}")
        for pivot, row in self._rows:
            coefficient = work[pivot]
            if coefficient != 0:
                work = _normalise(work * row[pivot] - row * coefficient)
        return work

    def contains(self, vector) -> bool:
        return not self.reduce(vector).any()

    def add(self, vector) -> bool:
        """Adjoin ``vector``; returns True when the dimension grew."""
        residue = self.reduce(vector)
        nonzero = np.flatnonzero(residue != 0)
        if nonzero.size == 0:
            return False
        pivot = int(nonzero[0])
        self._rows.append((pivot, _normalise(residue)))
        self._rows.sort(key=lambda item: item[0])
        return True


def exact_rank(vectors: Iterable[Sequence[int]]) -> int:
    """Rank of a family of integer vectors over Q."""
    span = None
    for vector in vectors:
        flat = np.asarray(vector).reshape(-1)
        if span is None:
            span = ExactSpan(flat.shape[0])
        span.add(flat)
    return span.dimension if span is not None else 0
