"""
Cyclotomic base schemes over GF(q)^2, q even.

Vertices are the cosets xC of C = <g^m> in GF(q)^2 minus 0, listed by their
lexicographically smallest vector. Two cosets on a common line, y = lambda x,
get colour C_{-log(lambda) mod m}; independent ones get S_{log(det) mod m}.
The result is accepted only after its multiplication table is verified.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Tuple

import numpy as np

from ..errors import DivisibilityError, FormatError, SpecInvalid, TableVerificationFailed
from ..rainbow import Rainbow, rainbow_from_colors
from ..verify import check_base_table
from .fields import GFTable, gf_table

logger = logging.getLogger(__name__)

Vector = Tuple[int, int]


@dataclass(frozen=True)
class CoverSpec:
    q: int
    m: int

    @property
    def n(self) -> int:
        return self.q

    def validate(self) -> None:
        if self.m < 2:
            raise SpecInvalid(f"m must be >= 2, got {self.m}")
        gf_table(self.q)
        if (self.q - 1) % self.m:
            raise DivisibilityError(f"m={self.m} does not divide q-1={self.q - 1}")

    def to_dict(self) -> Dict[str, int]:
        return {"q": self.q, "m": self.m}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CoverSpec":
        try:
            return cls(q=int(data["q"]), m=int(data["m"]))
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"malformed cover spec: {e}")


def cover_vertices(field: GFTable, m: int) -> List[Vector]:
    """Coset representatives (smallest vector of each coset xC), sorted."""
    subgroup = [field.power(m * t) for t in range((field.q - 1) // m)]
    representatives = set()
    for x in product(range(field.q), repeat=2):
        if x == (0, 0):
            continue
        coset = [(field.mul(c, x[0]), field.mul(c, x[1])) for c in subgroup]
        representatives.add(min(coset))
    return sorted(representatives)


def _pair_colour(field: GFTable, m: int, x: Vector, y: Vector) -> int:
    det = field.add(field.mul(x[0], y[1]), field.mul(x[1], y[0]))
    if det:
        return m + field.log_of(det) % m
    # same line: y = lambda x
    pivot = 0 if x[0] else 1
    ratio = field.mul(y[pivot], field.inv(x[pivot]))
    return (-field.log_of(ratio)) % m


def base_labels(m: int) -> List[str]:
    return [f"C{i}" for i in range(m)] + [f"S{i}" for i in range(m)]


def build_cyclotomic_base(q: int, m: int) -> Rainbow:
    """
    Build and verify the base scheme for (q, m).

    Args:
        q: field size 4, 8 or 16
        m: index of C in GF(q)*, dividing q - 1

    Returns:
        Rainbow of order m(q+1), rank 2m, labelled C0.., S0..
    """
    spec = CoverSpec(q=q, m=m)
    spec.validate()
    field = gf_table(q)
    vertices = cover_vertices(field, m)
    n = len(vertices)
    colors = np.empty((n, n), dtype=np.int64)
    for a, x in enumerate(vertices):
        for b, y in enumerate(vertices):
            colors[a, b] = _pair_colour(field, m, x, y)
    rainbow = rainbow_from_colors(colors, base_labels(m))
    logger.info("built cyclotomic base q=%d m=%d: order %d, rank %d", q, m, n, rainbow.rank)
    if rainbow.rank != 2 * m or not check_base_table(rainbow, m, q):
        raise TableVerificationFailed(f"cyclotomic base for q={q}, m={m} fails its table")
    return rainbow


def e_classes(rainbow: Rainbow, m: int) -> List[Tuple[int, ...]]:
    """Classes of E = C0 u ... u C_{m-1}, ordered by smallest point."""
    thin = np.isin(rainbow.colors, [rainbow.color_of(f"C{i}") for i in range(m)])
    classes = []
    seen = set()
    for point in range(rainbow.order):
        if point in seen:
            continue
        members = tuple(int(p) for p in np.nonzero(thin[point])[0])
        seen.update(members)
        classes.append(members)
    return classes


class CoverBuilder:
    """Build cyclotomic base schemes."""

    def build(self, q: int, m: int) -> Rainbow:
        return build_cyclotomic_base(q, m)
