#!/usr/bin/env python3
"""
Switching a base scheme into a proper Jordan scheme.

One E-class Omega_1 is singled out; S_i splits into the pairs crossing
Omega_1 (S_i^b) and the pairs inside the rest (S_i^w). The new colours are
D_i = C_i u C_{-i} and T_i = S_i^b u S_{-i}^w.
"""

from __future__ import annotations

import logging
from typing import Dict, List

import numpy as np

from ...config import is_feature_enabled
from ..closure import is_proper
from ..errors import BadFiberIndex, BaseInvalid, InternalError, LabelMismatch
from ..rainbow import Rainbow, rainbow_from_colors
from ..verify import check_base_table, check_switched_table, is_jordan_configuration
from .cover import build_cyclotomic_base, e_classes

logger = logging.getLogger(__name__)


def switched_labels(m: int) -> List[str]:
    return [f"D{i}" for i in range(m // 2 + 1)] + [f"T{i}" for i in range(m)]


def build_switched(base: Rainbow, m: int, n: int, fiber_index: int = 0) -> Rainbow:
    """
    Switch ``base`` across the E-class number ``fiber_index``.

    Args:
        base: rainbow passing check_base_table(base, m, n)
        m: order of the thin radical
        n: valency of the S_i
        fiber_index: which of the n+1 E-classes plays Omega_1

    Returns:
        Proper Jordan scheme of rank m + m//2 + 1 labelled D0.., T0..
    """
    try:
        valid = check_base_table(base, m, n)
    except LabelMismatch as e:
        raise BaseInvalid(f"base scheme is not labelled for m={m}: {e}")
    if not valid:
        raise BaseInvalid(f"base scheme fails its multiplication table for m={m}, n={n}")
    classes = e_classes(base, m)
    if not 0 <= fiber_index < len(classes):
        raise BadFiberIndex(f"fiber index {fiber_index} outside [0, {len(classes) - 1}]")

    inside = np.zeros(base.order, dtype=bool)
    inside[list(classes[fiber_index])] = True
    crossing = inside[:, None] != inside[None, :]

    half = m // 2
    c_index = {base.color_of(f"C{i}"): i for i in range(m)}
    s_index = {base.color_of(f"S{i}"): i for i in range(m)}
    colors = np.empty_like(base.colors)
    for color, i in c_index.items():
        colors[base.colors == color] = min(i, (-i) % m)
    for color, i in s_index.items():
        cells = base.colors == color
        colors[cells & crossing] = half + 1 + i
        colors[cells & ~crossing] = half + 1 + (-i) % m

    switched = rainbow_from_colors(colors, switched_labels(m))
    logger.info(
        "switched base of order %d across fiber %d: rank %d", base.order, fiber_index, switched.rank
    )
    if is_feature_enabled("verify_builds"):
        holds, _ = is_jordan_configuration(switched)
        if not holds:
            raise InternalError("switched scheme is not a Jordan configuration")
        if not check_switched_table(switched, m, n):
            raise InternalError("switched scheme fails its multiplication table")
        if not is_proper(switched).proper:
            raise InternalError("switched scheme is not proper")
    return switched


def switched_label_map(switched: Rainbow, symmetrized_base: Rainbow) -> Dict[int, int]:
    """
    Colour map D_i -> sym(C_i), T_i -> S_i between a switched scheme and the
    symmetrised base it came from.
    """
    mapping: Dict[int, int] = {}
    for color, name in enumerate(symmetrized_base.labels or ()):
        parts = name.split("+")
        if parts[0].startswith("C"):
            i = min(int(p[1:]) for p in parts)
            mapping[switched.color_of(f"D{i}")] = color
        else:
            mapping[switched.color_of(f"T{int(parts[0][1:])}")] = color
    if len(mapping) != switched.rank:
        raise LabelMismatch("symmetrised base and switched scheme do not correspond")
    return mapping


class SwitchBuilder:
    """Build switched schemes from (q, m) via the cyclotomic base."""

    def build(self, q: int, m: int, fiber: int = 0) -> Rainbow:
        base = build_cyclotomic_base(q, m)
        return build_switched(base, m, q, fiber)
