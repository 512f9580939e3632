#!/usr/bin/env python3
"""
WFDF rank-five Jordan schemes over Z3^d.

Points are pairs (u, i) with u in Z3^d and i in [0, r], ordered by
(i, lexicographic u). Colours: the identity, S (same block, different
vector) and R1, R2, R3, where for i < j the pair ((u, i), (v, j)) lies in
R_a iff theta_ij^(a-1)(sigma_ij(pi_{i.j}(u))) = pi_{j.i}(v).
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional

import numpy as np

from ...config import is_feature_enabled
from ..errors import InternalError
from ..rainbow import Rainbow, fuse, rainbow_from_colors
from ..verify import is_coherent_configuration, is_jordan_configuration
from .diamond import WfdfSpec, Z3Space, default_wfdf_spec, random_wfdf_spec

logger = logging.getLogger(__name__)

WFDF_LABELS = ("1", "S", "R1", "R2", "R3")


def build_wfdf(spec: WfdfSpec) -> Rainbow:
    """
    Build the rank-five Jordan scheme of a WFDF spec.

    Args:
        spec: validated parameter record

    Returns:
        Rainbow of order 3^d (3^d + 1)/2 labelled 1, S, R1, R2, R3
    """
    spec.validate()
    space = Z3Space(spec.d)
    size, r = len(space.vectors), spec.r
    n = size * (r + 1)
    colors = np.full((n, n), -1, dtype=np.int64)
    # membership counts of the three R relations, checked to be exactly one
    coverage = np.zeros((n, n), dtype=np.int64)

    for i in range(r + 1):
        block = slice(i * size, (i + 1) * size)
        colors[block, block] = 1
    np.fill_diagonal(colors, 0)

    for i, j in spec.pairs():
        rows = slice(i * size, (i + 1) * size)
        cols = slice(j * size, (j + 1) * size)
        sigma = np.asarray(spec.sigma_of(i, j), dtype=np.int64)
        left = sigma[space.projections[:, spec.diamond.op(i, j) - 1]]
        right = space.projections[:, spec.diamond.op(j, i) - 1]
        theta = spec.theta[(i, j)]
        for a in range(3):
            shifted = (left + theta * a) % 3
            member = shifted[:, None] == right[None, :]
            coverage[rows, cols] += member
            colors[rows, cols][member] = 2 + a
        colors[cols, rows] = colors[rows, cols].T
        coverage[cols, rows] = coverage[rows, cols].T

    off_block = np.kron(1 - np.eye(r + 1, dtype=np.int64), np.ones((size, size), dtype=np.int64))
    if (coverage != off_block).any() or (colors < 0).any():
        raise InternalError("R1, R2, R3 do not partition the off-block pairs")

    rainbow = rainbow_from_colors(colors, WFDF_LABELS)
    logger.info("built WFDF scheme d=%d: order %d, rank %d", spec.d, rainbow.order, rainbow.rank)
    if is_feature_enabled("verify_builds"):
        holds, _ = is_jordan_configuration(rainbow)
        if not holds:
            raise InternalError("WFDF output is not a Jordan configuration")
    return rainbow


def wfdf_parameters(d: int) -> Dict[str, Any]:
    """Order, valencies and strongly regular parameters predicted for dimension d."""
    size = 3 ** d
    k = 3 ** (d - 1) * (size - 1) // 2
    lam = 3 ** (d - 1) * (3 ** (d - 1) - 1) // 2
    order = size * (size + 1) // 2
    return {
        "order": order,
        "valencies": (1, size - 1, k, k, k),
        "srg_r": (order, k, lam, lam),
        "srg_s": (order, size - 1, size - 2, 0),
        "coclique": size,
    }


def parameter_level_proper(d: int) -> bool:
    """
    Whether properness follows from the parameters alone.

    For even d >= 2 the intersection numbers of any WFDF scheme cannot come
    from a symmetrised coherent configuration; odd d is left to is_proper.
    """
    return d >= 2 and d % 2 == 0


def check_imprimitive_fusions(rainbow: Rainbow) -> bool:
    """{1, S, R_a, rest} is a coherent configuration for every a."""
    ids = {name: rainbow.color_of(name) for name in WFDF_LABELS}
    relations = [ids["R1"], ids["R2"], ids["R3"]]
    for color in relations:
        rest = [c for c in relations if c != color]
        fused = fuse(rainbow, [[ids["1"]], [ids["S"]], [color], rest])
        holds, _ = is_coherent_configuration(fused)
        if not holds:
            return False
    return True


class WfdfBuilder:
    """Build WFDF schemes from CLI-style options or a spec file."""

    def build(
        self,
        d: int = 2,
        diamond: str = "cyclic",
        sigma: str = "identity",
        theta: str = "plus",
        seed: Optional[int] = None,
        spec: Optional[WfdfSpec] = None,
    ) -> Rainbow:
        if spec is None:
            spec = default_wfdf_spec(d, diamond, sigma, theta, seed)
        return build_wfdf(spec)

    def random(self, d: int, seed: int) -> Rainbow:
        return build_wfdf(random_wfdf_spec(d, seed))
