#!/usr/bin/env python3
"""
SchemeMate - Closures

Coherent (two-dimensional Weisfeiler-Leman) closure and Jordan closure of a
seed partition, an independent subspace-closure oracle used to cross-check
both, and the properness test for symmetric Jordan schemes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from typing_extensions import Literal

from .errors import InternalError, NotJordan, NotSymmetric, OrderMismatch
from .rainbow import (
    CountMatrix,
    Rainbow,
    assemble_rainbow,
    canonical_labels,
    close_colouring,
    symmetrize,
)
from .verify import is_coherent_configuration, is_jordan_configuration

logger = logging.getLogger(__name__)

ClosureKind = Literal["wl", "jordan"]


@dataclass(frozen=True, eq=False)
class SeedPartition:
    """Diagonal-separated, transpose-closed, canonically numbered colouring."""

    order: int
    colors: np.ndarray
    rank: int

    def as_rainbow(self) -> Rainbow:
        return assemble_rainbow(self.colors, self.rank)


@dataclass(frozen=True)
class ClosureReport:
    result: Rainbow
    rounds: int
    rank_history: List[int]
    kind: ClosureKind


@dataclass(frozen=True)
class PropernessReport:
    proper: bool
    jordan_rank: int
    symmetrized_wl_rank: int
    witness_color: Optional[int] = None
    witness_parent: Optional[int] = None
    wl_rank: int = field(default=0)


def seed_from_matrices(mats: Sequence[CountMatrix], order: Optional[int] = None) -> SeedPartition:
    """
    Common refinement of the level sets of ``mats``, split into a rainbow.

    Args:
        mats: matrices of equal order (may be empty)
        order: point count, required when ``mats`` is empty

    Returns:
        SeedPartition
    """
    if not mats and order is None:
        raise OrderMismatch("an empty seed needs an explicit order")
    n = mats[0].order if mats else order
    for matrix in mats:
        if matrix.order != n:
            raise OrderMismatch(f"orders differ: {n} vs {matrix.order}")
    if mats:
        keys = np.stack([m.cells.reshape(-1) for m in mats], axis=1)
    else:
        keys = np.zeros((n * n, 1), dtype=np.int64)
    labels, _ = canonical_labels(keys)
    colors, rank = close_colouring(labels.reshape(n, n))
    return SeedPartition(order=n, colors=colors, rank=rank)


def seed_from_rainbow(rainbow: Rainbow) -> SeedPartition:
    return SeedPartition(order=rainbow.order, colors=rainbow.colors, rank=rainbow.rank)


# ---------------------------------------------------------------------------
# signature refinement


def _signature_ids(colors: np.ndarray, rank: int, jordan: bool) -> np.ndarray:
    """
    Number every cell by the multiset of colour pairs on its two-step paths.

    Multisets are compared as sorted code rows (dictionary keys), never by a
    hash alone.
    """
    n = colors.shape[0]
    right = colors.T
    ids = np.empty((n, n), dtype=np.int64)
    seen: Dict[bytes, int] = {}
    for alpha in range(n):
        left = colors[alpha][None, :]
        if jordan:
            codes = np.minimum(left, right) * rank + np.maximum(left, right)
        else:
            codes = left * rank + right
        codes = np.sort(codes, axis=1)
        for beta in range(n):
            ids[alpha, beta] = seen.setdefault(codes[beta].tobytes(), len(seen))
    return ids


def _refine(seed: SeedPartition, kind: ClosureKind) -> ClosureReport:
    jordan = kind == "jordan"
    colors, rank = seed.colors, seed.rank
    n = seed.order
    history = [rank]
    rounds = 0
    while True:
        rounds += 1
        ids = _signature_ids(colors, rank, jordan)
        columns = [colors.reshape(-1), ids.reshape(-1)]
        if jordan:
            columns.insert(1, colors.T.reshape(-1))
        labels, _ = canonical_labels(np.stack(columns, axis=1))
        refined, new_rank = close_colouring(labels.reshape(n, n))
        logger.debug("%s round %d: rank %d -> %d", kind, rounds, rank, new_rank)
        if new_rank == rank:
            break
        colors, rank = refined, new_rank
        history.append(rank)
    result = assemble_rainbow(colors, rank)
    check = is_jordan_configuration if jordan else is_coherent_configuration
    holds, _ = check(result)
    if not holds:
        raise InternalError(f"{kind} closure fixpoint failed verification")
    logger.info("%s closure: rank %d after %d rounds", kind, rank, rounds)
    return ClosureReport(result=result, rounds=rounds, rank_history=history, kind=kind)


def wl_closure(seed: SeedPartition) -> ClosureReport:
    """Coarsest coherent configuration refining ``seed``."""
    return _refine(seed, "wl")


def jordan_closure(seed: SeedPartition) -> ClosureReport:
    """Coarsest Jordan configuration refining ``seed``."""
    return _refine(seed, "jordan")


def subspace_closure_oracle(seed: SeedPartition, kind: ClosureKind) -> Rainbow:
    """
    Closure by repeated refinement with the level sets of all products of the
    current 0/1 basis (ordinary products for "wl", doubled Jordan products
    for "jordan").
    """
    colors, rank = seed.colors, seed.rank
    n = seed.order
    while True:
        basis = np.stack([(colors == c) for c in range(rank)]).astype(np.int64)
        products = np.matmul(basis[:, None], basis[None, :])
        if kind == "jordan":
            products = products + products.transpose(1, 0, 2, 3)
        keys = np.concatenate(
            [colors.reshape(n * n, 1), products.reshape(rank * rank, n * n).T], axis=1
        )
        labels, _ = canonical_labels(keys)
        refined, new_rank = close_colouring(labels.reshape(n, n))
        if new_rank == rank:
            return assemble_rainbow(colors, rank)
        colors, rank = refined, new_rank


def is_refinement(fine: Rainbow, coarse: Rainbow) -> bool:
    """Every colour class of ``fine`` lies inside a colour class of ``coarse``."""
    if fine.order != coarse.order:
        raise OrderMismatch(f"orders differ: {fine.order} vs {coarse.order}")
    pairs = np.unique(
        np.stack([fine.colors.reshape(-1), coarse.colors.reshape(-1)], axis=1), axis=0
    )
    return len(pairs) == fine.rank


# ---------------------------------------------------------------------------
# properness


def is_proper(rainbow: Rainbow) -> PropernessReport:
    """
    Decide whether a symmetric Jordan scheme is proper.

    The scheme is proper exactly when the symmetrised coherent closure of its
    standard basis has more colours than the scheme itself.

    Args:
        rainbow: symmetric Jordan configuration

    Returns:
        PropernessReport with a witness colour of sym(WL) when proper
    """
    if not rainbow.is_symmetric():
        raise NotSymmetric("properness is defined for symmetric rainbows")
    jordan, _ = is_jordan_configuration(rainbow)
    if not jordan:
        raise NotJordan("properness needs a Jordan configuration")
    wl = wl_closure(seed_from_rainbow(rainbow)).result
    sym = symmetrize(wl)
    witness = parent = None
    if sym.rank > rainbow.rank:
        sizes = np.bincount(rainbow.colors.reshape(-1), minlength=rainbow.rank)
        for color in range(sym.rank):
            cells = sym.colors == color
            owner = int(rainbow.colors[cells][0])
            if cells.sum() < sizes[owner]:
                witness, parent = color, owner
                break
    report = PropernessReport(
        proper=sym.rank > rainbow.rank,
        jordan_rank=rainbow.rank,
        symmetrized_wl_rank=sym.rank,
        witness_color=witness,
        witness_parent=parent,
        wl_rank=wl.rank,
    )
    logger.info(
        "properness: jordan rank %d, sym(WL) rank %d -> %s",
        report.jordan_rank,
        report.symmetrized_wl_rank,
        "proper" if report.proper else "improper",
    )
    return report


__all__ = [
    "SeedPartition",
    "ClosureReport",
    "PropernessReport",
    "seed_from_matrices",
    "seed_from_rainbow",
    "wl_closure",
    "jordan_closure",
    "subspace_closure_oracle",
    "is_refinement",
    "is_proper",
]
