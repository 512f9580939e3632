#!/usr/bin/env python3
"""
SchemeMate - Rainbow Core

This module provides the exact representation of partitions of the square
of a point set and the integer matrix arithmetic every other module uses:
- Rainbow validation and canonical colour numbering
- Relations (0/1 matrices) and count matrices (exact integer matrices)
- Ordinary and doubled Jordan products
- Symmetrisation, fusion, refinement by matrix values
- Fibers and structure reports
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import get_setting
from .errors import ArithmeticOverflow, NonSquare, NotARainbow, OrderMismatch

logger = logging.getLogger(__name__)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Relation:
    """Binary relation on 0..n-1 stored as a boolean adjacency matrix."""

    cells: np.ndarray

    def __post_init__(self):
        cells = np.array(self.cells, dtype=bool)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1]:
            raise NonSquare(f"relation matrix has shape {cells.shape}")
        object.__setattr__(self, "cells", _frozen(cells))

    @property
    def order(self) -> int:
        return self.cells.shape[0]

    @classmethod
    def from_pairs(cls, order: int, pairs: Iterable[Tuple[int, int]]) -> "Relation":
        cells = np.zeros((order, order), dtype=bool)
        for alpha, beta in pairs:
            cells[alpha, beta] = True
        return cls(cells)

    @classmethod
    def identity(cls, order: int) -> "Relation":
        return cls(np.eye(order, dtype=bool))

    def transpose(self) -> "Relation":
        return Relation(self.cells.T.copy())

    def counts(self) -> "CountMatrix":
        return CountMatrix(self.cells.astype(np.int64))

    def pairs(self) -> List[Tuple[int, int]]:
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(self.cells))]

    def out_degrees(self) -> np.ndarray:
        return self.cells.sum(axis=1)

    @property
    def size(self) -> int:
        return int(self.cells.sum())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Relation) and np.array_equal(self.cells, other.cells)

    def __hash__(self) -> int:
        return hash(self.cells.tobytes())


@dataclass(frozen=True, eq=False)
class CountMatrix:
    """Square signed-integer matrix; every product of relations lands here."""

    cells: np.ndarray

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1]:
            raise NonSquare(f"count matrix has shape {cells.shape}")
        object.__setattr__(self, "cells", _frozen(cells))

    @property
    def order(self) -> int:
        return self.cells.shape[0]

    @classmethod
    def identity(cls, order: int) -> "CountMatrix":
        return cls(np.eye(order, dtype=np.int64))

    @classmethod
    def ones(cls, order: int) -> "CountMatrix":
        return cls(np.ones((order, order), dtype=np.int64))

    def support(self) -> Relation:
        return Relation(self.cells != 0)

    def transpose(self) -> "CountMatrix":
        return CountMatrix(self.cells.T.copy())

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.cells, self.cells.T))

    def _peak(self) -> int:
        return int(np.abs(self.cells).max()) if self.cells.size else 0

    def __add__(self, other: "CountMatrix") -> "CountMatrix":
        _same_order(self, other)
        _check_bound(self._peak() + other._peak(), "sum")
        return CountMatrix(self.cells + other.cells)

    def __sub__(self, other: "CountMatrix") -> "CountMatrix":
        _same_order(self, other)
        _check_bound(self._peak() + other._peak(), "difference")
        return CountMatrix(self.cells - other.cells)

    def __mul__(self, scalar: int) -> "CountMatrix":
        _check_bound(self._peak() * abs(int(scalar)), "scaled matrix")
        return CountMatrix(self.cells * int(scalar))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CountMatrix) and np.array_equal(self.cells, other.cells)

    def __hash__(self) -> int:
        return hash(self.cells.tobytes())


MatrixLike = Union[Relation, CountMatrix]


def _cells(value: MatrixLike) -> np.ndarray:
    if isinstance(value, Relation):
        return value.cells.astype(np.int64)
    if isinstance(value, CountMatrix):
        return value.cells
    return np.asarray(value, dtype=np.int64)


def _same_order(first: MatrixLike, second: MatrixLike) -> None:
    if first.order != second.order:
        raise OrderMismatch(f"orders differ: {first.order} vs {second.order}")


def _check_bound(bound: int, what: str) -> None:
    if bound > get_setting("int_limit"):
        raise ArithmeticOverflow(f"{what} bound {bound} exceeds the int64 headroom")


def checked_matmul(a: np.ndarray, b: np.ndarray, factor: int = 1) -> np.ndarray:
    """Integer matrix product that refuses to wrap around silently."""
    if a.size == 0:
        return a @ b
    _check_bound(int(np.abs(a).max()) * int(np.abs(b).max()) * a.shape[1] * factor, "product")
    return a @ b


@dataclass(frozen=True, eq=False)
class Rainbow:
    """
    Partition of the square of 0..order-1 into colour classes.

    ``colors[a][b]`` is the colour id of the pair (a, b); ids are dense and
    canonically numbered by first occurrence in a row-major scan.
    ``transpose[c]`` is the colour of the transposed class. ``labels``
    optionally names every colour (builders use it to keep track of C_i,
    S_i, D_i, T_i).
    """

    order: int
    rank: int
    colors: np.ndarray
    transpose: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rainbow) and np.array_equal(self.colors, other.colors)

    def __hash__(self) -> int:
        return hash(self.colors.tobytes())

    def __repr__(self) -> str:
        return f"Rainbow(order={self.order}, rank={self.rank})"

    def label(self, color: int) -> str:
        return self.labels[color] if self.labels else str(color)

    def color_of(self, name: str) -> int:
        if not self.labels or name not in self.labels:
            raise KeyError(name)
        return self.labels.index(name)

    def diagonal_colors(self) -> List[int]:
        return sorted(set(int(c) for c in np.diag(self.colors)))

    def is_symmetric(self) -> bool:
        return all(t == c for c, t in enumerate(self.transpose))

    def is_homogeneous(self) -> bool:
        return len(self.diagonal_colors()) == 1

    def to_rows(self) -> List[List[int]]:
        return self.colors.tolist()


@dataclass(frozen=True)
class StandardBasis:
    """0/1 matrices with disjoint supports covering the whole square."""

    relations: Tuple[Relation, ...]

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __getitem__(self, index: int) -> Relation:
        return self.relations[index]

    def counts(self) -> List[CountMatrix]:
        return [relation.counts() for relation in self.relations]


@dataclass(frozen=True)
class StructureReport:
    """Symmetric / homogeneous / regular flags plus per-colour valencies."""

    symmetric: bool
    homogeneous: bool
    regular: bool
    valencies: Tuple[Optional[int], ...]

    def valency_markers(self) -> List[Union[int, str]]:
        return [k if k is not None else "varies" for k in self.valencies]


# ---------------------------------------------------------------------------
# canonical numbering


def canonical_labels(keys: np.ndarray) -> Tuple[np.ndarray, int]:
    """
    Number the distinct rows of ``keys`` by first occurrence.

    Args:
        keys: array of shape (N,) or (N, m); row i is the key of flat cell i

    Returns:
        Tuple of (labels of shape (N,), number of distinct keys)
    """
    if keys.ndim == 1:
        keys = keys[:, None]
    if keys.shape[0] == 0:
        return np.zeros(0, dtype=np.int64), 0
    _, first, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    order = np.argsort(first, kind="stable")
    position = np.empty(len(first), dtype=np.int64)
    position[order] = np.arange(len(first), dtype=np.int64)
    return position[inverse], len(first)


def _rainbow_closure_keys(colors: np.ndarray) -> np.ndarray:
    """Keys splitting a colouring into a diagonal-separated, transpose-closed one."""
    n = colors.shape[0]
    diagonal = np.eye(n, dtype=np.int64)
    return np.stack(
        [colors.reshape(-1), colors.T.reshape(-1), diagonal.reshape(-1)], axis=1
    )


def close_colouring(colors: np.ndarray) -> Tuple[np.ndarray, int]:
    """
    Coarsest refinement of ``colors`` that is a rainbow, canonically numbered.

    Splitting every cell by (own colour, transposed colour, on-diagonal) makes
    the transpose of every class a class and keeps the diagonal separate.
    """
    n = colors.shape[0]
    labels, rank = canonical_labels(_rainbow_closure_keys(colors))
    return labels.reshape(n, n), rank


def _transpose_map(colors: np.ndarray, rank: int) -> Tuple[int, ...]:
    pairs = np.unique(np.stack([colors.reshape(-1), colors.T.reshape(-1)], axis=1), axis=0)
    if len(pairs) != rank:
        bad = [int(c) for c in np.unique(pairs[:, 0]) if np.count_nonzero(pairs[:, 0] == c) > 1]
        raise NotARainbow("transpose closure fails", colors=bad)
    mapping = [0] * rank
    for c, t in pairs:
        mapping[int(c)] = int(t)
    return tuple(mapping)


def _check_diagonal_separation(colors: np.ndarray) -> None:
    n = colors.shape[0]
    on = set(np.diag(colors).tolist())
    off = set(colors[~np.eye(n, dtype=bool)].tolist())
    mixed = sorted(on & off)
    if mixed:
        raise NotARainbow("diagonal separation fails", colors=mixed)


def assemble_rainbow(colors: np.ndarray, rank: int, labels: Optional[Sequence[str]] = None) -> Rainbow:
    transpose = _transpose_map(colors, rank)
    return Rainbow(
        order=colors.shape[0],
        rank=rank,
        colors=_frozen(colors.astype(np.int64)),
        transpose=transpose,
        labels=tuple(labels) if labels is not None else None,
    )


def rainbow_from_colors(matrix, labels: Optional[Sequence[str]] = None) -> Rainbow:
    """
    Validate a colour matrix and return it as a canonically numbered rainbow.

    Args:
        matrix: n x n matrix of non-negative colour ids
        labels: optional colour names indexed by the *input* colour ids

    Returns:
        Rainbow with colours renumbered by first occurrence (row-major)
    """
    colors = np.array(matrix, dtype=np.int64)
    if colors.ndim != 2 or colors.shape[0] != colors.shape[1] or colors.shape[0] == 0:
        raise NonSquare(f"colour matrix has shape {colors.shape}")
    if (colors < 0).any():
        raise NotARainbow("negative colour id")
    n = colors.shape[0]
    flat = colors.reshape(-1)
    canonical, rank = canonical_labels(flat)
    new_labels = None
    if labels is not None:
        old_ids = [0] * rank
        for old, new in zip(flat.tolist(), canonical.tolist()):
            old_ids[new] = old
        try:
            new_labels = [str(labels[old]) for old in old_ids]
        except IndexError:
            raise NotARainbow("label list shorter than the colour range")
    canonical = canonical.reshape(n, n)
    _check_diagonal_separation(canonical)
    return assemble_rainbow(canonical, rank, new_labels)


def is_canonical(matrix) -> bool:
    colors = np.asarray(matrix, dtype=np.int64)
    canonical, _ = canonical_labels(colors.reshape(-1))
    return bool(np.array_equal(canonical, colors.reshape(-1)))


def trivial_rainbow(order: int) -> Rainbow:
    colors = np.ones((order, order), dtype=np.int64) - np.eye(order, dtype=np.int64)
    return rainbow_from_colors(colors)


# ---------------------------------------------------------------------------
# relational / matrix arithmetic


def compose(first: MatrixLike, second: MatrixLike) -> CountMatrix:
    """Cell (a, b) = |R(a) ∩ S^T(b)|, i.e. the integer matrix product."""
    _same_order(first, second)
    return CountMatrix(checked_matmul(_cells(first), _cells(second)))


def star_doubled(first: MatrixLike, second: MatrixLike) -> CountMatrix:
    """Twice the Jordan product: A·B + B·A (kept integral)."""
    _same_order(first, second)
    a, b = _cells(first), _cells(second)
    return CountMatrix(checked_matmul(a, b, factor=2) + checked_matmul(b, a))


def relational_star(first: Relation, second: Relation) -> Relation:
    """RS ∪ SR as a relation."""
    return star_doubled(first, second).support()


def relation_of(rainbow: Rainbow, color: int) -> Relation:
    return Relation(rainbow.colors == color)


def transpose_map(rainbow: Rainbow) -> List[int]:
    return list(rainbow.transpose)


def standard_basis(rainbow: Rainbow) -> StandardBasis:
    return StandardBasis(tuple(relation_of(rainbow, c) for c in range(rainbow.rank)))


def from_relations(relations: Sequence[Relation], labels: Optional[Sequence[str]] = None) -> Rainbow:
    """Inverse of :func:`standard_basis`."""
    if not relations:
        raise NotARainbow("empty relation list")
    order = relations[0].order
    coverage = np.zeros((order, order), dtype=np.int64)
    colors = np.zeros((order, order), dtype=np.int64)
    for index, relation in enumerate(relations):
        _same_order(relations[0], relation)
        coverage += relation.cells
        colors[relation.cells] = index
    if (coverage != 1).any():
        raise NotARainbow("supports overlap or do not cover the square")
    return rainbow_from_colors(colors, labels)


def symmetrize(rainbow: Rainbow) -> Rainbow:
    """Merge every colour with its transpose."""
    t = np.asarray(rainbow.transpose, dtype=np.int64)
    merged = np.minimum(rainbow.colors, t[rainbow.colors])
    labels = None
    if rainbow.labels:
        labels = [
            rainbow.labels[c] if t[c] == c else "+".join(sorted({rainbow.labels[c], rainbow.labels[t[c]]}))
            for c in range(rainbow.rank)
        ]
    return rainbow_from_colors(merged, labels)


def fuse(rainbow: Rainbow, groups: Sequence[Sequence[int]]) -> Rainbow:
    """
    Merge colour classes.

    Args:
        rainbow: rainbow to coarsen
        groups: colour lists partitioning 0..rank-1

    Returns:
        The fused rainbow; raises NotARainbow when the groups are not a
        partition or the result is not a rainbow
    """
    seen = sorted(c for group in groups for c in group)
    if seen != list(range(rainbow.rank)):
        raise NotARainbow("fusion groups do not partition the colours")
    target = np.zeros(rainbow.rank, dtype=np.int64)
    for index, group in enumerate(groups):
        target[list(group)] = index
    labels = None
    if rainbow.labels:
        labels = ["+".join(rainbow.labels[c] for c in group) for group in groups]
    return rainbow_from_colors(target[rainbow.colors], labels)


def refine_by_values(rainbow: Rainbow, matrix: MatrixLike) -> Rainbow:
    """Common refinement of the colour classes with the level sets of ``matrix``."""
    if matrix.order != rainbow.order:
        raise OrderMismatch(f"orders differ: {rainbow.order} vs {matrix.order}")
    return refine_by_stack(rainbow.colors, _cells(matrix)[None, :, :])


def refine_by_stack(colors: np.ndarray, stack: np.ndarray) -> Rainbow:
    """Refine a colouring by the level sets of every matrix in ``stack`` at once."""
    n = colors.shape[0]
    keys = np.concatenate(
        [colors.reshape(n * n, 1), stack.reshape(stack.shape[0], n * n).T], axis=1
    )
    labels, _ = canonical_labels(keys)
    closed, rank = close_colouring(labels.reshape(n, n))
    return assemble_rainbow(closed, rank)


def relabel_points(rainbow: Rainbow, permutation: Sequence[int]) -> Rainbow:
    """Image of the rainbow under the point map a -> permutation[a]."""
    perm = np.asarray(permutation, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(rainbow.order)):
        raise OrderMismatch("not a permutation of the point set")
    inverse = np.empty_like(perm)
    inverse[perm] = np.arange(rainbow.order)
    moved = rainbow.colors[np.ix_(inverse, inverse)]
    return rainbow_from_colors(moved, rainbow.labels)


# ---------------------------------------------------------------------------
# structure


def fibers(rainbow: Rainbow) -> List[Tuple[int, ...]]:
    """Point partition induced by the diagonal colours, ordered by colour id."""
    diagonal = np.diag(rainbow.colors)
    return [
        tuple(int(p) for p in np.nonzero(diagonal == color)[0])
        for color in rainbow.diagonal_colors()
    ]


def valencies(rainbow: Rainbow) -> Tuple[Optional[int], ...]:
    """Out-valency |C(a)| of every colour, None where it varies with a."""
    result: List[Optional[int]] = []
    for color in range(rainbow.rank):
        degrees = (rainbow.colors == color).sum(axis=1)
        result.append(int(degrees[0]) if (degrees == degrees[0]).all() else None)
    return tuple(result)


def structure_report(rainbow: Rainbow) -> StructureReport:
    vals = valencies(rainbow)
    return StructureReport(
        symmetric=rainbow.is_symmetric(),
        homogeneous=rainbow.is_homogeneous(),
        regular=all(k is not None for k in vals),
        valencies=vals,
    )


__all__ = [
    "Relation",
    "CountMatrix",
    "Rainbow",
    "StandardBasis",
    "StructureReport",
    "checked_matmul",
    "canonical_labels",
    "close_colouring",
    "assemble_rainbow",
    "rainbow_from_colors",
    "is_canonical",
    "trivial_rainbow",
    "compose",
    "star_doubled",
    "relational_star",
    "relation_of",
    "transpose_map",
    "standard_basis",
    "from_relations",
    "symmetrize",
    "fuse",
    "refine_by_values",
    "refine_by_stack",
    "relabel_points",
    "fibers",
    "valencies",
    "structure_report",
]
