"""
Small schemes used as fixtures and reference points: thin group schemes,
named preset colourings, lexicographic blow-ups and the exhaustive
enumeration of small symmetric homogeneous rainbows.
"""

from __future__ import annotations

import logging
from itertools import combinations, permutations
from typing import Callable, Hashable, Iterator, List, Sequence, Set

import numpy as np

from ...config import get_preset, list_presets
from ..errors import SpecInvalid
from ..rainbow import Rainbow, rainbow_from_colors

logger = logging.getLogger(__name__)


def thin_cyclic_scheme(k: int) -> Rainbow:
    """Thin scheme of Z_k: colour(a, b) = b - a mod k."""
    if k < 1:
        raise SpecInvalid(f"k must be >= 1, got {k}")
    points = np.arange(k)
    colors = (points[None, :] - points[:, None]) % k
    return rainbow_from_colors(colors, [str(i) for i in range(k)])


def thin_group_scheme(elements: Sequence[Hashable], multiply: Callable) -> Rainbow:
    """
    Thin scheme of a finite group: colour(g, h) = g^-1 h.

    Args:
        elements: the group elements, identity anywhere in the list
        multiply: group multiplication

    Returns:
        Rainbow labelled by the elements
    """
    index = {g: i for i, g in enumerate(elements)}
    identity = next(e for e in elements if all(multiply(e, g) == g for g in elements))
    inverse = {g: next(h for h in elements if multiply(g, h) == identity) for g in elements}
    colors = [[index[multiply(inverse[g], h)] for h in elements] for g in elements]
    return rainbow_from_colors(colors, [str(g) for g in elements])


def symmetric_group_scheme(degree: int) -> Rainbow:
    """Thin scheme of the symmetric group on ``degree`` letters."""
    elements = list(permutations(range(degree)))

    def compose(f, g):
        return tuple(f[g[x]] for x in range(degree))

    return thin_group_scheme(elements, compose)


def example_rainbow(name: str) -> Rainbow:
    preset = get_preset(name)
    if preset is None:
        raise SpecInvalid(f"unknown example {name!r}; choose from {', '.join(list_presets())}")
    return rainbow_from_colors(preset["colors"], preset["labels"])


def blow_up(rainbow: Rainbow, k: int) -> Rainbow:
    """
    Lexicographic product with the trivial scheme on k points.

    Point (a, i) becomes k*a + i; pairs of distinct twins of a get a new
    symmetric colour per fiber of a.
    """
    if k < 1:
        raise SpecInvalid(f"k must be >= 1, got {k}")
    n = rainbow.order
    colors = np.kron(rainbow.colors, np.ones((k, k), dtype=np.int64))
    diagonal = rainbow.diagonal_colors()
    twin = {c: rainbow.rank + position for position, c in enumerate(diagonal)}
    for a in range(n):
        block = slice(k * a, k * (a + 1))
        inner = np.full((k, k), twin[int(rainbow.colors[a, a])], dtype=np.int64)
        np.fill_diagonal(inner, rainbow.colors[a, a])
        colors[block, block] = inner
    labels = [rainbow.label(c) for c in range(rainbow.rank)]
    labels += [f"twin{rainbow.label(c)}" for c in diagonal]
    return rainbow_from_colors(colors, labels)


def _regular_graphs(n: int) -> List[np.ndarray]:
    """All labelled regular graphs on n vertices that are neither empty nor complete."""
    edges = list(combinations(range(n), 2))
    if not edges:
        return []
    incidence = np.zeros((len(edges), n), dtype=np.int64)
    for e, (a, b) in enumerate(edges):
        incidence[e, a] = incidence[e, b] = 1
    subsets = (np.arange(1, 2 ** len(edges))[:, None] >> np.arange(len(edges))[None, :]) & 1
    degrees = subsets @ incidence
    regular = (degrees == degrees[:, :1]).all(axis=1)
    regular &= (degrees[:, 0] > 0) & (degrees[:, 0] < n - 1)
    graphs = []
    for subset in subsets[regular]:
        adjacency = np.zeros((n, n), dtype=bool)
        for e in np.nonzero(subset)[0]:
            a, b = edges[e]
            adjacency[a, b] = adjacency[b, a] = True
        graphs.append(adjacency)
    return graphs


def iter_symmetric_homogeneous(n: int, max_rank: int) -> Iterator[Rainbow]:
    """
    Every symmetric homogeneous rainbow on n points of rank <= max_rank whose
    non-diagonal colours are regular graphs, each canonical form once.

    Covers ranks 1 to 4.
    """
    if max_rank > 4:
        raise SpecInvalid("enumeration supports max_rank <= 4")
    seen: Set[bytes] = set()

    def emit(graphs: Sequence[np.ndarray]) -> Iterator[Rainbow]:
        colors = np.zeros((n, n), dtype=np.int64)
        for index, graph in enumerate(graphs, start=1):
            colors[graph] = index
        rainbow = rainbow_from_colors(colors)
        key = rainbow.colors.tobytes()
        if key not in seen:
            seen.add(key)
            yield rainbow

    off = ~np.eye(n, dtype=bool)
    if n == 1 or max_rank >= 2 and n >= 2:
        yield from emit([off] if n >= 2 else [])
    if n < 3 or max_rank < 3:
        return
    graphs = _regular_graphs(n)
    for graph in graphs:
        yield from emit([graph, off & ~graph])
    if max_rank < 4:
        return
    for first, second in combinations(graphs, 2):
        if (first & second).any():
            continue
        third = off & ~first & ~second
        if not third.any():
            continue
        degrees = third.sum(axis=1)
        if (degrees == degrees[0]).all():
            yield from emit([first, second, third])
    logger.debug("enumerated %d rainbows on %d points", len(seen), n)


class ThinBuilder:
    """Thin cyclic schemes."""

    def build(self, k: int) -> Rainbow:
        return thin_cyclic_scheme(k)


class ExampleBuilder:
    """Named preset colourings."""

    def build(self, name: str) -> Rainbow:
        return example_rainbow(name)
