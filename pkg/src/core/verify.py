#!/usr/bin/env python3
"""
SchemeMate - Verification

Decides whether a rainbow is a coherent configuration or a Jordan
configuration and checks the structural identities of the schemes the
builders produce:
- Intersection tensors (doubled in the Jordan case) with deterministic
  failure witnesses
- Strongly regular graph parameters and the exact Hoffman coclique bound
- Rank-five fusion test, base / switched multiplication tables
- Generated associative algebra dimension, commutativity and Jordan
  associativity of a basis
- Fiber structure and the bipartition of non-regular Jordan schemes

Every property check returns ``(holds, payload)``: the certificate when the
property holds and a witness when it does not.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import isqrt
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from typing_extensions import Literal

from ..config import is_feature_enabled
from .errors import (
    DivisibilityError,
    InfeasibleParams,
    InternalError,
    LabelMismatch,
    NotHomogeneous,
    NotIrreflexive,
    NotJordan,
    NotSymmetric,
    OrderMismatch,
    WrongRank,
)
from .linalg import ExactSpan
from .rainbow import (
    CountMatrix,
    Rainbow,
    Relation,
    StructureReport,
    checked_matmul,
    compose,
    fibers,
    fuse,
    relation_of,
    star_doubled,
    structure_report,
    valencies,
)

logger = logging.getLogger(__name__)

TensorKind = Literal["cc", "jordan"]


@dataclass(frozen=True)
class IntersectionTensor:
    """
    Structure constants of a rainbow.

    ``value(F, C, D)`` is p^F_{C,D} = |C(a) ∩ D^T(b)| for (a, b) in F when
    ``kind`` is "cc", and twice the Jordan intersection number when ``kind``
    is "jordan". Only non-zero entries are stored.
    """

    rank: int
    kind: TensorKind
    entries: Mapping[Tuple[int, int, int], int] = field(default_factory=dict)

    @property
    def doubled(self) -> bool:
        return self.kind == "jordan"

    def value(self, f: int, c: int, d: int) -> int:
        return self.entries.get((f, c, d), 0)

    def p(self, f: int, c: int, d: int) -> Fraction:
        """Intersection number with the doubling undone."""
        return Fraction(self.value(f, c, d), 2 if self.doubled else 1)

    def as_array(self) -> np.ndarray:
        array = np.zeros((self.rank,) * 3, dtype=np.int64)
        for (f, c, d), value in self.entries.items():
            array[f, c, d] = value
        return array

    def sorted_entries(self) -> List[Tuple[int, int, int, int]]:
        return [(f, c, d, v) for (f, c, d), v in sorted(self.entries.items())]


@dataclass(frozen=True)
class Witness:
    """Two cells of colour ``color`` whose (C, D) path counts differ."""

    kind: TensorKind
    color: int
    pair: Tuple[int, int]
    first: Tuple[int, int]
    second: Tuple[int, int]
    counts: Tuple[int, int]

    def describe(self) -> str:
        c, d = self.pair
        return (
            f"colour {self.color}: ({c},{d}) count {self.counts[0]} at {self.first} "
            f"but {self.counts[1]} at {self.second}"
        )


CheckResult = Tuple[bool, Union[IntersectionTensor, Witness]]


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


# ---------------------------------------------------------------------------
# coherent / Jordan condition


def _path_codes(colors: np.ndarray, alpha: int, rank: int, jordan: bool) -> np.ndarray:
    """codes[b, g] encodes the colour pair (c(alpha, g), c(g, b))."""
    left = colors[alpha][None, :]
    right = colors.T
    if jordan:
        low, high = np.minimum(left, right), np.maximum(left, right)
        return low * rank + high
    return left * rank + right


def _first_cells(rainbow: Rainbow) -> List[Tuple[int, int]]:
    flat = rainbow.colors.reshape(-1)
    _, first = np.unique(flat, return_index=True)
    return [divmod(int(i), rainbow.order) for i in first]


def _mismatching_cells(rainbow: Rainbow, jordan: bool) -> np.ndarray:
    """Boolean mask of cells whose path-code multiset differs from their class representative."""
    colors, rank, n = rainbow.colors, rainbow.rank, rainbow.order
    reps = np.empty((rank, n), dtype=np.int64)
    for color, (a, b) in enumerate(_first_cells(rainbow)):
        reps[color] = np.sort(_path_codes(colors, a, rank, jordan)[b])
    mask = np.zeros((n, n), dtype=bool)
    for alpha in range(n):
        rows = np.sort(_path_codes(colors, alpha, rank, jordan), axis=1)
        mask[alpha] = (rows != reps[colors[alpha]]).any(axis=1)
    return mask


def _tensor(rainbow: Rainbow, kind: TensorKind) -> IntersectionTensor:
    colors, rank = rainbow.colors, rainbow.rank
    entries: Dict[Tuple[int, int, int], int] = {}
    for f, (a, b) in enumerate(_first_cells(rainbow)):
        codes = colors[a, :] * rank + colors[:, b]
        counts = np.bincount(codes, minlength=rank * rank).reshape(rank, rank)
        if kind == "jordan":
            counts = counts + counts.T
        for c, d in zip(*np.nonzero(counts)):
            entries[(f, int(c), int(d))] = int(counts[c, d])
    return IntersectionTensor(rank=rank, kind=kind, entries=entries)


def _witness(rainbow: Rainbow, mask: np.ndarray, kind: TensorKind) -> Witness:
    colors, rank = rainbow.colors, rainbow.rank
    violating = sorted(set(int(c) for c in colors[mask]))
    firsts = _first_cells(rainbow)
    basis = [relation_of(rainbow, c).counts() for c in range(rank)]
    pairs = (
        combinations_with_replacement(range(rank), 2) if kind == "jordan"
        else product(range(rank), repeat=2)
    )
    for c, d in pairs:
        if kind == "jordan":
            counts = star_doubled(basis[c], basis[d]).cells
        else:
            counts = compose(basis[c], basis[d]).cells
        candidates = []
        for f in violating:
            a, b = firsts[f]
            cells = np.argwhere((colors == f) & (counts != counts[a, b]))
            if len(cells):
                candidates.append((firsts[f], f, tuple(int(x) for x in cells[0])))
        if candidates:
            (a, b), f, second = min(candidates)
            return Witness(
                kind=kind,
                color=f,
                pair=(c, d),
                first=(a, b),
                second=second,
                counts=(int(counts[a, b]), int(counts[second])),
            )
    raise InternalError("condition failed but no violating colour pair was found")


def _check(rainbow: Rainbow, kind: TensorKind) -> CheckResult:
    mask = _mismatching_cells(rainbow, jordan=kind == "jordan")
    if not mask.any():
        logger.debug("%s condition holds for %r", kind, rainbow)
        return True, _tensor(rainbow, kind)
    witness = _witness(rainbow, mask, kind)
    logger.debug("%s condition fails: %s", kind, witness.describe())
    return False, witness


def is_coherent_configuration(rainbow: Rainbow) -> CheckResult:
    """
    Test the coherent configuration condition.

    Args:
        rainbow: rainbow to test

    Returns:
        Tuple of (holds, IntersectionTensor or Witness)
    """
    return _check(rainbow, "cc")


def is_jordan_configuration(rainbow: Rainbow) -> CheckResult:
    """
    Test the Jordan configuration condition (symmetrised path counts).

    Args:
        rainbow: rainbow to test

    Returns:
        Tuple of (holds, doubled IntersectionTensor or Witness)
    """
    return _check(rainbow, "jordan")


def algebraically_isomorphic(
    first: IntersectionTensor,
    second: IntersectionTensor,
    label_map: Union[Sequence[int], Mapping[int, int]],
) -> bool:
    """Whether ``label_map`` (colour of ``first`` -> colour of ``second``) carries one tensor onto the other."""
    if first.rank != second.rank or first.kind != second.kind:
        return False
    mapping = [label_map[c] for c in range(first.rank)]
    if sorted(mapping) != list(range(second.rank)):
        return False
    for f, c, d in product(range(first.rank), repeat=3):
        if first.value(f, c, d) != second.value(mapping[f], mapping[c], mapping[d]):
            return False
    return True


def tensor_table(tensor: IntersectionTensor, labels: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """Non-zero tensor entries as a DataFrame (F, C, D, value, p)."""
    rows = []
    for f, c, d, value in tensor.sorted_entries():
        rows.append(
            {
                "F": labels[f] if labels else f,
                "C": labels[c] if labels else c,
                "D": labels[d] if labels else d,
                "value": value,
                "p": str(tensor.p(f, c, d)),
            }
        )
    return pd.DataFrame(rows, columns=["F", "C", "D", "value", "p"])


# ---------------------------------------------------------------------------
# fibers


def check_fiber_structure(rainbow: Rainbow) -> bool:
    """
    Every colour lies between two fibers and |C(w)| + |C^T(w)| is constant on
    each fiber.
    """
    parts = fibers(rainbow)
    fiber_of = np.empty(rainbow.order, dtype=np.int64)
    for index, part in enumerate(parts):
        fiber_of[list(part)] = index
    for color in range(rainbow.rank):
        cells = relation_of(rainbow, color).cells
        rows, cols = np.nonzero(cells)
        blocks = {frozenset((int(fiber_of[a]), int(fiber_of[b]))) for a, b in zip(rows, cols)}
        if len(blocks) != 1:
            logger.debug("colour %d meets fiber blocks %s", color, blocks)
            return False
        degree = cells.sum(axis=1) + cells.sum(axis=0)
        for part in parts:
            if len(set(degree[list(part)].tolist())) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# strongly regular graphs


def srg_params_feasible(params: SrgParams) -> bool:
    v, k, lam, mu = params.as_tuple()
    return k * (k - lam - 1) == (v - k - 1) * mu


def srg_check(relation: Relation) -> Optional[SrgParams]:
    """
    Strongly regular parameters of a graph, by common-neighbour counting.

    Args:
        relation: symmetric irreflexive relation

    Returns:
        SrgParams, or None when the graph is not strongly regular or is
        complete / empty
    """
    cells = relation.cells
    if not np.array_equal(cells, cells.T):
        raise NotSymmetric("adjacency relation is not symmetric")
    if cells.diagonal().any():
        raise NotIrreflexive("adjacency relation has loops")
    v = relation.order
    degrees = cells.sum(axis=1)
    if len(set(degrees.tolist())) != 1:
        return None
    k = int(degrees[0]) if v else 0
    if k == 0 or k == v - 1:
        return None
    common = compose(relation, relation).cells
    off = ~np.eye(v, dtype=bool)
    on_edges = set(common[cells].tolist())
    on_non_edges = set(common[off & ~cells].tolist())
    if len(on_edges) != 1 or len(on_non_edges) != 1:
        return None
    params = SrgParams(v=v, k=k, lam=on_edges.pop(), mu=on_non_edges.pop())
    logger.debug("strongly regular with parameters %s", params.as_tuple())
    return params


class QuadraticSurd:
    """Exact real number ``a + b*sqrt(radicand)`` with rational a, b."""

    def __init__(self, a, b=0, radicand: int = 1):
        a, b = Fraction(a), Fraction(b)
        root = isqrt(radicand) if radicand >= 0 else -1
        if root * root == radicand:
            a, b, radicand = a + b * root, Fraction(0), 1
        if b == 0:
            radicand = 1
        self.a, self.b, self.radicand = a, b, radicand

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 * radicand
        larger_rational = a * a > b * b * self.radicand
        return (1 if a > 0 else -1) if larger_rational else (1 if b > 0 else -1)

    def _minus(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            if other.is_rational:
                return QuadraticSurd(self.a - other.a, self.b, self.radicand)
            if self.is_rational or other.radicand == self.radicand:
                return QuadraticSurd(self.a - other.a, self.b - other.b, other.radicand)
            return NotImplemented
        return QuadraticSurd(self.a - Fraction(other), self.b, self.radicand)

    def _compare(self, other) -> int:
        difference = self._minus(other)
        if difference is NotImplemented:
            raise TypeError("surds with different radicands are not comparable")
        return difference.sign()

    def __eq__(self, other) -> bool:
        try:
            return self._compare(other) == 0
        except (TypeError, ValueError):
            return False

    def __lt__(self, other) -> bool:
        return self._compare(other) < 0

    def __le__(self, other) -> bool:
        return self._compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self._compare(other) > 0

    def __ge__(self, other) -> bool:
        return self._compare(other) >= 0

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.radicand))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.radicand ** 0.5

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        surd = f"sqrt({self.radicand})" if self.b == 1 else f"{self.b}*sqrt({self.radicand})"
        return surd if self.a == 0 else f"{self.a} + {surd}"

    def __repr__(self) -> str:
        return f"QuadraticSurd({self})"


def hoffman_coclique_bound(params: SrgParams) -> QuadraticSurd:
    """
    Hoffman bound v(-tau)/(k-tau), tau the least adjacency eigenvalue.

    Args:
        params: feasible strongly regular parameters

    Returns:
        The bound as an exact QuadraticSurd (rational whenever tau is)
    """
    v, k, lam, mu = params.as_tuple()
    if not srg_params_feasible(params) or k == 0 or k >= v - 1:
        raise InfeasibleParams(f"infeasible parameters {params.as_tuple()}")
    a = lam - mu
    radicand = a * a + 4 * (k - mu)
    b = 2 * k - a
    denominator = b * b - radicand
    if denominator <= 0 or radicand < 0:
        raise InfeasibleParams(f"degenerate eigenvalues for {params.as_tuple()}")
    # v(s - a)/(b + s) with s = sqrt(radicand), rationalised
    return QuadraticSurd(
        Fraction(v * (-radicand - a * b), denominator),
        Fraction(v * (a + b), denominator),
        radicand,
    )


# ---------------------------------------------------------------------------
# rank-five fusion test


def check_fusion_p3(rainbow: Rainbow, pivot: int = 1) -> bool:
    """
    Sufficient condition for a symmetric homogeneous rank-five rainbow to be
    a Jordan scheme: with C1 = ``pivot`` and C the union of the other three
    non-diagonal colours, {C0, C1, Ci, C - Ci} is coherent for every i.
    """
    if rainbow.rank != 5:
        raise WrongRank(f"expected rank 5, got {rainbow.rank}")
    if not rainbow.is_symmetric():
        raise NotSymmetric("fusion test needs a symmetric rainbow")
    if not rainbow.is_homogeneous():
        raise NotHomogeneous("fusion test needs a homogeneous rainbow")
    diagonal = rainbow.diagonal_colors()[0]
    others = [c for c in range(5) if c not in (diagonal, pivot)]
    holds = True
    for color in others:
        rest = [c for c in others if c != color]
        fused = fuse(rainbow, [[diagonal], [pivot], [color], rest])
        coherent, _ = is_coherent_configuration(fused)
        logger.debug("fusion with colour %d coherent: %s", color, coherent)
        holds = holds and coherent
    if is_feature_enabled("cross_check_fusion"):
        jordan, _ = is_jordan_configuration(rainbow)
        if holds and not jordan:
            raise InternalError("fusion test passed on a rainbow that is not Jordan")
    return holds


# ---------------------------------------------------------------------------
# multiplication tables


def _labelled(rainbow: Rainbow, names: Sequence[str]) -> List[CountMatrix]:
    try:
        return [relation_of(rainbow, rainbow.color_of(name)).counts() for name in names]
    except KeyError as missing:
        raise LabelMismatch(f"colour label {missing} not present")


def _require_divisible(m: int, n: int) -> None:
    if m <= 0 or (n - 1) % m:
        raise DivisibilityError(f"m={m} does not divide n-1={n - 1}")


def check_base_table(rainbow: Rainbow, m: int, n: int) -> bool:
    """
    Check the multiplication table of the base scheme (arithmetic mod m).

    Args:
        rainbow: rainbow labelled C0..C{m-1}, S0..S{m-1}
        m: order of the thin radical
        n: valency of every S_i

    Returns:
        True when all four product identities and the valencies hold
    """
    _require_divisible(m, n)
    c = _labelled(rainbow, [f"C{i}" for i in range(m)])
    s = _labelled(rainbow, [f"S{i}" for i in range(m)])
    if rainbow.rank != 2 * m or rainbow.order != m * (n + 1):
        raise LabelMismatch(f"rank {rainbow.rank} / order {rainbow.order} do not fit m={m}, n={n}")
    if any((x.cells.sum(axis=1) != 1).any() for x in c):
        return False
    if any((x.cells.sum(axis=1) != n).any() for x in s):
        return False
    total_s = s[0]
    for x in s[1:]:
        total_s = total_s + x
    ratio = (n - 1) // m
    for i, j in product(range(m), repeat=2):
        checks = [
            (compose(c[i], c[j]), c[(i + j) % m], "C*C"),
            (compose(c[i], s[j]), s[(i + j) % m], "C*S"),
            (compose(s[j], c[i]), s[(j - i) % m], "S*C"),
            (compose(s[i], s[j]), n * c[(i - j) % m] + ratio * total_s, "S*S"),
        ]
        for left, right, name in checks:
            if left != right:
                logger.info("base table identity %s fails at i=%d j=%d", name, i, j)
                return False
    return True


def check_switched_table(rainbow: Rainbow, m: int, n: int) -> bool:
    """
    Check the Jordan multiplication table of a switched scheme, doubled.

    D~_i = C_i + C_{-i}, which is 2*D_i when i = -i (mod m).
    """
    _require_divisible(m, n)
    half = m // 2
    d = _labelled(rainbow, [f"D{i}" for i in range(half + 1)])
    t = _labelled(rainbow, [f"T{i}" for i in range(m)])
    if rainbow.rank != m + half + 1:
        raise LabelMismatch(f"rank {rainbow.rank} does not fit m={m}")

    def d_tilde(i: int) -> CountMatrix:
        i %= m
        j = min(i, (-i) % m)
        return d[j] * (2 if i == (-i) % m else 1)

    j_minus_e = t[0]
    for x in t[1:]:
        j_minus_e = j_minus_e + x
    ratio = 2 * (n - 1) // m
    for i, j in product(range(m), repeat=2):
        checks = [
            (star_doubled(d_tilde(i), d_tilde(j)), 2 * (d_tilde(i + j) + d_tilde(i - j)), "D*D"),
            (star_doubled(d_tilde(i), t[j]), 2 * (t[(j + i) % m] + t[(j - i) % m]), "D*T"),
            (star_doubled(t[i], t[j]), n * d_tilde(i - j) + ratio * j_minus_e, "T*T"),
        ]
        for left, right, name in checks:
            if left != right:
                logger.info("switched table identity %s fails at i=%d j=%d", name, i, j)
                return False
    return True


# ---------------------------------------------------------------------------
# algebra of a basis


def _check_orders(basis: Sequence[CountMatrix]) -> int:
    if not basis:
        raise OrderMismatch("empty basis")
    order = basis[0].order
    for matrix in basis:
        if matrix.order != order:
            raise OrderMismatch(f"orders differ: {order} vs {matrix.order}")
    return order


def generated_assoc_dimension(basis: Sequence[CountMatrix]) -> int:
    """
    Dimension of the associative algebra generated by ``basis``.

    Adjoins products of spanning elements until the span stops growing; all
    ranks come from exact elimination.
    """
    order = _check_orders(basis)
    span = ExactSpan(order * order)
    elements: List[np.ndarray] = []
    for matrix in basis:
        if span.add(matrix.cells.reshape(-1)):
            elements.append(matrix.cells)
    fresh = list(range(len(elements)))
    rounds = 0
    while fresh:
        rounds += 1
        start = len(elements)
        newest = set(fresh)
        for i, j in product(range(start), repeat=2):
            if i not in newest and j not in newest:
                continue
            candidate = checked_matmul(elements[i], elements[j])
            if span.add(candidate.reshape(-1)):
                elements.append(candidate)
        fresh = list(range(start, len(elements)))
    logger.debug("generated algebra dimension %d after %d rounds", span.dimension, rounds)
    return span.dimension


def _check_symmetric(basis: Sequence[CountMatrix]) -> None:
    _check_orders(basis)
    for index, matrix in enumerate(basis):
        if not matrix.is_symmetric():
            raise NotSymmetric(f"basis element {index} is not symmetric")


def pairwise_commute(basis: Sequence[CountMatrix]) -> bool:
    _check_symmetric(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if compose(basis[i], basis[j]) != compose(basis[j], basis[i]):
                return False
    return True


def jordan_associative(basis: Sequence[CountMatrix]) -> bool:
    """(A*B)*C == A*(B*C) for all basis triples, compared in the doubled representation."""
    _check_symmetric(basis)
    for a, b, c in product(basis, repeat=3):
        if star_doubled(star_doubled(a, b), c) != star_doubled(a, star_doubled(b, c)):
            return False
    return True


# ---------------------------------------------------------------------------
# non-regular Jordan schemes


def nonregular_bipartition(rainbow: Rainbow) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Equal-size bipartition carried by the non-regular colours of a
    homogeneous Jordan configuration.

    Args:
        rainbow: homogeneous Jordan configuration

    Returns:
        (Omega0, Omega1) as sorted point tuples, or None when every colour is
        regular
    """
    if not rainbow.is_homogeneous():
        raise NotHomogeneous("bipartition needs a homogeneous rainbow")
    jordan, _ = is_jordan_configuration(rainbow)
    if not jordan:
        raise NotJordan("bipartition needs a Jordan configuration")
    irregular = [c for c, k in enumerate(valencies(rainbow)) if k is None]
    if not irregular:
        return None
    degrees = relation_of(rainbow, irregular[0]).out_degrees()
    side = degrees == degrees.max()
    halves = (
        tuple(int(p) for p in np.nonzero(side)[0]),
        tuple(int(p) for p in np.nonzero(~side)[0]),
    )
    if len(halves[0]) != len(halves[1]):
        raise InternalError(f"unequal halves {halves}")
    for color in irregular:
        cells = relation_of(rainbow, color).cells
        rows, cols = np.nonzero(cells)
        sources = set(side[rows].tolist())
        targets = set(side[cols].tolist())
        if len(sources) != 1 or targets != {not next(iter(sources))}:
            raise InternalError(f"colour {color} does not run between the halves")
        source_points = np.nonzero(side == sources.pop())[0]
        if len(set(cells[source_points].sum(axis=1).tolist())) != 1:
            raise InternalError(f"colour {color} has varying valency on its source half")
    return halves


__all__ = [
    "IntersectionTensor",
    "Witness",
    "SrgParams",
    "StructureReport",
    "QuadraticSurd",
    "is_coherent_configuration",
    "is_jordan_configuration",
    "algebraically_isomorphic",
    "tensor_table",
    "check_fiber_structure",
    "srg_params_feasible",
    "srg_check",
    "hoffman_coclique_bound",
    "check_fusion_p3",
    "check_base_table",
    "check_switched_table",
    "generated_assoc_dimension",
    "pairwise_commute",
    "jordan_associative",
    "nonregular_bipartition",
    "structure_report",
]
