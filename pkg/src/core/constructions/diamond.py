"""
Parameter records of the WFDF construction: the affine space Z3^d with its
hyperplane projections, the diamond operation on [0, r] and the full spec
(diamond, sigma, theta) together with its JSON form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from typing_extensions import Literal

from ...config import get_setting, is_feature_enabled
from ..errors import SpecInvalid

logger = logging.getLogger(__name__)

Permutation = Tuple[int, int, int]
IDENTITY: Permutation = (0, 1, 2)
THETA_SYMBOLS = {1: "+", -1: "-"}


@dataclass(frozen=True, eq=False)
class Z3Space:
    """
    Z3^d with its r = (3^d - 1)/2 hyperplanes.

    ``vectors`` are listed lexicographically; ``normals[i]`` is the normal of
    H_i with first non-zero coordinate 1; ``projections[v, i]`` = h_i . v mod 3.
    """

    d: int
    vectors: np.ndarray = field(init=False)
    normals: np.ndarray = field(init=False)
    projections: np.ndarray = field(init=False)

    def __post_init__(self):
        if self.d < 1:
            raise SpecInvalid(f"dimension d must be >= 1, got {self.d}")
        vectors = np.array(list(product(range(3), repeat=self.d)), dtype=np.int64)
        normals = np.array(
            [v for v in vectors if v.any() and v[np.flatnonzero(v)[0]] == 1], dtype=np.int64
        )
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "normals", normals)
        object.__setattr__(self, "projections", vectors @ normals.T % 3)

    @property
    def r(self) -> int:
        return (3 ** self.d - 1) // 2

    def kernel_size(self, hyperplane: int) -> int:
        return int((self.projections[:, hyperplane] == 0).sum())


@dataclass(frozen=True)
class DiamondTable:
    """Binary operation on [0, r] with a.a = 0 and bijective rows."""

    table: Tuple[Tuple[int, ...], ...]

    @property
    def r_plus_1(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def validate(self) -> None:
        size = self.r_plus_1
        for a, row in enumerate(self.table):
            if len(row) != size:
                raise SpecInvalid(f"diamond row {a} has length {len(row)}, expected {size}")
            if row[a] != 0:
                raise SpecInvalid(f"diamond violates a.a = 0 at a={a}")
            if sorted(row) != list(range(size)):
                raise SpecInvalid(f"diamond row {a} is not a bijection of [0,{size - 1}]")

    def to_rows(self) -> List[List[int]]:
        return [list(row) for row in self.table]


def make_diamond(r: int, kind: str = "cyclic", seed: int = 0) -> DiamondTable:
    """
    Build a diamond operation on [0, r].

    Args:
        r: largest element
        kind: "cyclic" for x - y mod (r+1), "random" for independent uniform
            row bijections fixing a.a = 0
        seed: randomness seed for the "random" kind

    Returns:
        A validated DiamondTable
    """
    if r < 0:
        raise SpecInvalid(f"r must be >= 0, got {r}")
    size = r + 1
    if kind == "cyclic":
        rows = [tuple((x - y) % size for y in range(size)) for x in range(size)]
    elif kind == "random":
        rng = np.random.default_rng(seed)
        rows = []
        for a in range(size):
            values = [int(v) for v in rng.permutation(np.arange(1, size))]
            row = values[:a] + [0] + values[a:]
            rows.append(tuple(row))
    else:
        raise SpecInvalid(f"unknown diamond kind {kind!r}")
    table = DiamondTable(tuple(rows))
    table.validate()
    return table


def count_diamond_tables(r: int) -> int:
    """
    Count valid diamond operations on [0, r] by enumeration.

    Rows are constrained independently, so every row's admissible maps are
    enumerated exhaustively and the counts multiplied.
    """
    limit = get_setting("diamond_count_max_r")
    if r < 0 or r > limit:
        raise SpecInvalid(f"diamond counting is limited to 0 <= r <= {limit}")
    size = r + 1
    total = 1
    for a in range(size):
        admissible = sum(
            1
            for row in product(range(size), repeat=size)
            if row[a] == 0 and len(set(row)) == size
        )
        total *= admissible
    logger.debug("r=%d: %d diamond tables, closed form %d", r, total, factorial(r) ** size)
    return total


def check_dimension(d: int) -> None:
    if d < 1:
        raise SpecInvalid(f"dimension d must be >= 1, got {d}")
    if d > get_setting("max_wfdf_d") and not is_feature_enabled("allow_large_d"):
        raise SpecInvalid(
            f"d={d} exceeds max_wfdf_d={get_setting('max_wfdf_d')}; "
            "set SCHEMEMATE_ALLOW_LARGE_D=true to allow it"
        )


@dataclass(frozen=True)
class WfdfSpec:
    """
    Full parameter record: dimension, diamond, sigma and theta.

    ``sigma[(i, j)]`` and ``theta[(i, j)]`` are given for i < j; theta is +1
    for the 3-cycle x -> x+1 and -1 for x -> x-1.
    """

    d: int
    diamond: DiamondTable
    sigma: Dict[Tuple[int, int], Permutation]
    theta: Dict[Tuple[int, int], int]

    @property
    def r(self) -> int:
        return (3 ** self.d - 1) // 2

    def pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.r + 1) for j in range(i + 1, self.r + 1)]

    def sigma_of(self, i: int, j: int) -> Permutation:
        """sigma_ij, with sigma_ji the inverse of sigma_ij."""
        if i < j:
            return self.sigma[(i, j)]
        forward = self.sigma[(j, i)]
        inverse = [0, 0, 0]
        for x, y in enumerate(forward):
            inverse[y] = x
        return tuple(inverse)

    def validate(self) -> None:
        check_dimension(self.d)
        if self.diamond.r_plus_1 != self.r + 1:
            raise SpecInvalid(f"diamond must act on [0,{self.r}] for d={self.d}")
        self.diamond.validate()
        for pair in self.pairs():
            perm = self.sigma.get(pair)
            if perm is None or sorted(perm) != [0, 1, 2]:
                raise SpecInvalid(f"sigma{pair} is not a permutation of Z3")
            if self.theta.get(pair) not in (1, -1):
                raise SpecInvalid(f"theta{pair} must be '+' or '-'")

    def to_dict(self) -> Dict[str, Any]:
        pairs = self.pairs()
        return {
            "d": self.d,
            "diamond": self.diamond.to_rows(),
            "sigma": [list(self.sigma[p]) for p in pairs],
            "theta": [THETA_SYMBOLS[self.theta[p]] for p in pairs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WfdfSpec":
        try:
            d = int(data["d"])
            check_dimension(d)
            diamond = DiamondTable(tuple(tuple(int(x) for x in row) for row in data["diamond"]))
            r = (3 ** d - 1) // 2
            pairs = [(i, j) for i in range(r + 1) for j in range(i + 1, r + 1)]
            if len(data["sigma"]) != len(pairs) or len(data["theta"]) != len(pairs):
                raise SpecInvalid(f"sigma and theta need {len(pairs)} entries for d={d}")
            sigma = {p: tuple(int(x) for x in perm) for p, perm in zip(pairs, data["sigma"])}
            symbols = {v: k for k, v in THETA_SYMBOLS.items()}
            theta = {p: symbols.get(t, 0) for p, t in zip(pairs, data["theta"])}
        except (KeyError, TypeError, ValueError) as e:
            raise SpecInvalid(f"malformed WFDF spec: {e}")
        spec = cls(d=d, diamond=diamond, sigma=sigma, theta=theta)
        spec.validate()
        return spec


SigmaChoice = Literal["identity", "random"]
ThetaChoice = Literal["plus", "random"]


def default_wfdf_spec(
    d: int,
    diamond: str = "cyclic",
    sigma: SigmaChoice = "identity",
    theta: ThetaChoice = "plus",
    seed: Optional[int] = None,
) -> WfdfSpec:
    """
    Spec factory behind the CLI flags.

    Args:
        d: dimension of Z3^d
        diamond: "cyclic" or "random"
        sigma: "identity" or "random"
        theta: "plus" or "random"
        seed: seed shared by all random choices (defaults to the seed setting)

    Returns:
        A validated WfdfSpec
    """
    check_dimension(d)
    seed = get_setting("seed") if seed is None else seed
    r = (3 ** d - 1) // 2
    table = make_diamond(r, diamond, seed)
    rng = np.random.default_rng([seed, 1])
    all_perms = list(permutations(range(3)))
    pairs = [(i, j) for i in range(r + 1) for j in range(i + 1, r + 1)]
    if sigma == "identity":
        sigmas = {p: IDENTITY for p in pairs}
    elif sigma == "random":
        sigmas = {p: all_perms[int(rng.integers(6))] for p in pairs}
    else:
        raise SpecInvalid(f"unknown sigma choice {sigma!r}")
    if theta == "plus":
        thetas = {p: 1 for p in pairs}
    elif theta == "random":
        thetas = {p: int(rng.choice([1, -1])) for p in pairs}
    else:
        raise SpecInvalid(f"unknown theta choice {theta!r}")
    spec = WfdfSpec(d=d, diamond=table, sigma=sigmas, theta=thetas)
    spec.validate()
    return spec


def random_wfdf_spec(d: int, seed: int) -> WfdfSpec:
    return default_wfdf_spec(d, diamond="random", sigma="random", theta="random", seed=seed)
