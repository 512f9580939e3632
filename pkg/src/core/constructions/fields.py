"""
Arithmetic in GF(2^k) for k = 2, 3, 4 via exponent / logarithm tables.

Elements are integers whose bits are polynomial coefficients over GF(2);
the generator is x (the integer 2), primitive for every polynomial below.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, Tuple

from ..errors import InternalError, SpecInvalid

logger = logging.getLogger(__name__)

# x^2+x+1, x^3+x+1, x^4+x+1
IRREDUCIBLE_POLYNOMIALS: Dict[int, int] = {2: 0b111, 3: 0b1011, 4: 0b10011}

GENERATOR = 2


@dataclass(frozen=True)
class GFTable:
    k: int
    q: int
    polynomial: int
    exp: Tuple[int, ...]
    log: Tuple[int, ...]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(q)")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def power(self, i: int) -> int:
        """g^i."""
        return self.exp[i % (self.q - 1)]

    def log_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0")
        return self.log[a]


def _carryless_mul(a: int, b: int, polynomial: int, k: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a >> k & 1:
            a ^= polynomial
    return result


def gf_table(q: int) -> GFTable:
    """
    Build the exp/log tables of GF(q).

    Args:
        q: field size, one of 4, 8, 16

    Returns:
        GFTable with axioms spot-checked
    """
    k = q.bit_length() - 1
    if q != 1 << k or k not in IRREDUCIBLE_POLYNOMIALS:
        raise SpecInvalid(f"unsupported field size q={q}; use 4, 8 or 16")
    polynomial = IRREDUCIBLE_POLYNOMIALS[k]
    exp = [1]
    for _ in range(q - 2):
        exp.append(_carryless_mul(exp[-1], GENERATOR, polynomial, k))
    if len(set(exp)) != q - 1:
        raise InternalError(f"x is not primitive modulo {bin(polynomial)}")
    log = [-1] * q
    for i, value in enumerate(exp):
        log[value] = i
    table = GFTable(k=k, q=q, polynomial=polynomial, exp=tuple(exp), log=tuple(log))
    _spot_check(table)
    return table


def _spot_check(table: GFTable) -> None:
    sample = range(min(table.q, 8))
    for a, b, c in product(sample, repeat=3):
        left = table.mul(a, table.add(b, c))
        right = table.add(table.mul(a, b), table.mul(a, c))
        if left != right or table.mul(a, b) != _carryless_mul(a, b, table.polynomial, table.k):
            raise InternalError(f"GF({table.q}) axioms fail at {(a, b, c)}")
    for a in range(1, table.q):
        if table.mul(a, table.inv(a)) != 1:
            raise InternalError(f"GF({table.q}) inverse fails at {a}")
    logger.debug("GF(%d) tables built and spot-checked", table.q)
