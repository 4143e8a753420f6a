"""Irreducible characters of the symmetric group.

Characters are evaluated with the Murnaghan-Nakayama rule on beta-sets:
removing a border strip of length r from a shape is the same as sliding
one bead of its beta-set down by r onto an empty position, with sign
(-1)^(beads jumped over).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from types import MappingProxyType
from typing import Mapping

from .errors import DegreeCapError, DegreeMismatchError
from .partitions import Partition, class_size, dim_irrep, partitions_of
from .perms import representative

DEFAULT_DEGREE_CAP = 10


def _check_same_degree(shape: Partition, cls: Partition) -> None:
    if sum(shape) != sum(cls):
        raise DegreeMismatchError(
            f"{Partition(shape)} and {Partition(cls)} are partitions of different degrees"
        )


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    n = len(shape)
    return tuple(part + n - 1 - i for i, part in enumerate(shape))


def _shape_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return tuple(b - (n - 1 - i) for i, b in enumerate(beta) if b - (n - 1 - i) > 0)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cls: tuple[int, ...]) -> int:
    if not cls:
        return 1
    r, rest = cls[0], cls[1:]
    beta = _beta_set(shape)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = tuple(target if c == b else c for c in beta)
        term = _mn(_shape_from_beta(moved), rest)
        total += -term if height % 2 else term
    return total


def character(shape: Partition, cls: Partition) -> int:
    """chi_shape evaluated on a permutation of cycle type ``cls``."""
    _check_same_degree(shape, cls)
    return _mn(tuple(shape), tuple(cls))


def phi(shape: Partition, cls: Partition) -> Fraction:
    """Normalized character |C_cls| chi_shape(cls) / dim shape."""
    _check_same_degree(shape, cls)
    return Fraction(class_size(cls) * character(shape, cls), dim_irrep(shape))


@dataclass(frozen=True)
class CharTable:
    degree: int
    table: Mapping[tuple[Partition, Partition], int]
    dims: Mapping[Partition, int]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        return self.table[key]

    @property
    def shapes(self) -> list[Partition]:
        return partitions_of(self.degree)

    def rows(self) -> list[list[int]]:
        parts = self.shapes
        return [[self.table[lam, mu] for mu in parts] for lam in parts]


@lru_cache(maxsize=None)
def _char_table(d: int) -> CharTable:
    parts = partitions_of(d)
    table = {(lam, mu): character(lam, mu) for lam in parts for mu in parts}
    dims = {lam: dim_irrep(lam) for lam in parts}
    return CharTable(d, MappingProxyType(table), MappingProxyType(dims))


def char_table(d: int, cap: int = DEFAULT_DEGREE_CAP) -> CharTable:
    """The full character table of S_d, cached per degree."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d > cap:
        raise DegreeCapError(d, cap, "character table")
    return _char_table(d)


def check_orthogonality(d: int) -> bool:
    """Row orthogonality (1/d!) sum_C |C| chi_a(C) chi_b(C) = delta_ab."""
    tab = char_table(d, cap=max(d, DEFAULT_DEGREE_CAP))
    parts = tab.shapes
    n = factorial(d)
    for lam in parts:
        for kap in parts:
            s = sum(class_size(mu) * tab[lam, mu] * tab[kap, mu] for mu in parts)
            if Fraction(s, n) != (1 if lam == kap else 0):
                return False
    return True


# Independent character oracle: permutation characters on tabloids
# unitriangularly decomposed with brute-force Kostka numbers.


def _tabloids(shape: Partition, d: int) -> list[tuple[frozenset[int], ...]]:
    out = []

    def rec(remaining: frozenset[int], rows: tuple[int, ...], acc):
        if not rows:
            out.append(acc)
            return
        for row in combinations(sorted(remaining), rows[0]):
            rec(remaining - set(row), rows[1:], acc + (frozenset(row),))

    rec(frozenset(range(d)), tuple(shape), ())
    return out


def permutation_character(shape: Partition, perm: tuple[int, ...]) -> int:
    """Trace of ``perm`` on the tabloid module of ``shape``: its fixed tabloids."""
    count = 0
    for tab in _tabloids(shape, len(perm)):
        if all(frozenset(perm[i] for i in row) == row for row in tab):
            count += 1
    return count


def kostka(shape: Partition, content: Partition) -> int:
    """Number of semistandard tableaux of ``shape`` with ``content``, by brute force."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    letters = [v for v, m in enumerate(content) for _ in range(m)]
    count = 0
    for filling in set(permutations(letters)):
        t = dict(zip(cells, filling))
        ok = all(
            (j == 0 or t[i, j - 1] <= t[i, j]) and (i == 0 or t[i - 1, j] < t[i, j])
            for i, j in cells
        )
        count += ok
    return count


def _dominates(a: Partition, b: Partition) -> bool:
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


@lru_cache(maxsize=None)
def tabloid_character_table(d: int) -> dict[tuple[Partition, Partition], int]:
    """Character table computed by traces on tabloid modules (small d only)."""
    parts = partitions_of(d)
    xi = {
        (mu, cls): permutation_character(mu, representative(cls))
        for mu in parts
        for cls in parts
    }
    chi: dict[tuple[Partition, Partition], int] = {}
    # Dominance-larger shapes come first in decreasing lexicographic order.
    for mu in parts:
        for cls in parts:
            val = xi[mu, cls]
            for lam in parts:
                if lam != mu and _dominates(lam, mu):
                    val -= kostka(lam, mu) * chi[lam, cls]
            chi[mu, cls] = val
    return chi
