"""Integer partitions and the combinatorial scalars attached to them.

A :class:`Partition` serves both as a cycle type (conjugacy class of S_d)
and as a Young diagram (irreducible representation of S_d).
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Parts may be given in any order; they are sorted on construction.
    Since this is a tuple, ``<`` is lexicographic on the parts, so the
    canonical order (decreasing lexicographic) is ``sorted(..., reverse=True)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise ValueError(f"partition parts must be positive integers, got {p!r}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"(2,1)"``, ``"2,1"`` or ``"()"``."""
        s = text.strip()
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        s = s.strip()
        if not s:
            return cls(())
        if not re.fullmatch(r"\s*\d+\s*(,\s*\d+\s*)*,?\s*", s):
            raise ValueError(f"cannot parse partition {text!r}")
        return cls(int(x) for x in s.split(",") if x.strip())

    @classmethod
    def ones(cls, d: int) -> Partition:
        return cls((1,) * d)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def colength(self) -> int:
        """d - l, the minimal number of transpositions with this cycle type."""
        return self.degree - len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map r -> m_r, the number of parts equal to r."""
        return dict(Counter(self))

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def hooks(self) -> list[int]:
        conj = self.conjugate()
        return [
            (row - j - 1) + (conj[j] - i - 1) + 1
            for i, row in enumerate(self)
            for j in range(row)
        ]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def parse_profiles(text: str) -> list[Partition]:
    """Parse a semicolon-separated list like ``"(2,1);(3)"``."""
    text = text.strip()
    if not text:
        return []
    return [Partition.parse(chunk) for chunk in text.split(";") if chunk.strip()]


@lru_cache(maxsize=None)
def _partitions(d: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _partitions_of(d: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(d, d))


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in decreasing lexicographic order.

    >>> [str(p) for p in partitions_of(3)]
    ['(3)', '(2,1)', '(1,1,1)']
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return list(_partitions_of(d))


def aut_factor(part: Partition) -> int:
    """prod_r m_r!, the order of the part-permuting symmetries."""
    return prod(factorial(m) for m in Counter(part).values())


def centralizer_order(part: Partition) -> int:
    """prod_r r^{m_r} m_r!, the centralizer order of a permutation of this type."""
    return aut_factor(part) * prod(part)


def class_size(part: Partition) -> int:
    """Number of permutations in S_d with cycle type ``part``."""
    return factorial(sum(part)) // centralizer_order(part)


def dim_irrep(shape: Partition) -> int:
    """Dimension of the irreducible S_d-module via the hook length formula."""
    return factorial(sum(shape)) // prod(Partition(shape).hooks())
