"""Generalized Hurwitz numbers of possibly disconnected covers.

Two independent routes are provided:

* :func:`hurwitz_number` sums normalized characters over Young diagrams;
* :func:`hurwitz_oracle` multiplies explicit permutations in the group
  algebra and reads off the coefficient of the identity.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .characters import char_table, phi
from .errors import BudgetExceededError, DegreeMismatchError
from .partitions import Partition, class_size, partitions_of
from .perms import all_perms, class_members, commutator, compose, cycle_type, identity

BUDGET_ENV = "GENHURWITZ_BUDGET"
DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


@dataclass(frozen=True)
class CoverSpec:
    genus: int
    degree: int
    profiles: tuple[Partition, ...] = field(default=())

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("target genus must be nonnegative")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        profiles = tuple(Partition(p) for p in self.profiles)
        for p in profiles:
            if p.degree != self.degree:
                raise DegreeMismatchError(f"profile {p} is not a partition of {self.degree}")
        object.__setattr__(self, "profiles", profiles)


@dataclass(frozen=True)
class GenusResult:
    """Euler characteristic data 2h-2 of the source surface.

    ``euler2h2`` is None when the Hurwitz formula has no integer solution h.
    """

    euler2h2: int | None

    @property
    def parity_failure(self) -> bool:
        return self.euler2h2 is None

    @property
    def genus(self) -> int | None:
        return None if self.euler2h2 is None else self.euler2h2 // 2 + 1


def euler_characteristic(genus: int, degree: int, profiles: Sequence[Partition]) -> int:
    """Raw value of 2h-2 from the Riemann-Hurwitz count; may be odd."""
    return sum(degree - len(p) for p in profiles) - (2 - 2 * genus) * degree


def source_euler(spec: CoverSpec) -> GenusResult:
    e = euler_characteristic(spec.genus, spec.degree, spec.profiles)
    return GenusResult(None if e % 2 else e)


@lru_cache(maxsize=None)
def _hurwitz(genus: int, degree: int, profiles: tuple[Partition, ...]) -> Fraction:
    tab = char_table(degree, cap=max(degree, 10))
    n = factorial(degree)
    total = Fraction(0)
    for lam in tab.shapes:
        term = Fraction(tab.dims[lam], n) ** (2 - 2 * genus)
        for p in profiles:
            term *= phi(lam, p)
            if not term:
                break
        total += term
    return total


def hurwitz_number(spec: CoverSpec) -> Fraction:
    """Hurwitz number by the character formula.

    >>> hurwitz_number(CoverSpec(0, 3, (Partition((2, 1)),) * 2))
    Fraction(1, 2)
    """
    key = tuple(sorted(spec.profiles, reverse=True))
    return _hurwitz(spec.genus, spec.degree, key)


def mu(genus: int, *profiles: Partition) -> Fraction:
    """Shorthand for ``hurwitz_number``; the degree is read off the profiles."""
    if not profiles:
        raise ValueError("use hurwitz_number(CoverSpec(...)) when there are no profiles")
    d = Partition(profiles[0]).degree
    return hurwitz_number(CoverSpec(genus, d, tuple(profiles)))


# Group algebra oracle.  Elements are Counter[Perm] with integer coefficients.


def oracle_cost(spec: CoverSpec) -> int:
    """Number of permutation compositions the oracle will perform."""
    n = factorial(spec.degree)
    cost = 0
    if spec.genus:
        cost += n * n + (spec.genus - 1) * n * n
    support = 1 if not spec.genus else n
    for p in sorted(spec.profiles, key=class_size)[:-1]:
        support = min(n, support * class_size(p))
        cost += support * class_size(p)
    return cost


@lru_cache(maxsize=None)
def commutator_distribution(d: int) -> dict[tuple[int, ...], int]:
    """x -> #{(a, b) in S_d^2 : [a, b] = x}."""
    perms = all_perms(d)
    return dict(Counter(commutator(a, b) for a in perms for b in perms))


def _multiply(x: Counter, y: dict) -> Counter:
    out: Counter = Counter()
    for a, ca in x.items():
        for b, cb in y.items():
            out[compose(a, b)] += ca * cb
    return out


def hurwitz_oracle(spec: CoverSpec, budget: int | None = None) -> Fraction:
    """Hurwitz number as (1/d!) [identity] prod [a_j, b_j] C_1 ... C_k.

    The product is accumulated in the group algebra; the last (largest)
    class is not multiplied out, its contribution is read off by inversion.
    """
    budget = default_budget() if budget is None else budget
    cost = oracle_cost(spec)
    if cost > budget:
        raise BudgetExceededError(cost, budget, "Hurwitz oracle")
    d = spec.degree
    e = identity(d)
    acc: Counter = Counter({e: 1})
    if spec.genus:
        comm = commutator_distribution(d)
        for _ in range(spec.genus):
            acc = _multiply(acc, comm)
    profiles = sorted(spec.profiles, key=class_size)
    if profiles:
        *head, last = profiles
        for p in head:
            acc = _multiply(acc, dict.fromkeys(class_members(p), 1))
        # x * s = e with s of type `last` iff x has type `last` (inverses share type).
        count = sum(c for x, c in acc.items() if cycle_type(x) == last)
    else:
        count = acc[e]
    return Fraction(count, factorial(d))


def brute_force_tuples(spec: CoverSpec) -> Fraction:
    """Literal tuple enumeration, only usable for tiny cases."""
    from itertools import product

    d = spec.degree
    perms = all_perms(d)
    e = identity(d)
    factors = [perms] * (2 * spec.genus) + [class_members(p) for p in spec.profiles]
    count = 0
    for tup in product(*factors):
        x = e
        for j in range(spec.genus):
            x = compose(x, commutator(tup[2 * j], tup[2 * j + 1]))
        for s in tup[2 * spec.genus:]:
            x = compose(x, s)
        count += x == e
    return Fraction(count, factorial(d))


def associativity_sides(spec: CoverSpec, split: int) -> dict[tuple[int, int], tuple[Fraction, Fraction]]:
    """Both sides of the cutting identity for each way of splitting the genus.

    Returns {(g1, g2): (lhs, rhs)} with lhs the Hurwitz number of ``spec`` and
    rhs = sum_D mu_g1(P_1..P_l, D) (d!/|C_D|) mu_g2(D, P_{l+1}..P_k).
    """
    k = len(spec.profiles)
    if not 1 <= split < k:
        raise ValueError(f"split index must satisfy 1 <= l < k = {k}, got {split}")
    d = spec.degree
    n = factorial(d)
    left, right = spec.profiles[:split], spec.profiles[split:]
    lhs = hurwitz_number(spec)
    out = {}
    for g1 in range(spec.genus + 1):
        g2 = spec.genus - g1
        rhs = sum(
            (
                hurwitz_number(CoverSpec(g1, d, left + (D,)))
                * Fraction(n, class_size(D))
                * hurwitz_number(CoverSpec(g2, d, (D,) + right))
                for D in partitions_of(d)
            ),
            Fraction(0),
        )
        out[g1, g2] = (lhs, rhs)
    return out


def associativity_check(spec: CoverSpec, split: int) -> bool:
    """True iff cutting between profile ``split`` and ``split+1`` preserves the
    Hurwitz number for every genus split g1 + g2 = g."""
    return all(l == r for l, r in associativity_sides(spec, split).values())
