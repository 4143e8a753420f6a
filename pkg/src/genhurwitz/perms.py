"""Permutations of {0, ..., d-1} as tuples of images.

Composition is left to right: ``compose(a, b)`` is the permutation that
applies ``a`` first and then ``b``, i.e. ``i -> b[a[i]]``.  Products of
several factors read the same way, so ``a*b*c`` applies ``a`` first.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .partitions import Partition

Perm = tuple[int, ...]


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(a: Perm, b: Perm) -> Perm:
    return tuple(b[i] for i in a)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, ai in enumerate(a):
        inv[ai] = i
    return tuple(inv)


def commutator(a: Perm, b: Perm) -> Perm:
    """a * b * a^-1 * b^-1 in left-to-right order."""
    return compose(compose(compose(a, b), inverse(a)), inverse(b))


def cycle_type(a: Perm) -> Partition:
    seen = [False] * len(a)
    lengths = []
    for start in range(len(a)):
        if seen[start]:
            continue
        n = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = a[i]
            n += 1
        lengths.append(n)
    return Partition(lengths)


@lru_cache(maxsize=None)
def all_perms(d: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(d)))


@lru_cache(maxsize=None)
def conjugacy_classes(d: int) -> dict[Partition, tuple[Perm, ...]]:
    classes: dict[Partition, list[Perm]] = {}
    for a in all_perms(d):
        classes.setdefault(cycle_type(a), []).append(a)
    return {k: tuple(v) for k, v in classes.items()}


def class_members(part: Partition) -> tuple[Perm, ...]:
    return conjugacy_classes(part.degree).get(Partition(part), ())


def representative(part: Partition) -> Perm:
    """A fixed permutation with cycle type ``part`` built from consecutive cycles."""
    images = []
    start = 0
    for r in part:
        images.extend(start + (j + 1) % r for j in range(r))
        start += r
    return tuple(images)
