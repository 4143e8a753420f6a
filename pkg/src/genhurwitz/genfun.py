"""Genus graded generating functions of Hurwitz numbers.

For marks (u_i, D_i) the series is

    Phi_g = sum_l sum_G z^(2h-2) mu_g(D_1^l_1, ..., D_n^l_n, [G_1], G)
            prod u_i^l_i / l_i!  [q_G_1] p_G

truncated at u_i^L_i.  Two constructions are offered: :func:`direct_series`
evaluates every coefficient from Hurwitz numbers, :func:`evolve` applies
truncated exponentials of cut-and-join operators to an initial value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from types import MappingProxyType
from typing import Mapping, Sequence

from .cutjoin import apply_w, build_w, schur_z
from .errors import DegreeMismatchError
from .hurwitz import CoverSpec, euler_characteristic, hurwitz_number
from .laurent import ZLaurent
from .partitions import Partition, class_size, dim_irrep, partitions_of
from .poly import Monomial, PPoly, format_term

DEFAULT_ORDER = 6


@dataclass(frozen=True)
class MarkedProfile:
    label: str
    partition: Partition

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))


def make_marks(partitions: Sequence[Partition]) -> tuple[MarkedProfile, ...]:
    """Label marks ``u`` (single mark) or ``u1, u2, ...``."""
    if len(partitions) == 1:
        return (MarkedProfile("u", partitions[0]),)
    return tuple(MarkedProfile(f"u{i + 1}", p) for i, p in enumerate(partitions))


@dataclass(frozen=True)
class GenFunSeries:
    genus: int
    degree: int
    marks: tuple[MarkedProfile, ...]
    k: int
    orders: tuple[int, ...]
    coefficients: Mapping[tuple[int, ...], PPoly] = field(repr=False)

    def __post_init__(self):
        if len(self.orders) != len(self.marks):
            raise ValueError("need one truncation order per mark")
        object.__setattr__(self, "coefficients", MappingProxyType(dict(self.coefficients)))

    def exponent_vectors(self) -> list[tuple[int, ...]]:
        vecs = product(*(range(L + 1) for L in self.orders))
        return sorted(vecs, key=lambda v: (sum(v), tuple(-x for x in v)))

    def __getitem__(self, exps) -> PPoly:
        if isinstance(exps, int):
            exps = (exps,)
        return self.coefficients.get(tuple(exps), PPoly())

    def same_coefficients(self, other: GenFunSeries) -> bool:
        keys = set(self.coefficients) | set(other.coefficients)
        return all(self[k] == other[k] for k in keys)

    def terms(self) -> list[tuple[tuple[int, ...], Monomial, ZLaurent]]:
        """All nonzero terms ordered by total u-degree, then monomial."""
        out = []
        for v in self.exponent_vectors():
            for mono, c in self[v].sorted_items():
                out.append((v, mono, c))
        return out

    def __str__(self) -> str:
        pieces = []
        for v, mono, c in self.terms():
            us = [
                m.label if e == 1 else f"{m.label}^{e}"
                for m, e in zip(self.marks, v)
                if e
            ]
            pieces.append(format_term(c, [str(mono)] if str(mono) != "1" else [], us))
        if not pieces:
            return "0"
        return " + ".join(pieces).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "degree": self.degree,
            "k": self.k,
            "marks": [{"label": m.label, "partition": list(m.partition)} for m in self.marks],
            "orders": list(self.orders),
            "coefficients": [
                {"exponents": list(v), "poly": self[v].to_json()}
                for v in self.exponent_vectors()
                if self[v]
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> GenFunSeries:
        marks = tuple(MarkedProfile(m["label"], Partition(m["partition"])) for m in data["marks"])
        coeffs = {
            tuple(item["exponents"]): PPoly.from_json(item["poly"])
            for item in data["coefficients"]
        }
        return cls(data["genus"], data["degree"], marks, data["k"], tuple(data["orders"]), coeffs)


def initial_k0(d: int) -> PPoly:
    """z^(-2d) p_1^d / d!."""
    return PPoly({Partition.ones(d): ZLaurent.monomial(Fraction(1, factorial(d)), -2 * d)})


def initial_k1(d: int) -> PPoly:
    """sum_D z^(-2 l(D)) (|C_D|/d!) q_D p_D."""
    return PPoly(
        {
            Monomial(D, D): ZLaurent.monomial(Fraction(class_size(D), factorial(d)), -2 * len(D))
            for D in partitions_of(d)
        }
    )


def initial_k0_from_schur(d: int) -> PPoly:
    """sum_shape (dim/d!) S_shape{p, z}."""
    total = PPoly()
    for shape in partitions_of(d):
        total = total + schur_z(shape).scale(Fraction(dim_irrep(shape), factorial(d)))
    return total


def initial_k1_from_schur(d: int) -> PPoly:
    """sum_shape z^(2d) S_shape{q, z} S_shape{p, z}."""
    total = PPoly()
    for shape in partitions_of(d):
        s = schur_z(shape)
        total = total + (s.to_q() * s).scale(ZLaurent.monomial(1, 2 * d))
    return total


def phi_coefficient(
    genus: int,
    d: int,
    marks: Sequence[tuple[Partition, int]],
    extra: Sequence[Partition],
    gamma: Partition,
) -> ZLaurent:
    """Coefficient of prod u_j^l_j [prod p^(i)_G_i] p_gamma in Phi_genus.

    ``marks`` holds (D_j, l_j) pairs; ``extra`` the fixed profiles G_1..G_k.
    Any number of extra alphabets is allowed here.
    """
    profiles: list[Partition] = []
    scale = Fraction(1)
    for part, l in marks:
        profiles.extend([Partition(part)] * l)
        scale /= factorial(l)
    profiles.extend(Partition(x) for x in extra)
    profiles.append(Partition(gamma))
    e = euler_characteristic(genus, d, profiles)
    if e % 2:
        return ZLaurent()
    value = hurwitz_number(CoverSpec(genus, d, tuple(profiles)))
    return ZLaurent.monomial(value * scale, e)


def initial_value(genus: int, d: int, k: int = 0) -> PPoly:
    """Phi_genus with no marks, assembled coefficientwise."""
    terms = {}
    for gamma in partitions_of(d):
        if k == 0:
            terms[Monomial(gamma)] = phi_coefficient(genus, d, (), (), gamma)
        else:
            for g1 in partitions_of(d):
                terms[Monomial(gamma, g1)] = phi_coefficient(genus, d, (), (g1,), gamma)
    return PPoly(terms)


def _check_k(k: int) -> None:
    if k not in (0, 1):
        raise ValueError("the series engine supports k = 0 or k = 1 extra alphabets")


def direct_series(
    genus: int,
    d: int,
    marks: Sequence[MarkedProfile],
    orders: Sequence[int],
    k: int = 0,
) -> GenFunSeries:
    """Series with every coefficient evaluated from Hurwitz numbers."""
    _check_k(k)
    marks = tuple(marks)
    coeffs = {}
    for v in product(*(range(L + 1) for L in orders)):
        pairs = [(m.partition, l) for m, l in zip(marks, v)]
        terms = {}
        for gamma in partitions_of(d):
            if k == 0:
                terms[Monomial(gamma)] = phi_coefficient(genus, d, pairs, (), gamma)
            else:
                for g1 in partitions_of(d):
                    terms[Monomial(gamma, g1)] = phi_coefficient(genus, d, pairs, (g1,), gamma)
        coeffs[v] = PPoly(terms)
    return GenFunSeries(genus, d, marks, k, tuple(orders), coeffs)


def _homogeneous_degree(poly: PPoly) -> int:
    degrees = poly.p_degrees()
    if len(degrees) != 1:
        raise DegreeMismatchError(f"initial value must be homogeneous in p, got degrees {sorted(degrees)}")
    return degrees.pop()


def evolve(
    initial: PPoly,
    marks: Sequence[MarkedProfile],
    orders: Sequence[int] | None = None,
    genus: int = 0,
) -> GenFunSeries:
    """Truncated prod_i exp(u_i W(D_i, z)) applied to ``initial``.

    The coefficient of u^l is W_1^l_1/l_1! ... W_n^l_n/l_n! applied to
    ``initial`` with W_n acting first.
    """
    marks = tuple(marks)
    orders = tuple(orders) if orders is not None else (DEFAULT_ORDER,) * len(marks)
    d = _homogeneous_degree(initial)
    k = int(any(m.q is not None for m, _ in initial.items()))
    ops = [build_w(d, m.partition) for m in marks]
    coeffs: dict[tuple[int, ...], PPoly] = {}
    # Fill in lexicographic order so that v - e_j is always ready.
    for v in product(*(range(L + 1) for L in orders)):
        nz = [j for j, x in enumerate(v) if x]
        if not nz:
            coeffs[v] = initial
            continue
        j = nz[0]
        prev = v[:j] + (v[j] - 1,) + v[j + 1:]
        coeffs[v] = apply_w(ops[j], coeffs[prev]).scale(Fraction(1, v[j]))
    return GenFunSeries(genus, d, marks, k, orders, coeffs)


def pde_residual(series: GenFunSeries, i: int) -> dict[tuple[int, ...], PPoly]:
    """d Phi/du_i - W(D_i, z) Phi for every exponent vector with l_i < L_i."""
    op = build_w(series.degree, series.marks[i].partition)
    out = {}
    for v in series.exponent_vectors():
        if v[i] >= series.orders[i]:
            continue
        nxt = v[:i] + (v[i] + 1,) + v[i + 1:]
        derivative = series[nxt].scale(v[i] + 1)
        out[v] = derivative - apply_w(op, series[v])
    return out


def grading_failures(series: GenFunSeries) -> list[tuple[tuple[int, ...], Monomial]]:
    """Terms whose z-power is not the single value 2h-2 fixed by Riemann-Hurwitz."""
    bad = []
    for v, mono, c in series.terms():
        profiles = [m.partition for m, l in zip(series.marks, v) for _ in range(l)]
        if mono.q is not None:
            profiles.append(mono.q)
        profiles.append(mono.p)
        e = euler_characteristic(series.genus, series.degree, profiles)
        if c.single_term() is None or c.single_term()[0] != e:
            bad.append((v, mono))
    return bad
