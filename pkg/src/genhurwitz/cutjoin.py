"""Genus expanded cut-and-join operators on the degree-d slice of the p-ring.

``W(D, z)`` sends p_G' to

    sum_G (d!/|C_G'|) z^(d + l(G') - l(D) - l(G)) mu_0(G', D, G) p_G

and is stored as a sparse matrix ``{(G', G): ZLaurent}``: row G' is the image
of p_G'.  The differential form sum c p_G d/dp_G' is only a rendering of
this matrix, where d/dp_G' carries the 1/G'! normalization.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping

from .characters import phi
from .errors import DegreeCapError, DegreeMismatchError
from .hurwitz import CoverSpec, hurwitz_number
from .laurent import ZERO, ZLaurent
from .partitions import Partition, aut_factor, class_size, dim_irrep, partitions_of
from .perms import class_members, conjugacy_classes, representative
from .perms import compose as perm_compose
from .poly import Monomial, PPoly

DEFAULT_ORACLE_CAP = 7

Matrix = Mapping[tuple[Partition, Partition], ZLaurent]


@dataclass(frozen=True)
class CutJoinOp:
    """Linear operator on span{p_G : G |- d}.

    ``partition`` is None for composites built by :func:`compose` or
    :func:`linear_combination`.
    """

    degree: int
    matrix: Matrix
    partition: Partition | None = None
    normalized: bool = False

    def __post_init__(self):
        clean = {k: v for k, v in dict(self.matrix).items() if v}
        object.__setattr__(self, "matrix", MappingProxyType(clean))

    def entry(self, src: Partition, dst: Partition) -> ZLaurent:
        return self.matrix.get((src, dst), ZERO)

    def same_matrix(self, other: CutJoinOp) -> bool:
        return self.degree == other.degree and dict(self.matrix) == dict(other.matrix)

    def evaluate_z(self, z) -> dict[tuple[Partition, Partition], Fraction]:
        return {k: v.evaluate(z) for k, v in self.matrix.items() if v.evaluate(z)}

    def __str__(self) -> str:
        return render_differential(self)


def _same_degree(d: int, part: Partition) -> Partition:
    part = Partition(part)
    if part.degree != d:
        raise DegreeMismatchError(f"{part} is not a partition of {d}")
    return part


@lru_cache(maxsize=None)
def _build_w(d: int, part: Partition) -> CutJoinOp:
    n = factorial(d)
    matrix = {}
    for src in partitions_of(d):
        for dst in partitions_of(d):
            m = hurwitz_number(CoverSpec(0, d, (src, part, dst)))
            if m:
                exp = d + len(src) - len(part) - len(dst)
                matrix[src, dst] = ZLaurent.monomial(Fraction(n, class_size(src)) * m, exp)
    return CutJoinOp(d, matrix, part, False)


def build_w(d: int, part: Partition) -> CutJoinOp:
    """The genus expanded cut-and-join operator W(part, z) in degree d."""
    return _build_w(d, _same_degree(d, part))


def normalize(op: CutJoinOp) -> CutJoinOp:
    """Multiply by z^(l(D) - d), turning W(D, z) into its normalized form."""
    if op.normalized:
        raise ValueError("operator is already normalized")
    if op.partition is None:
        raise ValueError("only operators W(D, z) of a single class can be normalized")
    k = len(op.partition) - op.degree
    return CutJoinOp(
        op.degree, {key: v.shift(k) for key, v in op.matrix.items()}, op.partition, True
    )


def build_w_hat(d: int, part: Partition) -> CutJoinOp:
    return normalize(build_w(d, part))


def apply_w(op: CutJoinOp, poly: PPoly) -> PPoly:
    """Apply ``op`` to the p-alphabet of ``poly``; q factors ride along."""
    out: dict[Monomial, ZLaurent] = {}
    for mono, coeff in poly.items():
        if mono.p.degree != op.degree:
            raise DegreeMismatchError(
                f"operator acts in degree {op.degree}, got monomial {mono} of p-degree {mono.p.degree}"
            )
        for dst in partitions_of(op.degree):
            c = op.matrix.get((mono.p, dst))
            if c:
                key = Monomial(dst, mono.q)
                out[key] = out[key] + c * coeff if key in out else c * coeff
    return PPoly(out)


def compose(a: CutJoinOp, b: CutJoinOp) -> CutJoinOp:
    """The operator a o b, which applies ``b`` first."""
    if a.degree != b.degree:
        raise DegreeMismatchError("operators act in different degrees")
    parts = partitions_of(a.degree)
    out = {}
    for src in parts:
        for dst in parts:
            acc = ZERO
            for mid in parts:
                x = b.matrix.get((src, mid))
                if x:
                    y = a.matrix.get((mid, dst))
                    if y:
                        acc = acc + x * y
            if acc:
                out[src, dst] = acc
    return CutJoinOp(a.degree, out)


def linear_combination(d: int, terms: Iterable[tuple[ZLaurent, CutJoinOp]]) -> CutJoinOp:
    out: dict[tuple[Partition, Partition], ZLaurent] = {}
    for c, op in terms:
        if op.degree != d:
            raise DegreeMismatchError("operators act in different degrees")
        for key, v in op.matrix.items():
            out[key] = out.get(key, ZERO) + c * v
    return CutJoinOp(d, out)


def identity_op(d: int) -> CutJoinOp:
    return CutJoinOp(d, {(g, g): ZLaurent.const(1) for g in partitions_of(d)})


# Structure constants of the class algebra.


@dataclass(frozen=True)
class StructureConstants:
    degree: int
    table: Mapping[tuple[Partition, Partition, Partition], Fraction] = field(repr=False)

    def __getitem__(self, key: tuple[Partition, Partition, Partition]) -> Fraction:
        a, b, c = (Partition(x) for x in key)
        return self.table.get((a, b, c), Fraction(0))

    def nonzero(self) -> dict[tuple[Partition, Partition, Partition], Fraction]:
        return {k: v for k, v in self.table.items() if v}

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.degree == other.degree and self.nonzero() == other.nonzero()


@lru_cache(maxsize=None)
def structure_constants(d: int) -> StructureConstants:
    """C^{D3}_{D1 D2} = (d!/|C_D3|) mu_0(D1, D2, D3)."""
    n = factorial(d)
    parts = partitions_of(d)
    table = {
        (a, b, c): Fraction(n, class_size(c)) * hurwitz_number(CoverSpec(0, d, (a, b, c)))
        for a in parts
        for b in parts
        for c in parts
    }
    return StructureConstants(d, MappingProxyType(table))


@lru_cache(maxsize=None)
def _type_lookup(d: int) -> dict[tuple[int, ...], Partition]:
    return {perm: cls for cls, members in conjugacy_classes(d).items() for perm in members}


def class_sum_oracle(d: int, cap: int = DEFAULT_ORACLE_CAP) -> StructureConstants:
    """Structure constants by multiplying every pair of permutations from two
    classes and tallying the cycle types of the products."""
    if d > cap:
        raise DegreeCapError(d, cap, "class-sum oracle")
    parts = partitions_of(d)
    types = _type_lookup(d)
    table = {}
    for a in parts:
        for b in parts:
            tally: Counter = Counter()
            for x in class_members(a):
                for y in class_members(b):
                    tally[types[perm_compose(x, y)]] += 1
            for c in parts:
                table[a, b, c] = Fraction(tally[c], class_size(c))
    return StructureConstants(d, MappingProxyType(table))


def classical_cut_and_join(d: int, part: Partition) -> dict[tuple[Partition, Partition], int]:
    """The z = 1 operator built from permutations: entry (G', G) counts
    s in C_part with a*s of type G, for one fixed a of type G'."""
    part = _same_degree(d, part)
    types = _type_lookup(d)
    out: dict[tuple[Partition, Partition], int] = {}
    for src in partitions_of(d):
        a = representative(src)
        for s in class_members(part):
            key = (src, types[perm_compose(a, s)])
            out[key] = out.get(key, 0) + 1
    return out


def verify_composition_law(d: int) -> bool:
    """W(D1) W(D2) == sum_D3 z^(d - l1 - l2 + l3) C^{D3}_{D1 D2} W(D3) for all D1, D2."""
    return first_composition_failure(d) is None


def first_composition_failure(d: int) -> tuple[Partition, Partition] | None:
    parts = partitions_of(d)
    consts = structure_constants(d)
    for a in parts:
        for b in parts:
            lhs = compose(build_w(d, a), build_w(d, b))
            rhs = linear_combination(
                d,
                (
                    (ZLaurent.monomial(consts[a, b, c], d - len(a) - len(b) + len(c)), build_w(d, c))
                    for c in parts
                    if consts[a, b, c]
                ),
            )
            if not lhs.same_matrix(rhs):
                return a, b
    return None


def normalized_product_failure(d: int) -> tuple[Partition, Partition] | None:
    """First pair where the normalized operators fail to multiply by the
    structure constants or fail to commute."""
    parts = partitions_of(d)
    consts = structure_constants(d)
    hats = {a: build_w_hat(d, a) for a in parts}
    for a in parts:
        for b in parts:
            ab = compose(hats[a], hats[b])
            rhs = linear_combination(
                d, ((ZLaurent.const(consts[a, b, c]), hats[c]) for c in parts if consts[a, b, c])
            )
            if not ab.same_matrix(rhs) or not ab.same_matrix(compose(hats[b], hats[a])):
                return a, b
    return None


# Genus expanded Schur functions.


@lru_cache(maxsize=None)
def _schur_z(shape: Partition) -> PPoly:
    d = shape.degree
    scale = Fraction(dim_irrep(shape), factorial(d))
    return PPoly(
        {
            g: ZLaurent.monomial(scale * phi(shape, g), -d - len(g))
            for g in partitions_of(d)
        }
    )


def schur_z(shape: Partition) -> PPoly:
    """sum_G z^(-d - l(G)) (dim/d!) phi_shape(G) p_G."""
    return _schur_z(Partition(shape))


def eigen_failure(d: int) -> tuple[Partition, Partition] | None:
    for part in partitions_of(d):
        op = build_w_hat(d, part)
        for shape in partitions_of(d):
            s = schur_z(shape)
            if apply_w(op, s) != s.scale(phi(shape, part)):
                return shape, part
    return None


def eigen_check(d: int) -> bool:
    """Each normalized W(D) acts on schur_z(shape) by the scalar phi_shape(D)."""
    return eigen_failure(d) is None


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def schur_basis_is_basis(d: int) -> bool:
    """The genus expanded Schur functions span the degree-d slice.

    Each column p_G carries the single power z^(-d - l(G)), so the change of
    basis is invertible iff the rational matrix of coefficients is.
    """
    parts = partitions_of(d)
    rows = []
    for shape in parts:
        s = schur_z(shape)
        rows.append([s.coefficient(g).evaluate(1) for g in parts])
    return _rank(rows) == len(parts)


# Differential-operator rendering.


@dataclass(frozen=True, order=True)
class DiffTerm:
    """c z^zexp p_multiplier d^n/dp_{r1}...dp_{rn} with raw (un-normalized) derivatives."""

    zexp: int
    coeff: Fraction
    multiplier: Partition
    derivative: Partition


def diff_terms(op: CutJoinOp) -> list[DiffTerm]:
    """Matrix entries rewritten with raw derivatives: divide by G'!."""
    terms = []
    for (src, dst), v in op.matrix.items():
        for e, c in v.terms.items():
            terms.append(DiffTerm(e, c / aut_factor(src), dst, src))
    terms.sort(key=lambda t: (-t.zexp, [-x for x in t.derivative], [-x for x in t.multiplier]))
    return terms


def _p_factors(part: Partition) -> str:
    return " ".join(f"p_{r}" for r in sorted(part))


def _derivative(part: Partition) -> str:
    n = len(part)
    denom = "".join(f"∂p_{r}" for r in sorted(part))
    return f"∂/{denom}" if n == 1 else f"∂^{n}/{denom}"


def render_differential(op: CutJoinOp, z=None) -> str:
    """Render as e.g. ``1/2 z^2 p_2 ∂^2/∂p_1∂p_1 + p_1 p_1 ∂/∂p_2``.

    With ``z`` given, the genus marker is evaluated and like terms merged.
    """
    terms = diff_terms(op)
    if z is not None:
        merged: dict[tuple[Partition, Partition], Fraction] = {}
        for t in terms:
            key = (t.multiplier, t.derivative)
            merged[key] = merged.get(key, Fraction(0)) + t.coeff * Fraction(z) ** t.zexp
        terms = [DiffTerm(0, c, m, dv) for (m, dv), c in merged.items() if c]
    if not terms:
        return "0"
    pieces = []
    for t in terms:
        head = []
        if abs(t.coeff) != 1:
            head.append(str(abs(t.coeff)))
        if t.zexp:
            head.append("z" if t.zexp == 1 else f"z^{t.zexp}")
        body = " ".join(head + [x for x in (_p_factors(t.multiplier), _derivative(t.derivative)) if x])
        pieces.append(("- " if t.coeff < 0 else "+ ") + body)
    out = " ".join(pieces)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def op_to_json(op: CutJoinOp) -> dict:
    return {
        "degree": op.degree,
        "partition": list(op.partition) if op.partition is not None else None,
        "normalized": op.normalized,
        "entries": [
            {"source": list(src), "target": list(dst), "coeff": v.to_json()}
            for (src, dst), v in sorted(
                op.matrix.items(), key=lambda kv: (kv[0][0], kv[0][1]), reverse=True
            )
        ],
        "terms": [
            {
                "zexp": t.zexp,
                "value": f"{t.coeff.numerator}/{t.coeff.denominator}",
                "multiplier": list(t.multiplier),
                "derivative": list(t.derivative),
            }
            for t in diff_terms(op)
        ],
    }
