"""Polynomials in the power sums p_1, p_2, ... (and optionally q_1, q_2, ...)
with coefficients in :class:`~genhurwitz.laurent.ZLaurent`.

A monomial p_G is keyed by the partition G; a bi-monomial q_D p_G is keyed
by ``Monomial(p=G, q=D)``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import DegreeMismatchError
from .laurent import ZLaurent
from .partitions import Partition, aut_factor


class Monomial(NamedTuple):
    p: Partition
    q: Partition | None = None

    @classmethod
    def make(cls, key) -> Monomial:
        if isinstance(key, Monomial):
            return key
        if isinstance(key, Partition):
            return cls(key, None)
        raise TypeError(f"not a monomial key: {key!r}")

    def sort_key(self):
        return (tuple(self.q) if self.q is not None else (), tuple(self.p))

    def __mul__(self, other: Monomial) -> Monomial:  # type: ignore[override]
        p = Partition(tuple(self.p) + tuple(other.p))
        if self.q is None and other.q is None:
            q = None
        else:
            q = Partition(tuple(self.q or ()) + tuple(other.q or ()))
        return Monomial(p, q or None)

    def __str__(self) -> str:
        parts = []
        if self.q is not None:
            parts.append(f"q_{self.q}")
        if self.p:
            parts.append(f"p_{self.p}")
        return "*".join(parts) or "1"


Coeff = Union[ZLaurent, int, Fraction]


class PPoly:
    """Immutable finite linear combination of monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, ZLaurent] = {}
        for key, c in items:
            key = Monomial.make(key)
            if not isinstance(c, ZLaurent):
                c = ZLaurent.const(c)
            acc[key] = acc[key] + c if key in acc else c
        self._terms = {k: v for k, v in acc.items() if v}

    @property
    def terms(self) -> Mapping[Monomial, ZLaurent]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Monomial, ZLaurent]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key(), reverse=True)

    def coefficient(self, key) -> ZLaurent:
        return self._terms.get(Monomial.make(key), ZLaurent())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: PPoly) -> PPoly:
        if not isinstance(other, PPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out[k] + v if k in out else v
        return PPoly(out)

    def __neg__(self) -> PPoly:
        return PPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: PPoly) -> PPoly:
        return self + (-other)

    def scale(self, c: Coeff) -> PPoly:
        if not isinstance(c, ZLaurent):
            c = ZLaurent.const(c)
        return PPoly({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other) -> PPoly:
        if isinstance(other, PPoly):
            out: dict[Monomial, ZLaurent] = {}
            for k1, v1 in self._terms.items():
                for k2, v2 in other._terms.items():
                    k = k1 * k2
                    out[k] = out[k] + v1 * v2 if k in out else v1 * v2
            return PPoly(out)
        if isinstance(other, (ZLaurent, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def to_q(self) -> PPoly:
        """Move a pure p-polynomial into the q alphabet."""
        out = {}
        for k, v in self._terms.items():
            if k.q is not None:
                raise ValueError("polynomial already involves the q alphabet")
            out[Monomial(Partition(()), k.p)] = v
        return PPoly(out)

    def p_degrees(self) -> set[int]:
        return {k.p.degree for k in self._terms}

    def evaluate_z(self, z) -> PPoly:
        return PPoly({k: v.evaluate(z) for k, v in self._terms.items()})

    def to_json(self) -> list[dict]:
        return [
            {
                "monomial": {
                    "p": list(k.p),
                    "q": list(k.q) if k.q is not None else None,
                },
                "coeff": v.to_json(),
            }
            for k, v in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> PPoly:
        terms = []
        for item in data:
            mono = item["monomial"]
            q = mono.get("q")
            key = Monomial(Partition(mono["p"]), Partition(q) if q is not None else None)
            terms.append((key, ZLaurent.from_json(item["coeff"])))
        return cls(terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = [format_term(v, [str(k)] if str(k) != "1" else []) for k, v in self.sorted_items()]
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"PPoly({str(self)!r})"


def format_term(coeff: ZLaurent, factors: list[str], prefix: list[str] = ()) -> str:
    """Render ``coeff * prefix * factors`` as ``c*pre*z^e*f1*f2``."""
    single = coeff.single_term()
    if single is None:
        head = [f"({coeff})", *prefix]
        sign = ""
    else:
        e, c = single
        sign = "-" if c < 0 else ""
        c = abs(c)
        head = []
        if c != 1 or (e == 0 and not factors and not prefix):
            head.append(str(c))
        head.extend(prefix)
        if e:
            head.append("z" if e == 1 else f"z^{e}")
    return sign + ("*".join(head + factors) or "1")


def p(*parts: int) -> PPoly:
    """The monomial p_(parts) with coefficient 1."""
    return PPoly({Partition(parts): 1})


def ppoly_add(a: PPoly, b: PPoly) -> PPoly:
    return a + b


def ppoly_scale(c: Coeff, a: PPoly) -> PPoly:
    return a.scale(c)


def raw_derivative(by: Partition, mono: Partition) -> tuple[int, Partition | None]:
    """Apply d/dp_{b1} ... d/dp_{bn} to p_mono as an honest monomial derivative.

    Returns (integer factor, remaining monomial) or (0, None).
    """
    exps = Counter(mono)
    factor = 1
    for b in by:
        if exps[b] == 0:
            return 0, None
        factor *= exps[b]
        exps[b] -= 1
    rest = Partition(r for r, m in exps.items() for _ in range(m))
    return factor, rest


def partial_p(by: Partition, mono: Partition) -> Fraction:
    """Normalized derivative (1/by!) d^n/dp_by applied to p_mono, same degree.

    On the degree-d slice this is the Kronecker delta.
    """
    if Partition(by).degree != Partition(mono).degree:
        raise DegreeMismatchError(f"{by} and {mono} have different degrees")
    return Fraction(int(Partition(by) == Partition(mono)))


def normalized_derivative(by: Partition, mono: Partition) -> Fraction:
    """(1/by!) d^n/dp_by p_mono evaluated through :func:`raw_derivative`."""
    factor, rest = raw_derivative(Partition(by), Partition(mono))
    if not factor or rest:
        return Fraction(0)
    return Fraction(factor, aut_factor(Partition(by)))
