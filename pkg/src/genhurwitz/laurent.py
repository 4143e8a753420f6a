"""Laurent polynomials in the genus marker z with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def format_fraction(q: Fraction) -> str:
    """Always ``num/den``, e.g. ``3/1``; used in JSON payloads."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


class ZLaurent:
    """Finite sum of c_e z^e.  Zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), Fraction(0)) + Fraction(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> ZLaurent:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, exp: int) -> ZLaurent:
        return cls({exp: c})

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ZLaurent.const(other)
        if not isinstance(other, ZLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> ZLaurent:
        if isinstance(other, ZLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return ZLaurent.const(other)
        return NotImplemented

    def __add__(self, other) -> ZLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return ZLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> ZLaurent:
        return ZLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> ZLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> ZLaurent:
        return (-self) + other

    def __mul__(self, other) -> ZLaurent:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return ZLaurent(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> ZLaurent:
        """Multiply by z^k."""
        return ZLaurent({e + k: c for e, c in self._terms.items()})

    def evaluate(self, z: Scalar) -> Fraction:
        z = Fraction(z)
        if not z and any(e < 0 for e in self._terms):
            raise ZeroDivisionError("negative power of z evaluated at z = 0")
        return sum((c * z**e for e, c in self._terms.items()), Fraction(0))

    def single_term(self) -> tuple[int, Fraction] | None:
        """(exponent, coefficient) if this is c z^e with c != 0, else None."""
        if len(self._terms) == 1:
            return next(iter(self._terms.items()))
        return None

    def to_json(self) -> list[dict]:
        return [{"zexp": e, "value": format_fraction(c)} for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> ZLaurent:
        return cls((item["zexp"], parse_fraction(item["value"])) for item in data)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(f"z^{e}")
            elif c == -1:
                pieces.append(f"-z^{e}")
            else:
                pieces.append(f"{c}*z^{e}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ZLaurent({dict(self._terms)!r})"


ZERO = ZLaurent()
ONE = ZLaurent.const(1)


def z_power(k: int) -> ZLaurent:
    return ZLaurent.monomial(1, k)
