"""Integer Laurent polynomials in one variable ``z``.

Values are immutable and hashable. Coefficients and exponents are plain
Python ints, so nothing overflows no matter how large the skein expansion
gets.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "add", "mul", "max_degree", "eval_int", "parse"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            acc[int(exp)] = acc.get(int(exp), 0) + int(coeff)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``z**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def max_degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __call__(self, x: int) -> Fraction:
        return eval_int(self, x)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for exp in sorted(self._terms, reverse=True):
            c = self._terms[exp]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                coeff = "" if mag == 1 else str(mag)
                body = coeff + ("z" if exp == 1 else f"z^{exp}")
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += sign + body
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Z = LaurentPoly.monomial(1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def max_degree(p: LaurentPoly) -> int | None:
    """Top exponent of ``p``; ``None`` for the zero polynomial."""
    return p.max_degree()


def eval_int(p: LaurentPoly, x: int) -> Fraction:
    """Exact value of ``p`` at the nonzero integer ``x``."""
    if x == 0:
        raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
    total = Fraction(0)
    for exp, c in p._terms.items():
        total += c * (Fraction(x) ** exp)
    return total


_TERM = re.compile(r"([+-]?)(\d*)(z(?:\^(-?\d+))?)?")


def parse(text: str) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)``; also tolerates spaces and ``*``.

    >>> str(parse("2z^2+2z-3+2z^-1"))
    '2z^2+2z-3+2z^-1'
    """
    s = text.replace(" ", "").replace("*", "")
    if s == "0":
        return LaurentPoly()
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, digits, zpart, exp = m.groups()
        if not digits and not zpart:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        if pos > 0 and not sign:
            raise ValueError(f"missing sign before {s[pos:]!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        e = 0 if not zpart else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + coeff
        pos = m.end()
    return LaurentPoly(terms)
