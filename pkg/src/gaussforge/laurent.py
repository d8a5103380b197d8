"""Sparse integer Laurent polynomials in one variable ``A``."""

from __future__ import annotations

from typing import Mapping


class LaurentPolynomial:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coefficients or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPolynomial:
        return cls({exponent: coefficient})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def degree_range(self):
        if not self._c:
            return None
        return min(self._c), max(self._c)

    def is_zero(self):
        return not self._c

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            # Only monomials are invertible.
            if len(self._c) != 1:
                raise ValueError("negative power of a non-monomial")
            (e, c), = self._c.items()
            if abs(c) != 1:
                raise ValueError("negative power needs a unit coefficient")
            return LaurentPolynomial({e * k: c ** (-k)})
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPolynomial:
        return cls({int(e): c for e, c in data.items()})

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("A" if e == 1 else f"A^{e}")
            parts.append(("-" if c < 0 else "+") + body)
        text = " ".join(p[0] + " " + p[1:] for p in parts)
        return text[2:] if text.startswith("+") else "-" + text[2:]

    def __repr__(self):
        return f"LaurentPolynomial({self.to_json()})"


def _coerce(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    raise TypeError(f"cannot combine LaurentPolynomial with {type(x).__name__}")


ONE = LaurentPolynomial({0: 1})
A = LaurentPolynomial({1: 1})
# Loop value -A^2 - A^-2.
LOOP = LaurentPolynomial({2: -1, -2: -1})
