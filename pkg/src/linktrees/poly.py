"""Exact integer Laurent polynomials in one variable and exact determinants.

Coefficients are arbitrary-precision Python ints.  The zero polynomial is
the empty coefficient map; no zero coefficient is ever stored.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """An integer Laurent polynomial ``sum c_e * t^e`` with e ranging over ints."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                if c:
                    clean[int(exp)] = int(c)
        self._coeffs = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def term(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def var(cls) -> "LaurentPoly":
        "The polynomial t."
        return cls({1: 1})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        coeffs: dict[int, int] = {}
        for exp, c in pairs:
            coeffs[exp] = coeffs.get(exp, 0) + c
        return cls(coeffs)

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int:
        "Largest exponent with nonzero coefficient.  Raises on the zero polynomial."
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def order(self) -> int:
        "Smallest exponent with nonzero coefficient.  Raises on the zero polynomial."
        if not self._coeffs:
            raise ValueError("zero polynomial has no order")
        return min(self._coeffs)

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def eval_at_zero(self) -> int:
        "Value at t = 0; requires no negative exponents."
        if self._coeffs and min(self._coeffs) < 0:
            raise ValueError("polynomial has negative exponents, undefined at 0")
        return self._coeffs.get(0, 0)

    def to_pairs(self) -> list[list[int]]:
        "JSON form: [exponent, coefficient] pairs sorted by exponent."
        return [[e, self._coeffs[e]] for e in sorted(self._coeffs)]

    # -- arithmetic --------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        coeffs = dict(self._coeffs)
        for e, c in other._coeffs.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentPoly(coeffs)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        coeffs = dict(self._coeffs)
        for e, c in other._coeffs.items():
            coeffs[e] = coeffs.get(e, 0) - c
        return LaurentPoly(coeffs)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        coeffs: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                coeffs[e] = coeffs.get(e, 0) + c1 * c2
        return LaurentPoly(coeffs)

    def scaled(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: k * c for e, c in self._coeffs.items()})

    def shifted(self, k: int) -> "LaurentPoly":
        "Multiply by t^k."
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if ``other`` does not divide evenly.

        Both operands are shifted to ordinary polynomials first, so this is
        plain long division in Z[t] plus a power-of-t adjustment.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        shift = self.order() - other.order()
        num = dict(self.shifted(-self.order())._coeffs)
        den = other.shifted(-other.order())._coeffs
        ddeg = max(den)
        dlead = den[ddeg]
        out: dict[int, int] = {}
        while num:
            ndeg = max(num)
            if ndeg < ddeg:
                raise ValueError("inexact polynomial division")
            q, r = divmod(num[ndeg], dlead)
            if r:
                raise ValueError("inexact polynomial division")
            out[ndeg - ddeg] = q
            for e, c in den.items():
                k = e + ndeg - ddeg
                v = num.get(k, 0) - q * c
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        return LaurentPoly(out).shifted(shift)

    # -- rendering ---------------------------------------------------

    def to_text(self) -> str:
        "Text form like ``1 - t + 4*t^2``, ascending exponents, zero terms omitted."
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs):
            c = self._coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = tpow if mag == 1 else f"{mag}*{tpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
T = LaurentPoly.var()


def poly_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials.

    Fraction-free elimination: every division performed is exact in the
    polynomial ring, so no rational functions ever appear.  The empty
    matrix has determinant 1.
    """
    k = len(m)
    for row in m:
        if len(row) != k:
            raise ValueError(f"matrix is not square: {k} rows, row of length {len(row)}")
    if k == 0:
        return ONE
    a = [list(row) for row in m]
    sign = 1
    prev = ONE
    for i in range(k - 1):
        if a[i][i].is_zero():
            for r in range(i + 1, k):
                if not a[r][i].is_zero():
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[i][i]
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                num = a[r][c] * pivot - a[r][i] * a[i][c]
                a[r][c] = num.divide_exact(prev)
            a[r][i] = ZERO
        prev = pivot
    det = a[k - 1][k - 1]
    return det if sign == 1 else -det


def normalize_reduced(p: LaurentPoly) -> LaurentPoly:
    """Multiply by a unit +-t^m so the result is an ordinary polynomial with a
    strictly positive constant term.  Zero is returned unchanged."""
    if p.is_zero():
        return p
    q = p.shifted(-p.order())
    if q.coeff(0) < 0:
        q = -q
    return q
