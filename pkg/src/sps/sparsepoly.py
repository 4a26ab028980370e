"""Exact sparse univariate polynomials with arbitrary-precision exponents.

A polynomial is a tuple of (exponent, coefficient) pairs with strictly
increasing exponents and no zero coefficients; the zero polynomial is the
empty tuple.  Coefficients are exact rationals: Python ints, or
``fractions.Fraction`` values whose denominator is greater than one
(integral fractions are collapsed to int so the hot paths stay in native
integer arithmetic).  Exponents are plain Python ints, so a monomial like
X**(10**20) costs nothing until something forces an expansion.

All values are immutable and every operation is a pure function, so
polynomials can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Coefficient = Union[int, Fraction]

__all__ = [
    "Coefficient",
    "Monomial",
    "SparsePoly",
    "normalize_coeff",
    "ZERO",
    "ONE",
    "X",
]


def normalize_coeff(value: Coefficient) -> Coefficient:
    """Canonical form of an exact rational: int when integral, Fraction otherwise."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"coefficient must be int or Fraction, got {type(value).__name__}")


class Monomial(NamedTuple):
    coeff: Coefficient
    exponent: int


class SparsePoly:
    """Immutable sparse polynomial in one variable over the rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, Coefficient], Iterable[tuple[int, Coefficient]]] = ()):
        """Build from an {exponent: coefficient} mapping or (exponent, coefficient) pairs.

        Duplicate exponents are summed; zero coefficients are dropped.
        """
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Coefficient] = {}
        for exponent, coeff in items:
            if not isinstance(exponent, int) or isinstance(exponent, bool):
                raise TypeError(f"exponent must be int, got {type(exponent).__name__}")
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            c = acc.get(exponent, 0) + coeff
            if c:
                acc[exponent] = c
            else:
                acc.pop(exponent, None)
        self._terms: tuple[tuple[int, Coefficient], ...] = tuple(
            (e, normalize_coeff(c)) for e, c in sorted(acc.items())
        )

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "SparsePoly":
        return _ZERO

    @classmethod
    def one(cls) -> "SparsePoly":
        return _ONE

    @classmethod
    def constant(cls, value: Coefficient) -> "SparsePoly":
        return cls({0: value})

    @classmethod
    def x_power(cls, exponent: int, coeff: Coefficient = 1) -> "SparsePoly":
        return cls({exponent: coeff})

    @classmethod
    def _raw(cls, sorted_terms: tuple[tuple[int, Coefficient], ...]) -> "SparsePoly":
        # Internal: caller guarantees canonical form.
        p = object.__new__(cls)
        p._terms = sorted_terms
        return p

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def sparsity(self) -> int:
        """Number of stored monomials."""
        return len(self._terms)

    @property
    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return self._terms[-1][0] if self._terms else None

    @property
    def min_exponent(self) -> int | None:
        return self._terms[0][0] if self._terms else None

    @property
    def leading_coeff(self) -> Coefficient:
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._terms[-1][1]

    def support(self) -> frozenset[int]:
        """Set of exponents with nonzero coefficient."""
        return frozenset(e for e, _ in self._terms)

    def coefficient(self, exponent: int) -> Coefficient:
        for e, c in self._terms:
            if e == exponent:
                return c
            if e > exponent:
                break
        return 0

    def monomials(self) -> Iterator[Monomial]:
        """Monomials in increasing exponent order."""
        for e, c in self._terms:
            yield Monomial(c, e)

    def items(self) -> tuple[tuple[int, Coefficient], ...]:
        """Raw (exponent, coefficient) pairs, ascending."""
        return self._terms

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "SparsePoly | None":
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly({0: other})
        return None

    def __add__(self, other) -> "SparsePoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero:
            return q
        if q.is_zero:
            return self
        acc = dict(self._terms)
        for e, c in q._terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                del acc[e]
        return SparsePoly._raw(tuple((e, normalize_coeff(c)) for e, c in sorted(acc.items())))

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other) -> "SparsePoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "SparsePoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "SparsePoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero or q.is_zero:
            return _ZERO
        a, b = self._terms, q._terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict[int, Coefficient] = {}
        for ea, ca in a:
            for eb, cb in b:
                e = ea + eb
                s = acc.get(e, 0) + ca * cb
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        return SparsePoly._raw(tuple((e, normalize_coeff(c)) for e, c in sorted(acc.items())))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePoly":
        """Exact power by repeated squaring; exponent must be a nonnegative int."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = _ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self) -> "SparsePoly":
        """Term-wise derivative; the support shifts down by one."""
        return SparsePoly._raw(
            tuple((e - 1, normalize_coeff(c * e)) for e, c in self._terms if e > 0)
        )

    def evaluate(self, x: Coefficient) -> Coefficient:
        """Exact value at a rational point (cost grows with the exponents)."""
        total: Coefficient = 0
        for e, c in self._terms:
            total += c * x**e
        return normalize_coeff(total)

    def split_x_power(self) -> tuple[int, "SparsePoly"]:
        """Factor out the largest power of X: returns (v, q) with self = X**v * q.

        The zero polynomial returns (0, zero).
        """
        if not self._terms:
            return 0, self
        v = self._terms[0][0]
        if v == 0:
            return 0, self
        return v, SparsePoly._raw(tuple((e - v, c) for e, c in self._terms))

    def monic(self) -> "SparsePoly":
        if not self._terms:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self._terms[-1][1]
        if lc == 1:
            return self
        inv = Fraction(1, 1) / Fraction(lc)
        return SparsePoly._raw(tuple((e, normalize_coeff(c * inv)) for e, c in self._terms))

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"SparsePoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                body = str(c)
            else:
                x = "X" if e == 1 else f"X^{e}"
                if c == 1:
                    body = x
                elif c == -1:
                    body = f"-{x}"
                else:
                    body = f"{c}*{x}"
            parts.append(body)
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out


_ZERO = SparsePoly()
_ONE = SparsePoly({0: 1})

ZERO = _ZERO
ONE = _ONE
X = SparsePoly({1: 1})
