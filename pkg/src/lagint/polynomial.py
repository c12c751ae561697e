"""Exact polynomial arithmetic over the rationals.

:class:`RationalPoly` is a dense univariate (Laurent) polynomial; ``offset`` is
the exponent of the first stored coefficient, so ``RationalPoly((1, 2), -1)``
is ``z**-1 + 2``.  :class:`MultiPoly` is a sparse multivariate polynomial keyed
by exponent tuples and is used where the integral has to be carried
symbolically in ``s`` and ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


@dataclass(frozen=True)
class RationalPoly:
    coeffs: tuple[Fraction, ...] = ()
    offset: int = 0

    def __post_init__(self):
        cs = [_frac(c) for c in self.coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        cs = cs[lo:hi]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "offset", self.offset + lo if cs else 0)

    @classmethod
    def constant(cls, c) -> RationalPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c, exponent: int) -> RationalPoly:
        return cls((c,), exponent)

    @classmethod
    def from_dict(cls, terms: Mapping[int, object]) -> RationalPoly:
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(tuple(terms.get(e, 0) for e in range(lo, hi + 1)), lo)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int | None:
        """Lowest exponent with a nonzero coefficient."""
        return self.offset if self.coeffs else None

    @property
    def degree(self) -> int | None:
        """Highest exponent with a nonzero coefficient; ``None`` for zero."""
        return self.offset + len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, exponent: int) -> Fraction:
        i = exponent - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def terms(self) -> dict[int, Fraction]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def __add__(self, other) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            other = RationalPoly.constant(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.degree, other.degree)
        return RationalPoly(
            tuple(self.coefficient(e) + other.coefficient(e) for e in range(lo, hi + 1)),
            lo,
        )

    __radd__ = __add__

    def __neg__(self) -> RationalPoly:
        return RationalPoly(tuple(-c for c in self.coeffs), self.offset)

    def __sub__(self, other) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            other = RationalPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> RationalPoly:
        return (-self) + other

    def __mul__(self, other) -> RationalPoly:
        if not isinstance(other, RationalPoly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(tuple(out), self.offset + other.offset)

    def __rmul__(self, other) -> RationalPoly:
        return self.scale(other)

    def scale(self, c) -> RationalPoly:
        c = _frac(c)
        return RationalPoly(tuple(c * a for a in self.coeffs), self.offset)

    def shift(self, by: int) -> RationalPoly:
        """Multiply by ``x**by``."""
        return RationalPoly(self.coeffs, self.offset + by)

    def derivative(self) -> RationalPoly:
        return RationalPoly.from_dict({e - 1: e * c for e, c in self.terms().items() if e})

    def compose(self, inner: RationalPoly) -> RationalPoly:
        """Return ``self(inner(z))``; ``self`` must be an ordinary polynomial."""
        if self.is_zero():
            return RationalPoly()
        if self.offset < 0:
            raise ValueError("cannot compose a Laurent polynomial")
        acc = RationalPoly()
        for e in range(self.degree, -1, -1):
            acc = acc * inner + self.coefficient(e)
        return acc

    def __call__(self, x):
        """Horner evaluation; exact when ``x`` is rational."""
        if self.is_zero():
            return 0 * x
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.offset:
            acc = acc * x**self.offset
        return acc

    def __repr__(self):
        if self.is_zero():
            return "RationalPoly(0)"
        body = " + ".join(f"({c})*x^{e}" for e, c in self.terms().items())
        return f"RationalPoly({body})"


class MultiPoly:
    """Sparse polynomial in several variables with rational coefficients.

    Exponents may be negative, so Laurent variables are allowed.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None, nvars: int = 1):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError("exponent tuple has the wrong length")
            c = _frac(c)
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def constant(cls, c, nvars: int) -> MultiPoly:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def sum_of(cls, polys: Iterable[MultiPoly], nvars: int) -> MultiPoly:
        out = cls(nvars=nvars)
        for p in polys:
            out = out + p
        return out

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.constant(other, self.nvars)

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out, self.nvars)

    __radd__ = __add__

    def __mul__(self, other) -> MultiPoly:
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.nvars == other.nvars and self.terms == other.terms

    def coefficient(self, exponents: tuple[int, ...]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def select(self, var: int, exponent: int) -> MultiPoly:
        """Coefficient of ``x_var**exponent`` as a polynomial in the remaining variables."""
        out = {}
        for e, c in self.terms.items():
            if e[var] == exponent:
                out[e[:var] + e[var + 1:]] = c
        return MultiPoly(out, self.nvars - 1)

    def __repr__(self):
        return f"MultiPoly({self.terms!r})"
