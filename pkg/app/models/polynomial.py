"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, lcm

type Scalar = int | Fraction


@dataclass(slots=True, frozen=True)
class RatPolynomial:
    """Coefficients in ascending powers of ``t``; trailing zeros are trimmed, so zero is ``()``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = [Fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def of(cls, coeffs: Iterable[Scalar]) -> RatPolynomial:
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls) -> RatPolynomial:
        return cls(())

    @classmethod
    def constant(cls, value: Scalar) -> RatPolynomial:
        return cls((Fraction(value),))

    @classmethod
    def linear(cls, root_shift: Scalar) -> RatPolynomial:
        """``t + root_shift``."""
        return cls((Fraction(root_shift), Fraction(1)))

    @classmethod
    def binomial(cls, k: int, shift: Scalar = 0) -> RatPolynomial:
        """``C(t + shift, k)`` expanded in powers of ``t``."""
        result = cls.constant(1)
        for m in range(k):
            result *= cls.linear(Fraction(shift) - m)
        return result.scale(Fraction(1, factorial(k)))

    @property
    def degree(self) -> int:
        """Index of the top nonzero coefficient, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def coefficient(self, power: int) -> Fraction:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __neg__(self) -> RatPolynomial:
        return RatPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: RatPolynomial | Scalar) -> RatPolynomial:
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RatPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __sub__(self, other: RatPolynomial | Scalar) -> RatPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> RatPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: RatPolynomial | Scalar) -> RatPolynomial:
        if not isinstance(other, RatPolynomial):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return RatPolynomial.zero()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return RatPolynomial(tuple(product))

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> RatPolynomial:
        return RatPolynomial(tuple(c * factor for c in self.coeffs))

    def __divmod__(self, divisor: RatPolynomial) -> tuple[RatPolynomial, RatPolynomial]:
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - divisor.degree, 0)
        lead = divisor.leading
        for shift in range(len(remainder) - len(divisor.coeffs), -1, -1):
            factor = remainder[shift + divisor.degree] / lead
            if factor:
                quotient[shift] = factor
                for i, c in enumerate(divisor.coeffs):
                    remainder[shift + i] -= factor * c
        return RatPolynomial(tuple(quotient)), RatPolynomial(tuple(remainder[: divisor.degree]))

    def __floordiv__(self, divisor: RatPolynomial) -> RatPolynomial:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: RatPolynomial) -> RatPolynomial:
        return divmod(self, divisor)[1]

    def derivative(self) -> RatPolynomial:
        return RatPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> RatPolynomial:
        return self.scale(1 / self.leading) if self.coeffs else self

    def gcd(self, other: RatPolynomial) -> RatPolynomial:
        """Monic greatest common divisor over the rationals."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if self.is_zero:
            return Fraction(0)
        denominator = lcm(*(c.denominator for c in self.coeffs))
        numerator = gcd(*(int(c * denominator) for c in self.coeffs))
        return Fraction(numerator, denominator)

    def primitive_part(self) -> RatPolynomial:
        """Divide out the content; the sign of every coefficient is kept."""
        if self.is_zero:
            return self
        return self.scale(1 / self.content())

    def shift(self, amount: Scalar) -> RatPolynomial:
        """The polynomial ``t -> self(t + amount)``."""
        result = RatPolynomial.zero()
        step = RatPolynomial.linear(amount)
        for c in reversed(self.coeffs):
            result = result * step + c
        return result

    def integer_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError("polynomial has non-integer coefficients")
        return tuple(int(c) for c in self.coeffs)

    def tokens(self) -> list[str]:
        """``num/den`` tokens in lowest terms, ascending powers."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]


def _coerce(value: RatPolynomial | Scalar) -> RatPolynomial:
    return value if isinstance(value, RatPolynomial) else RatPolynomial.constant(value)
