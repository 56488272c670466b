# sync_search/bounds/polynomial.py

"""
Dense integer polynomials and cyclotomic polynomials.

Coefficients are stored lowest degree first with trailing zeros trimmed, so
(1, -2, 0, 1) is 1 - 2x + x^3. All arithmetic is exact.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple

from sync_search.errors import InvalidArgumentError


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def x_power_minus_one(cls, m: int) -> "IntPolynomial":
        return cls((-1,) + (0,) * (m - 1) + (1,))

    def degree(self) -> int:
        """Zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def divmod_monic(self, divisor: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a monic divisor; stays in the integers."""
        if not divisor.is_monic():
            raise InvalidArgumentError("divisor must be monic")
        remainder = list(self.coeffs)
        d = divisor.degree()
        if len(remainder) - 1 < d:
            return IntPolynomial(()), self
        quotient = [0] * (len(remainder) - d)
        for shift in range(len(remainder) - 1 - d, -1, -1):
            lead = remainder[shift + d]
            if lead == 0:
                continue
            quotient[shift] = lead
            for j, c in enumerate(divisor.coeffs):
                remainder[shift + j] -= lead * c
        return IntPolynomial(quotient), IntPolynomial(remainder)

    def divisible_by(self, divisor: "IntPolynomial") -> bool:
        return self.divmod_monic(divisor)[1].is_zero()


def divisors(m: int) -> Tuple[int, ...]:
    return tuple(d for d in range(1, m + 1) if m % d == 0)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """Φ_d = (x^d - 1) / Π Φ_e over proper divisors e of d."""
    if d < 1:
        raise InvalidArgumentError(f"cyclotomic index must be >= 1, got {d}")
    poly = IntPolynomial.x_power_minus_one(d)
    for e in divisors(d)[:-1]:
        poly, remainder = poly.divmod_monic(cyclotomic(e))
        assert remainder.is_zero()
    return poly
