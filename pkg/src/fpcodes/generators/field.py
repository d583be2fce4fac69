from __future__ import annotations

import dataclasses
from collections.abc import Sequence
from math import isqrt

from ..errors import PreconditionError


__all__ = ["PrimeField", "is_prime"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


@dataclasses.dataclass(slots=True, frozen=True)
class PrimeField:
    """The integers modulo a prime."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int):
            raise TypeError("the modulus must be an integer")
        if not is_prime(self.modulus):
            raise PreconditionError(
                f"the modulus of a prime field must be prime, "
                f"got {self.modulus}"
            )

    def __str__(self):
        return f"GF({self.modulus})"

    def __len__(self):
        return self.modulus

    def __iter__(self):
        return iter(range(self.modulus))

    def __contains__(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.modulus

    def embed(self, a: int) -> int:
        return a % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def inv(self, a: int) -> int:
        """Multiplicative inverse, by Fermat's little theorem."""
        if a % self.modulus == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, self.modulus - 2, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def evaluate(self, coefficients: Sequence[int], x: int) -> int:
        """The polynomial with ``coefficients[i]`` the coefficient of x^i,
        evaluated at x by Horner's rule."""
        result = 0
        for c in reversed(coefficients):
            result = (result * x + c) % self.modulus
        return result
