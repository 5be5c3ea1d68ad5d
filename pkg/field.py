"""Exact arithmetic in GF(p).

Field elements double as edge colors: 0 is white (no edge), 1..p-1 are the
visible colors.
"""
import math
import logging
from dataclasses import dataclass
from typing import List, Union

from exceptions import ModulusMismatch, NotPrime, ZeroInverse, InvalidArgs

# Configure logging
logger = logging.getLogger(__name__)


def is_prime(p: int) -> bool:
    """Deterministic trial division up to sqrt(p)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Modulus:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise NotPrime(self.p)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def reduce(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(v, self) for v in range(self.p)]

    @property
    def colors(self) -> range:
        return range(self.p)

    @property
    def visible_colors(self) -> range:
        """Colors 1..p-1 (everything except white)."""
        return range(1, self.p)

    def __repr__(self):
        return f"Modulus({self.p})"


def make_modulus(p: int) -> Modulus:
    return Modulus(p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            raise InvalidArgs(f"{self.value} not in field range 0..{self.modulus.p - 1}")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"cannot combine elements of GF({self.modulus.p}) and GF({other.modulus.p})"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement((self.value + other.value) % self.modulus.p, self.modulus)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement((self.value - other.value) % self.modulus.p, self.modulus)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement((self.value * other.value) % self.modulus.p, self.modulus)

    def __neg__(self) -> "FieldElement":
        return FieldElement((-self.value) % self.modulus.p, self.modulus)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroInverse(f"0 has no inverse in GF({self.modulus.p})")
        return FieldElement(pow(self.value, -1, self.modulus.p), self.modulus)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self * other.inverse()

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self):
        return f"F_{self.modulus.p}({self.value})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


ColorLike = Union[int, FieldElement]


def color_value(modulus: Modulus, color: ColorLike) -> int:
    """Normalize an int or FieldElement color to its integer code in GF(p)."""
    if isinstance(color, FieldElement):
        if color.modulus != modulus:
            raise ModulusMismatch(
                f"color from GF({color.modulus.p}) used with GF({modulus.p})"
            )
        return color.value
    if isinstance(color, bool) or not isinstance(color, int):
        raise InvalidArgs(f"color must be an int or FieldElement, got {color!r}")
    if not 0 <= color < modulus.p:
        raise InvalidArgs(f"color {color} not in 0..{modulus.p - 1}")
    return color
