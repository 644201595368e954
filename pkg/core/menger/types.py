import math
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class TriangleSides:
    a: float  # d(u, v)
    b: float  # d(v, w)
    c: float  # d(w, u)

    def sorted_desc(self) -> tuple[float, float, float]:
        x, y, z = sorted((self.a, self.b, self.c), reverse=True)
        return x, y, z

    def scaled(self, factor: float) -> "TriangleSides":
        return TriangleSides(self.a * factor, self.b * factor, self.c * factor)

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c


@dataclass(frozen=True, order=True)
class ExtendedRadius:
    """Nonnegative real or INFINITE; math.inf is the stored encoding of INFINITE."""

    value: float

    def __post_init__(self):
        if math.isnan(self.value) or self.value < 0:
            raise ValueError(f"radius must be nonnegative, got {self.value}")

    @staticmethod
    def finite(value: float) -> "ExtendedRadius":
        return ExtendedRadius(float(value))

    @staticmethod
    def of(value: Union[float, str]) -> "ExtendedRadius":
        """Parse a float or the "inf" sentinel."""
        if isinstance(value, str):
            if value != "inf":
                raise ValueError(f"only 'inf' is accepted as a non-numeric radius, got {value!r}")
            return INFINITE
        return ExtendedRadius(float(value))

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)

    def encode(self) -> Union[float, str]:
        return "inf" if self.is_infinite else self.value

    def __str__(self) -> str:
        return "inf" if self.is_infinite else repr(self.value)


INFINITE = ExtendedRadius(math.inf)
