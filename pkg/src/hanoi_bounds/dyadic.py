"""Exact dyadic rationals: values of the form mantissa * 2**exponent.

Several lower bounds are genuinely fractional for small disk counts
(for example 2**(m-1) with m = 0), so bound values are carried exactly
rather than rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Any

__all__ = ["DyadicRational"]


@total_ordering
@dataclass(frozen=True)
class DyadicRational:
    """mantissa * 2**exponent, stored canonically (mantissa odd or zero)."""

    mantissa: int
    exponent: int

    def __post_init__(self) -> None:
        m, e = self.mantissa, self.exponent
        if m == 0:
            e = 0
        else:
            while m % 2 == 0:
                m //= 2
                e += 1
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def from_int(cls, value: int) -> DyadicRational:
        return cls(value, 0)

    @property
    def is_integer(self) -> bool:
        return self.mantissa == 0 or self.exponent >= 0

    def ceil(self) -> int:
        """Smallest integer >= this value (exact, no floating point)."""
        if self.exponent >= 0:
            return self.mantissa << self.exponent
        shift = -self.exponent
        return -((-self.mantissa) >> shift)

    def _pair_against(self, other: DyadicRational) -> tuple[int, int]:
        e = min(self.exponent, other.exponent)
        return (
            self.mantissa << (self.exponent - e),
            other.mantissa << (other.exponent - e),
        )

    @staticmethod
    def _coerce(other: Any) -> "DyadicRational | None":
        if isinstance(other, DyadicRational):
            return other
        if isinstance(other, int):
            return DyadicRational.from_int(other)
        return None

    def __eq__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._pair_against(rhs)
        return a == b

    def __lt__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._pair_against(rhs)
        return a < b

    def __hash__(self) -> int:
        return hash((self.mantissa, self.exponent))

    def __str__(self) -> str:
        return f"{self.mantissa}*2^{self.exponent}"

    def to_json_dict(self) -> dict:
        return {
            "mantissa": str(self.mantissa),
            "exponent": self.exponent,
            "ceil": str(self.ceil()),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> DyadicRational:
        return cls(int(data["mantissa"]), int(data["exponent"]))
