"""Exact half-integer labels and the crystal basis of a single sl(2) irrep.

In the crystal limit the raising and lowering operators act on |j, m> as
unit shifts of m, and annihilate the extremal weights.  Annihilation is a
regular result (``None``), not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

__all__ = [
    "HalfInt",
    "half",
    "CrystalState",
    "raise_",
    "lower",
    "crystal_casimir",
    "irrep_states",
]


@total_ordering
class HalfInt:
    """An exact integer or half-integer, stored as twice its value."""

    __slots__ = ("_twice",)

    def __init__(self, twice: int):
        if not isinstance(twice, int) or isinstance(twice, bool):
            raise TypeError(f"twice-value must be an int, got {twice!r}")
        object.__setattr__(self, "_twice", twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @property
    def twice(self) -> int:
        return self._twice

    @property
    def is_integer(self) -> bool:
        return self._twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self._twice, 2)

    def __float__(self) -> float:
        return self._twice / 2

    def __index__(self):
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self._twice // 2

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(self._twice + other._twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(self._twice - other._twice)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(other._twice - self._twice)

    def __neg__(self):
        return HalfInt(-self._twice)

    def __abs__(self):
        return HalfInt(abs(self._twice))

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._twice == other._twice

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._twice < other._twice

    def __hash__(self):
        return hash(("HalfInt", self._twice))

    def __str__(self):
        if self.is_integer:
            return str(self._twice // 2)
        return f"{self._twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"


def _coerce(value):
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HalfInt(2 * value)
    if isinstance(value, Fraction) and (2 * value).denominator == 1:
        return HalfInt(int(2 * value))
    return NotImplemented


HalfLike = Union[HalfInt, int, Fraction, str, float]


def half(value: HalfLike) -> HalfInt:
    """Build a HalfInt from an int, Fraction, float, or a string like ``"-3/2"``.

    Raises ValueError if the value is not an exact multiple of 1/2.
    """
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a half-integer")
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse half-integer from {value!r}") from exc
    elif isinstance(value, float):
        if not (2 * value).is_integer():
            raise ValueError(f"{value!r} is not a multiple of 1/2")
        return HalfInt(int(2 * value))
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise ValueError(f"{value!r} is not a multiple of 1/2")
    return coerced


@dataclass(frozen=True)
class CrystalState:
    """Basis vector |j, m> of the spin-j crystal."""

    j: HalfInt
    m: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "j", half(self.j))
        object.__setattr__(self, "m", half(self.m))
        if self.j < 0:
            raise ValueError(f"spin must be non-negative, got j={self.j}")
        if abs(self.m) > self.j or not (self.j - self.m).is_integer:
            raise ValueError(f"invalid weight m={self.m} for j={self.j}")

    @property
    def epsilon(self) -> int:
        """Number of raising steps before annihilation."""
        return (self.j - self.m).twice // 2

    @property
    def phi(self) -> int:
        """Number of lowering steps before annihilation."""
        return (self.j + self.m).twice // 2

    def __str__(self):
        return f"|{self.j},{self.m}>"


def raise_(state: CrystalState) -> CrystalState | None:
    """Crystal raising: |j,m> -> |j,m+1>, or None on the highest weight."""
    if state.m == state.j:
        return None
    return CrystalState(state.j, state.m + 1)


def lower(state: CrystalState) -> CrystalState | None:
    """Crystal lowering: |j,m> -> |j,m-1>, or None on the lowest weight."""
    if state.m == -state.j:
        return None
    return CrystalState(state.j, state.m - 1)


def crystal_casimir(state: CrystalState) -> Fraction:
    # eigenvalue j(j+1), independent of m
    j = state.j.to_fraction()
    return j * (j + 1)


def irrep_states(j: HalfLike) -> list[CrystalState]:
    """All states of the spin-j crystal, from m = -j up to m = j."""
    j = half(j)
    return [CrystalState(j, HalfInt(t)) for t in range(-j.twice, j.twice + 1, 2)]
