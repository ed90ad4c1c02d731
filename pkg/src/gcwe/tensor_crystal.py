"""Kashiwara tensor products of sl(2) crystals.

A *path* is a tuple of :class:`CrystalState` factors, read left to right.
Products of more than two factors are left-associated, so a path of length n
is treated as (first n-1 factors) (x) (last factor) and the two-factor rule
is applied recursively.

Two-factor rule, for u in B1 and v in B2::

    J-(u (x) v) = J-u (x) v   if some n >= 1 has J-^n u != 0 and J+^n v = 0
                = u (x) J-v   otherwise
    J+(u (x) v) = u (x) J+v   if some n >= 1 has J+^n v != 0 and J-^n u = 0
                = J+u (x) v   otherwise
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Callable, NamedTuple, Sequence

from .crystal_core import CrystalState, HalfInt, HalfLike, half, irrep_states, lower, raise_

__all__ = [
    "Path",
    "Order",
    "ComponentId",
    "sign_path",
    "path_weight",
    "tensor_raise",
    "tensor_lower",
    "component_of",
    "couple",
    "all_paths",
    "components",
    "format_path",
]

Path = tuple  # tuple[CrystalState, ...]

SPIN_HALF = half("1/2")


class Order(str, Enum):
    """Which factor of the coupled pair comes first in the tensor product."""

    STATE_FIRST = "state_first"
    OPERATOR_FIRST = "operator_first"

    @classmethod
    def parse(cls, value: "Order | str") -> "Order":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown operator order {value!r}") from None


class ComponentId(NamedTuple):
    """A connected component, identified by its highest-weight path."""

    highest_weight: Path
    J: HalfInt


def sign_path(weights: Sequence[HalfLike], spins: Sequence[HalfLike] | None = None) -> Path:
    """Build a path from per-factor weights; all factors are spin 1/2 by default."""
    if len(weights) == 0:
        raise ValueError("a path needs at least one factor")
    if spins is None:
        spins = [SPIN_HALF] * len(weights)
    if len(spins) != len(weights):
        raise ValueError("weights and spins differ in length")
    return tuple(CrystalState(half(j), half(m)) for j, m in zip(spins, weights))


def path_weight(path: Path) -> HalfInt:
    return sum((s.m for s in path), HalfInt(0))


def _exists_n(a, step_a: Callable, b, step_b: Callable) -> bool:
    """Is there n >= 1 with step_a^n(a) != None and step_b^n(b) is None?"""
    while True:
        a = step_a(a)
        if a is None:
            return False
        b = step_b(b) if b is not None else None
        if b is None:
            return True


def _raise_elem(x):
    return raise_(x) if isinstance(x, CrystalState) else tensor_raise(x)


def _lower_elem(x):
    return lower(x) if isinstance(x, CrystalState) else tensor_lower(x)


def _split(path: Path):
    head = path[0] if len(path) == 2 else path[:-1]
    return head, path[-1]


def _join(head, last) -> Path:
    if isinstance(head, CrystalState):
        return (head, last)
    return head + (last,)


@lru_cache(maxsize=None)
def tensor_raise(path: Path) -> Path | None:
    """Crystal raising on a product path; None iff the path is highest weight."""
    if len(path) == 1:
        s = raise_(path[0])
        return None if s is None else (s,)
    u, v = _split(path)
    if _exists_n(v, _raise_elem, u, _lower_elem):
        v2 = raise_(v)
        return None if v2 is None else _join(u, v2)
    u2 = _raise_elem(u)
    return None if u2 is None else _join(u2, v)


@lru_cache(maxsize=None)
def tensor_lower(path: Path) -> Path | None:
    """Crystal lowering on a product path; None iff the path is lowest weight."""
    if len(path) == 1:
        s = lower(path[0])
        return None if s is None else (s,)
    u, v = _split(path)
    if _exists_n(u, _lower_elem, v, _raise_elem):
        u2 = _lower_elem(u)
        return None if u2 is None else _join(u2, v)
    v2 = lower(v)
    return None if v2 is None else _join(u, v2)


@lru_cache(maxsize=None)
def _highest(path: Path) -> Path:
    while True:
        up = tensor_raise(path)
        if up is None:
            return path
        path = up


def component_of(path: Path) -> tuple[ComponentId, HalfInt]:
    """Locate a path in the product crystal.

    Returns the component (highest-weight path and its total spin J) and the
    path's own weight m.
    """
    hw = _highest(tuple(path))
    return ComponentId(hw, path_weight(hw)), path_weight(path)


def couple(
    j1: HalfLike,
    m1: HalfLike,
    j2: HalfLike,
    m2: HalfLike,
    order: Order | str = Order.STATE_FIRST,
) -> tuple[HalfInt, HalfInt]:
    """Total spin J and weight m of |j1 m1> (x) |j2 m2> in the crystal limit.

    With ``order="operator_first"`` the two factors are swapped before
    coupling.  m is always m1 + m2.
    """
    a = CrystalState(half(j1), half(m1))
    b = CrystalState(half(j2), half(m2))
    pair = (a, b) if Order.parse(order) is Order.STATE_FIRST else (b, a)
    comp, m = component_of(pair)
    return comp.J, m


def all_paths(spins: Sequence[HalfLike]) -> list[Path]:
    """Every path of B(spins[0]) (x) ... (x) B(spins[-1])."""
    return [tuple(p) for p in product(*(irrep_states(j) for j in spins))]


def components(spins: Sequence[HalfLike]) -> dict[ComponentId, list[Path]]:
    """Group all paths of a product crystal by component, members sorted by weight."""
    groups: dict[ComponentId, list[Path]] = {}
    for p in all_paths(spins):
        groups.setdefault(component_of(p)[0], []).append(p)
    for members in groups.values():
        members.sort(key=path_weight)
    return groups


def format_path(path: Path) -> str:
    """Compact rendering; spin-1/2 paths become sign strings like ``"+-+"``."""
    if all(s.j == SPIN_HALF for s in path):
        return "".join("+" if s.m > 0 else "-" for s in path)
    return "(x)".join(str(s) for s in path)
