"""Floating-point q-numbers and their q -> 0 asymptotics.

Only used to corroborate numerically that the rescaled generators have a
well-defined crystal limit; nothing in the exact crystal modules depends on
this one.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .crystal_core import HalfInt, HalfLike, half

__all__ = ["QValue", "q_number", "f_coefficient", "limit_checks", "LimitReport"]


@dataclass(frozen=True)
class QValue:
    q: float

    def __post_init__(self):
        q = float(self.q)
        if not (0.0 < q < 1.0):
            raise ValueError(f"q must lie strictly inside (0, 1), got {self.q!r}")
        object.__setattr__(self, "q", q)


def _q(q) -> float:
    return q.q if isinstance(q, QValue) else QValue(q).q


def q_number(x: float, q: QValue | float) -> float:
    """[x]_q = (q^x - q^-x) / (q - q^-1)."""
    q = _q(q)
    x = float(x)
    if x == 0:
        return 0.0
    return (q**x - q**-x) / (q - 1.0 / q)


def f_coefficient(j: HalfLike, m: HalfLike, direction: str, q: QValue | float) -> float:
    """Matrix element F^{+-}(j, m) = sqrt([j -+ m] [j +- m + 1]) of J_{+-}.

    ``direction`` is ``"+"`` (raising) or ``"-"`` (lowering).  Zero at the
    annihilation boundary.
    """
    j, m = half(j), half(m)
    if abs(m) > j or not (j - m).is_integer:
        raise ValueError(f"invalid weight m={m} for j={j}")
    if direction not in ("+", "-"):
        raise ValueError(f"direction must be '+' or '-', got {direction!r}")
    sm = m if direction == "+" else -m
    a = float(j - sm)
    b = float(j + sm + 1)
    prod = q_number(a, q) * q_number(b, q)
    return math.sqrt(prod) if prod > 0 else 0.0


@dataclass
class LimitReport:
    """Relative deviations |ratio - 1| of the three leading-order asymptotics."""

    q: float
    q_numbers: dict[str, float] = field(default_factory=dict)
    f_coefficients: dict[str, float] = field(default_factory=dict)
    casimir: dict[str, float] = field(default_factory=dict)

    def max_deviation(self) -> float:
        values = [*self.q_numbers.values(), *self.f_coefficients.values(), *self.casimir.values()]
        return max(values, default=0.0)

    def failures(self, tol: float) -> list[str]:
        out = []
        for name, table in (("qnum", self.q_numbers), ("F", self.f_coefficients), ("casimir", self.casimir)):
            out.extend(f"{name}[{k}]={v:.3e}" for k, v in table.items() if v > tol)
        return out

    def to_dict(self) -> dict:
        return asdict(self)

    def to_text(self, tol: float | None = None) -> str:
        lines = [f"q = {self.q:g}"]
        for title, table in (
            ("[x]_q / q^(1-x)", self.q_numbers),
            ("F(j,m) / q^(1/2-j)", self.f_coefficients),
            ("[j][j+1] / q^(1-2j)", self.casimir),
        ):
            lines.append(title)
            for key, dev in table.items():
                flag = "" if tol is None else ("  ok" if dev <= tol else "  EXCEEDS")
                lines.append(f"  {key:<14} |ratio-1| = {dev:.3e}{flag}")
        return "\n".join(lines)


def _spins_up_to(max_j: HalfInt) -> list[HalfInt]:
    return [HalfInt(t) for t in range(1, max_j.twice + 1)]


def limit_checks(q: QValue | float, max_x: int = 4, max_j: HalfLike = 2) -> LimitReport:
    """Deviation of each q-quantity from its q -> 0 leading term.

    Covers [x] for integer 1 <= x <= max_x, every non-vanishing F^{+-}(j, m)
    and [j][j+1] for 1/2 <= j <= max_j (integer and half-integer j).
    """
    qv = _q(q)
    max_j = half(max_j)
    report = LimitReport(q=qv)
    for x in range(1, max_x + 1):
        ratio = q_number(x, qv) / qv ** (1 - x)
        report.q_numbers[f"x={x}"] = abs(ratio - 1.0)
    for j in _spins_up_to(max_j):
        lead = qv ** (0.5 - float(j))
        for t in range(-j.twice, j.twice + 1, 2):
            m = HalfInt(t)
            for d in "+-":
                if (d == "+" and m == j) or (d == "-" and m == -j):
                    continue
                ratio = f_coefficient(j, m, d, qv) / lead
                report.f_coefficients[f"j={j},m={m},{d}"] = abs(ratio - 1.0)
        jf = float(j)
        ratio = q_number(jf, qv) * q_number(jf + 1, qv) / qv ** (1 - 2 * jf)
        report.casimir[f"j={j}"] = abs(ratio - 1.0)
    return report
